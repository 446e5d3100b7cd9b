#include "mcdeform/simplicial.hpp"

#include <numeric>
#include <string>

#include "mcdeform/errors.hpp"

namespace mcdeform {

namespace {

using Table = std::vector<std::vector<std::size_t>>;

std::string where(const char* id, std::size_t n, std::size_t x) {
  return std::string(id) + " at level " + std::to_string(n) + ", simplex " + std::to_string(x);
}

Table identity_tables(std::size_t count, std::size_t size) {
  std::vector<std::size_t> id(size);
  std::iota(id.begin(), id.end(), 0);
  return Table(count, id);
}

}  // namespace

ValidationReport validate_simplicial(const FiniteSimplicialSet& x) {
  const std::size_t top = x.top_level();
  if (x.faces.size() != x.sizes.size() || x.degeneracies.size() != x.sizes.size())
    return ValidationReport::fail("shape", {}, "face/degeneracy tables must have one entry per level");
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t nf = n == 0 ? 0 : n + 1;
    if (x.faces[n].size() != nf) return ValidationReport::fail("shape", {"level " + std::to_string(n)}, "face count");
    for (const auto& t : x.faces[n])
      if (t.size() != x.sizes[n]) return ValidationReport::fail("shape", {"level " + std::to_string(n)}, "face table size");
    const std::size_t ns = n < top ? n + 1 : 0;
    if (x.degeneracies[n].size() != ns)
      return ValidationReport::fail("shape", {"level " + std::to_string(n)}, "degeneracy count");
    for (const auto& t : x.degeneracies[n])
      if (t.size() != x.sizes[n]) return ValidationReport::fail("shape", {"level " + std::to_string(n)}, "degeneracy table size");
  }
  const auto& d = x.faces;
  const auto& s = x.degeneracies;
  for (std::size_t n = 2; n <= top; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        for (std::size_t e = 0; e < x.sizes[n]; ++e)
          if (d[n - 1][i][d[n][j][e]] != d[n - 1][j - 1][d[n][i][e]])
            return ValidationReport::fail("face_face", {where("d_i d_j", n, e)}, "d_i d_j != d_{j-1} d_i");
  for (std::size_t n = 0; n + 2 <= top; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        for (std::size_t e = 0; e < x.sizes[n]; ++e)
          if (s[n + 1][i][s[n][j][e]] != s[n + 1][j + 1][s[n][i][e]])
            return ValidationReport::fail("degeneracy_degeneracy", {where("s_i s_j", n, e)}, "s_i s_j != s_{j+1} s_i");
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i)
        for (std::size_t e = 0; e < x.sizes[n]; ++e) {
          const std::size_t lhs = d[n + 1][i][s[n][j][e]];
          std::size_t rhs;
          if (i == j || i == j + 1) {
            rhs = e;
          } else if (i < j) {
            rhs = s[n - 1][j - 1][d[n][i][e]];
          } else {
            rhs = s[n - 1][j][d[n][i - 1][e]];
          }
          if (lhs != rhs) return ValidationReport::fail("face_degeneracy", {where("d_i s_j", n, e)}, "mixed identity fails");
        }
  return ValidationReport::pass();
}

std::size_t pi0(const FiniteSimplicialSet& x) {
  if (x.sizes.empty()) return 0;
  std::vector<std::size_t> parent(x.sizes[0]);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  if (x.top_level() >= 1)
    for (std::size_t e = 0; e < x.sizes[1]; ++e) parent[find(x.faces[1][0][e])] = find(x.faces[1][1][e]);
  std::size_t count = 0;
  for (std::size_t a = 0; a < parent.size(); ++a)
    if (find(a) == a) ++count;
  return count;
}

FiniteGroupoid group_groupoid(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw PreconditionFailed("a group has at least one element");
  FiniteGroupoid g;
  g.objects = 1;
  g.arrows.assign(n, {0, 0});
  g.identity = {0};
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw ShapeMismatch("multiplication table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw ShapeMismatch("multiplication table entry out of range");
      g.compose[{a, b}] = table[a][b];
    }
  }
  return g;
}

FiniteGroupoid discrete_groupoid(std::size_t objects) {
  FiniteGroupoid g;
  g.objects = objects;
  for (std::size_t a = 0; a < objects; ++a) {
    g.arrows.push_back({a, a});
    g.identity.push_back(a);
    g.compose[{a, a}] = a;
  }
  return g;
}

FiniteGroupoid codiscrete_groupoid(const std::vector<std::size_t>& class_of) {
  FiniteGroupoid g;
  g.objects = class_of.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow;
  for (std::size_t a = 0; a < g.objects; ++a)
    for (std::size_t b = 0; b < g.objects; ++b)
      if (class_of[a] == class_of[b]) {
        arrow[{a, b}] = g.arrows.size();
        g.arrows.push_back({a, b});
      }
  for (std::size_t a = 0; a < g.objects; ++a) g.identity.push_back(arrow.at({a, a}));
  for (const auto& [ab, f] : arrow)
    for (const auto& [bc, h] : arrow)
      if (ab.second == bc.first) g.compose[{h, f}] = arrow.at({ab.first, bc.second});
  return g;
}

FiniteSimplicialSet finite_nerve(const FiniteGroupoid& g, std::size_t levels) {
  // Level 0 simplices are objects; level n >= 1 simplices are arrow strings.
  std::vector<std::vector<std::vector<std::size_t>>> simplices(levels + 1);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup(levels + 1);
  for (std::size_t o = 0; o < g.objects; ++o) {
    lookup[0][{o}] = o;
    simplices[0].push_back({o});
  }
  if (levels >= 1)
    for (std::size_t f = 0; f < g.arrows.size(); ++f) {
      lookup[1][{f}] = f;
      simplices[1].push_back({f});
    }
  for (std::size_t n = 2; n <= levels; ++n)
    for (const auto& str : simplices[n - 1])
      for (std::size_t f = 0; f < g.arrows.size(); ++f) {
        if (g.arrows[f].source != g.arrows[str.back()].target) continue;
        auto next = str;
        next.push_back(f);
        lookup[n][next] = simplices[n].size();
        simplices[n].push_back(std::move(next));
      }

  auto compose = [&](std::size_t second, std::size_t first) {
    auto it = g.compose.find({second, first});
    if (it == g.compose.end()) throw PreconditionFailed("groupoid composition table is incomplete");
    return it->second;
  };
  auto vertex = [&](const std::vector<std::size_t>& str, std::size_t k) {
    return k == 0 ? g.arrows[str[0]].source : g.arrows[str[k - 1]].target;
  };

  FiniteSimplicialSet x;
  x.faces.resize(levels + 1);
  x.degeneracies.resize(levels + 1);
  for (std::size_t n = 0; n <= levels; ++n) x.sizes.push_back(simplices[n].size());

  for (std::size_t n = 1; n <= levels; ++n) {
    x.faces[n].assign(n + 1, std::vector<std::size_t>(x.sizes[n]));
    for (std::size_t e = 0; e < x.sizes[n]; ++e) {
      const auto& str = simplices[n][e];
      if (n == 1) {
        x.faces[1][0][e] = g.arrows[str[0]].target;
        x.faces[1][1][e] = g.arrows[str[0]].source;
        continue;
      }
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> face;
        if (i == 0) {
          face.assign(str.begin() + 1, str.end());
        } else if (i == n) {
          face.assign(str.begin(), str.end() - 1);
        } else {
          face.assign(str.begin(), str.begin() + static_cast<long>(i) - 1);
          face.push_back(compose(str[i], str[i - 1]));
          face.insert(face.end(), str.begin() + static_cast<long>(i) + 1, str.end());
        }
        x.faces[n][i][e] = lookup[n - 1].at(face);
      }
    }
  }
  for (std::size_t n = 0; n < levels; ++n) {
    x.degeneracies[n].assign(n + 1, std::vector<std::size_t>(x.sizes[n]));
    for (std::size_t e = 0; e < x.sizes[n]; ++e) {
      const auto& str = simplices[n][e];
      if (n == 0) {
        x.degeneracies[0][0][e] = lookup[1].at({g.identity[str[0]]});
        continue;
      }
      for (std::size_t i = 0; i <= n; ++i) {
        auto deg = str;
        deg.insert(deg.begin() + static_cast<long>(i), g.identity[vertex(str, i)]);
        x.degeneracies[n][i][e] = lookup[n + 1].at(deg);
      }
    }
  }
  return x;
}

BisimplicialSet constant_bisimplicial(const FiniteSimplicialSet& x) {
  const std::size_t levels = x.sizes.size();
  BisimplicialSet b;
  b.sizes.assign(levels, x.sizes);
  b.h_faces.resize(levels);
  b.v_faces.resize(levels);
  b.h_degeneracies.resize(levels);
  b.v_degeneracies.resize(levels);
  for (std::size_t p = 0; p < levels; ++p) {
    b.h_faces[p].resize(levels);
    b.v_faces[p] = x.faces;
    b.h_degeneracies[p].resize(levels);
    b.v_degeneracies[p] = x.degeneracies;
    for (std::size_t q = 0; q < levels; ++q) {
      if (p >= 1) b.h_faces[p][q] = identity_tables(p + 1, x.sizes[q]);
      if (p + 1 < levels) b.h_degeneracies[p][q] = identity_tables(p + 1, x.sizes[q]);
    }
  }
  return b;
}

FiniteSimplicialSet diagonal(const BisimplicialSet& b) {
  const std::size_t levels = b.sizes.size();
  FiniteSimplicialSet x;
  x.faces.resize(levels);
  x.degeneracies.resize(levels);
  for (std::size_t n = 0; n < levels; ++n) x.sizes.push_back(b.sizes[n][n]);
  for (std::size_t n = 1; n < levels; ++n) {
    x.faces[n].assign(n + 1, std::vector<std::size_t>(x.sizes[n]));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t e = 0; e < x.sizes[n]; ++e)
        x.faces[n][i][e] = b.h_faces[n][n - 1][i][b.v_faces[n][n][i][e]];
  }
  for (std::size_t n = 0; n + 1 < levels; ++n) {
    x.degeneracies[n].assign(n + 1, std::vector<std::size_t>(x.sizes[n]));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t e = 0; e < x.sizes[n]; ++e)
        x.degeneracies[n][i][e] = b.h_degeneracies[n][n + 1][i][b.v_degeneracies[n][n][i][e]];
  }
  return x;
}

}  // namespace mcdeform
