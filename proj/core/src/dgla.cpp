#include "mcdeform/dgla.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "mcdeform/errors.hpp"

namespace mcdeform {

DGLA::DGLA(std::vector<Generator> basis, std::vector<SparseVector> differential,
           BracketDeclarations brackets)
    : basis_(std::move(basis)), differential_(std::move(differential)), declared_(std::move(brackets)) {
  const std::size_t n = basis_.size();
  if (differential_.size() != n) throw ShapeMismatch("differential must have one entry per basis element");
  for (const auto& d : differential_)
    for (const auto& [i, x] : d)
      if (i >= n) throw ShapeMismatch("differential references basis index out of range");
  table_.assign(n * n, SparseVector{});
  for (const auto& [key, value] : declared_) {
    const auto [a, b] = key;
    if (a >= n || b >= n) throw ShapeMismatch("bracket declared for basis index out of range");
    for (const auto& [i, x] : value)
      if (i >= n) throw ShapeMismatch("bracket value references basis index out of range");
    table_[a * n + b] = value;
  }
  for (const auto& [key, value] : declared_) {
    const auto [a, b] = key;
    if (a == b || declared_.count({b, a})) continue;
    table_[b * n + a] = value.scaled(Rational(-koszul_sign(degree(a), degree(b))));
  }
}

std::optional<std::size_t> DGLA::index_of(const std::string& label) const {
  for (std::size_t a = 0; a < dim(); ++a)
    if (basis_[a].label == label) return a;
  return std::nullopt;
}

std::vector<std::size_t> DGLA::indices_in_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < dim(); ++a)
    if (basis_[a].degree == degree) out.push_back(a);
  return out;
}

std::vector<int> DGLA::degrees() const {
  std::set<int> degs;
  for (const auto& g : basis_) degs.insert(g.degree);
  return {degs.begin(), degs.end()};
}

Vec DGLA::differential(const Vec& x) const {
  if (x.size() != dim()) throw ShapeMismatch("element has wrong dimension");
  Vec out(dim());
  for (std::size_t a = 0; a < dim(); ++a)
    if (x[a] != 0) differential_[a].axpy_into(out, x[a]);
  return out;
}

Vec DGLA::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw ShapeMismatch("element has wrong dimension");
  Vec out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (y[b] == 0) continue;
      const auto& t = table_[a * dim() + b];
      if (!t.empty()) t.axpy_into(out, x[a] * y[b]);
    }
  }
  return out;
}

Vec DGLA::bracket_with_basis(std::size_t a, const Vec& y) const {
  Vec out(dim());
  for (std::size_t b = 0; b < dim(); ++b) {
    if (y[b] == 0) continue;
    const auto& t = table_[a * dim() + b];
    if (!t.empty()) t.axpy_into(out, y[b]);
  }
  return out;
}

bool DGLA::is_homogeneous(const Vec& x, int degree) const {
  if (x.size() != dim()) return false;
  for (std::size_t a = 0; a < dim(); ++a)
    if (x[a] != 0 && basis_[a].degree != degree) return false;
  return true;
}

ChainComplex DGLA::underlying_complex() const {
  std::map<int, std::vector<std::string>> comps;
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t a = 0; a < dim(); ++a) {
    comps[basis_[a].degree].push_back(basis_[a].label);
    members[basis_[a].degree].push_back(a);
  }
  std::vector<std::size_t> position(dim());
  for (const auto& [deg, idx] : members)
    for (std::size_t p = 0; p < idx.size(); ++p) position[idx[p]] = p;

  std::map<int, QMatrix> diff;
  for (const auto& [deg, idx] : members) {
    auto next = members.find(deg + 1);
    if (next == members.end()) continue;
    QMatrix m(next->second.size(), idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (const auto& [i, x] : differential_[idx[p]])
        if (basis_[i].degree == deg + 1) m(position[i], p) = x;
    diff.emplace(deg, std::move(m));
  }
  return ChainComplex(GradedVectorSpace(std::move(comps)), std::move(diff));
}

namespace {

std::string describe(const Vec& v, const DGLA& g) {
  std::string s;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_string(v[a]) + "*" + g.label(a);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

ValidationReport validate_dgla(const DGLA& g) {
  const std::size_t n = g.dim();
  // Degree compatibility.
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& [i, x] : g.d_basis(a))
      if (g.degree(i) != g.degree(a) + 1)
        return ValidationReport::fail("degree", {g.label(a)},
                                      "d(" + g.label(a) + ") has a component in degree " +
                                          std::to_string(g.degree(i)));
  for (const auto& [key, value] : g.declared_brackets())
    for (const auto& [i, x] : value)
      if (g.degree(i) != g.degree(key.first) + g.degree(key.second))
        return ValidationReport::fail("degree", {g.label(key.first), g.label(key.second)},
                                      "bracket lands in degree " + std::to_string(g.degree(i)));

  // d^2 = 0.
  for (std::size_t a = 0; a < n; ++a) {
    Vec dd = g.differential(g.d_basis(a).to_dense(n));
    if (!dd.is_zero())
      return ValidationReport::fail("d_squared", {g.label(a)}, "d(d(" + g.label(a) + ")) = " + describe(dd, g));
  }

  // Antisymmetry: [x, y] + (-1)^{|x||y|} [y, x] = 0.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Vec s = g.bracket_basis(a, b).to_dense(n);
      g.bracket_basis(b, a).axpy_into(s, Rational(koszul_sign(g.degree(a), g.degree(b))));
      if (!s.is_zero())
        return ValidationReport::fail("antisymmetry", {g.label(a), g.label(b)},
                                      "[x,y] + (-1)^{|x||y|}[y,x] = " + describe(s, g));
    }

  // Leibniz: d[x, y] = [dx, y] + (-1)^{|x|} [x, dy].
  for (std::size_t a = 0; a < n; ++a) {
    Vec ea = Vec::unit(n, a);
    Vec da = g.d_basis(a).to_dense(n);
    for (std::size_t b = 0; b < n; ++b) {
      Vec eb = Vec::unit(n, b);
      Vec lhs = g.differential(g.bracket_basis(a, b).to_dense(n));
      Vec rhs = g.bracket(da, eb);
      Vec t = g.bracket_with_basis(a, g.d_basis(b).to_dense(n));
      if (g.degree(a) % 2 == 0) rhs += t; else rhs -= t;
      if (!(lhs == rhs))
        return ValidationReport::fail("leibniz", {g.label(a), g.label(b)},
                                      "d[x,y] - [dx,y] - (-1)^{|x|}[x,dy] = " + describe(lhs - rhs, g));
    }
  }

  // Jacobi, cyclic form. Given antisymmetry the cyclic sum is graded
  // symmetric in its arguments, so sorted triples suffice.
  std::vector<std::vector<Vec>> pair_cache(n);
  for (std::size_t a = 0; a < n; ++a) {
    pair_cache[a].resize(n);
    for (std::size_t b = 0; b < n; ++b) pair_cache[a][b] = g.bracket_basis(a, b).to_dense(n);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        const int x = g.degree(a), y = g.degree(b), z = g.degree(c);
        Vec j = Rational(koszul_sign(x, z)) * g.bracket_with_basis(a, pair_cache[b][c]);
        j += Rational(koszul_sign(y, x)) * g.bracket_with_basis(b, pair_cache[c][a]);
        j += Rational(koszul_sign(z, y)) * g.bracket_with_basis(c, pair_cache[a][b]);
        if (!j.is_zero())
          return ValidationReport::fail("jacobi", {g.label(a), g.label(b), g.label(c)},
                                        "graded Jacobiator = " + describe(j, g));
      }
  return ValidationReport::pass();
}

Vec CommutativeDGA::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b)
      if (y[b] != 0) mul(a, b).axpy_into(out, x[a] * y[b]);
  }
  return out;
}

Vec CommutativeDGA::d(const Vec& x) const {
  Vec out(dim());
  for (std::size_t a = 0; a < dim(); ++a)
    if (x[a] != 0) differential[a].axpy_into(out, x[a]);
  return out;
}

DGLA tensor_dgla(const CommutativeDGA& c, const DGLA& g) {
  const std::size_t nc = c.dim(), ng = g.dim();
  if (c.product.size() != nc * nc || c.differential.size() != nc)
    throw ShapeMismatch("commutative dg algebra tables have the wrong size");
  for (const auto& p : c.product)
    for (const auto& [i, x] : p)
      if (i >= nc) throw ShapeMismatch("product references basis index out of range");
  for (const auto& p : c.differential)
    for (const auto& [i, x] : p)
      if (i >= nc) throw ShapeMismatch("differential references basis index out of range");

  auto index = [ng](std::size_t ci, std::size_t xi) { return ci * ng + xi; };
  std::vector<Generator> basis;
  basis.reserve(nc * ng);
  for (std::size_t ci = 0; ci < nc; ++ci)
    for (std::size_t xi = 0; xi < ng; ++xi)
      basis.push_back({c.basis[ci].label + "*" + g.label(xi), c.basis[ci].degree + g.degree(xi)});

  std::vector<SparseVector> diff(nc * ng);
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const Rational sign = c.basis[ci].degree % 2 == 0 ? 1 : -1;
    for (std::size_t xi = 0; xi < ng; ++xi) {
      auto& out = diff[index(ci, xi)];
      for (const auto& [cj, v] : c.differential[ci]) out.add(index(cj, xi), v);
      for (const auto& [xj, v] : g.d_basis(xi)) out.add(index(ci, xj), sign * v);
    }
  }

  BracketDeclarations br;
  for (std::size_t ca = 0; ca < nc; ++ca)
    for (std::size_t cb = 0; cb < nc; ++cb) {
      const auto& prod = c.mul(ca, cb);
      if (prod.empty()) continue;
      for (std::size_t xa = 0; xa < ng; ++xa)
        for (std::size_t xb = 0; xb < ng; ++xb) {
          const auto& lie = g.bracket_basis(xa, xb);
          if (lie.empty()) continue;
          const Rational sign = koszul_sign(g.degree(xa), c.basis[cb].degree);
          SparseVector out;
          for (const auto& [ce, m] : prod)
            for (const auto& [xe, f] : lie) out.add(index(ce, xe), sign * m * f);
          if (!out.empty()) br.emplace(std::make_pair(index(ca, xa), index(cb, xb)), std::move(out));
        }
    }
  return DGLA(std::move(basis), std::move(diff), std::move(br));
}

DGLA end_dgla(const ChainComplex& a) {
  ChainComplex end = end_complex(a);
  const auto degrees = end.degrees();

  std::vector<Generator> basis;
  std::map<std::tuple<int, int, std::size_t, std::size_t>, std::size_t> index;  // (k, src deg, tgt idx, src idx)
  struct Unit {
    int k;
    HomUnit u;
  };
  std::vector<Unit> units;
  for (int k : degrees) {
    auto us = hom_basis(a, a, k);
    const auto& labels = end.space().labels(k);
    for (std::size_t p = 0; p < us.size(); ++p) {
      index[{k, us[p].source_degree, us[p].target_index, us[p].source_index}] = basis.size();
      basis.push_back({labels[p], k});
      units.push_back({k, us[p]});
    }
  }
  const std::size_t n = basis.size();

  // Differential from the Hom complex blocks.
  std::vector<SparseVector> diff(n);
  std::map<int, std::size_t> offset;
  {
    std::size_t off = 0;
    for (int k : degrees) {
      offset[k] = off;
      off += end.dim(k);
    }
  }
  for (int k : degrees) {
    if (end.dim(k + 1) == 0) continue;
    QMatrix m = end.d(k);
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, c) != 0) diff[offset[k] + c].add(offset[k + 1] + r, m(r, c));
  }

  // Graded commutator of matrix units.
  BracketDeclarations br;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto& e1 = units[p];
      const auto& e2 = units[q];
      SparseVector out;
      // e1 o e2: e2 maps (i2, s2) -> (i2 + k2, r2); e1 maps (i1, s1) -> (i1 + k1, r1).
      if (e2.u.source_degree + e2.k == e1.u.source_degree && e2.u.target_index == e1.u.source_index)
        out.add(index.at({e1.k + e2.k, e2.u.source_degree, e1.u.target_index, e2.u.source_index}), 1);
      if (e1.u.source_degree + e1.k == e2.u.source_degree && e1.u.target_index == e2.u.source_index)
        out.add(index.at({e1.k + e2.k, e1.u.source_degree, e2.u.target_index, e1.u.source_index}),
                Rational(-koszul_sign(e1.k, e2.k)));
      if (!out.empty()) br.emplace(std::make_pair(p, q), std::move(out));
    }
  return DGLA(std::move(basis), std::move(diff), std::move(br));
}

std::optional<std::size_t> nilpotency_class(const DGLA& g) {
  const std::size_t n = g.dim();
  if (n == 0) return 0;
  std::vector<Vec> current;
  for (std::size_t a = 0; a < n; ++a) current.push_back(Vec::unit(n, a));
  for (std::size_t c = 1;; ++c) {
    std::vector<Vec> brackets;
    for (const auto& v : current)
      for (std::size_t a = 0; a < n; ++a) {
        Vec w = g.bracket_with_basis(a, v);
        if (!w.is_zero()) brackets.push_back(std::move(w));
      }
    std::vector<Vec> next = brackets.empty() ? std::vector<Vec>{} : span_basis(brackets, n);
    if (next.empty()) return c;
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
  }
}

DGLA direct_product(const DGLA& g1, const DGLA& g2) {
  const std::size_t n1 = g1.dim(), n2 = g2.dim();
  bool clash = false;
  for (const auto& x : g2.basis())
    if (g1.index_of(x.label)) clash = true;
  std::vector<Generator> basis = g1.basis();
  for (const auto& x : g2.basis()) basis.push_back({clash ? "2:" + x.label : x.label, x.degree});
  std::vector<SparseVector> diff(n1 + n2);
  for (std::size_t a = 0; a < n1; ++a) diff[a] = g1.d_basis(a);
  for (std::size_t a = 0; a < n2; ++a)
    for (const auto& [i, x] : g2.d_basis(a)) diff[n1 + a].add(n1 + i, x);
  BracketDeclarations br;
  for (const auto& [key, v] : g1.declared_brackets()) br.emplace(key, v);
  for (const auto& [key, v] : g2.declared_brackets()) {
    SparseVector shifted;
    for (const auto& [i, x] : v) shifted.add(n1 + i, x);
    br.emplace(std::make_pair(n1 + key.first, n1 + key.second), std::move(shifted));
  }
  return DGLA(std::move(basis), std::move(diff), std::move(br));
}

GradedMap DGLAMorphism::chain_map() const {
  GradedMap f;
  f.degree = 0;
  for (int deg : source.degrees()) {
    auto src = source.indices_in_degree(deg);
    auto tgt = target.indices_in_degree(deg);
    if (tgt.empty()) continue;
    QMatrix m(tgt.size(), src.size());
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) m(r, c) = matrix(tgt[r], src[c]);
    f.blocks.emplace(deg, std::move(m));
  }
  return f;
}

ValidationReport validate_morphism(const DGLAMorphism& f) {
  const std::size_t ns = f.source.dim(), nt = f.target.dim();
  if (f.matrix.rows() != nt || f.matrix.cols() != ns)
    return ValidationReport::fail("shape", {}, "morphism matrix has the wrong shape");
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t s = 0; s < ns; ++s)
      if (f.matrix(t, s) != 0 && f.target.degree(t) != f.source.degree(s))
        return ValidationReport::fail("degree", {f.source.label(s), f.target.label(t)},
                                      "morphism does not preserve degree");
  for (std::size_t a = 0; a < ns; ++a) {
    Vec lhs = f.apply(f.source.d_basis(a).to_dense(ns));
    Vec rhs = f.target.differential(f.matrix.column(a));
    if (!(lhs == rhs))
      return ValidationReport::fail("differential", {f.source.label(a)}, "f(dx) != d(f x)");
  }
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b) {
      Vec lhs = f.apply(f.source.bracket_basis(a, b).to_dense(ns));
      Vec rhs = f.target.bracket(f.matrix.column(a), f.matrix.column(b));
      if (!(lhs == rhs))
        return ValidationReport::fail("bracket", {f.source.label(a), f.source.label(b)},
                                      "f[x,y] != [f x, f y]");
    }
  return ValidationReport::pass();
}

bool is_quasi_iso(const DGLAMorphism& f) {
  ChainComplex a = f.source.underlying_complex();
  ChainComplex b = f.target.underlying_complex();
  ChainComplex cone = mapping_cone(a, b, f.chain_map());
  for (int deg : cone.degrees())
    if (homology_dim(cone, deg) != 0) return false;
  return true;
}

DGLAMorphism identity_morphism(const DGLA& g) { return {g, g, QMatrix::identity(g.dim())}; }

DGLAMorphism zero_morphism(const DGLA& source, const DGLA& target) {
  return {source, target, QMatrix(target.dim(), source.dim())};
}

DGLAMorphism first_projection(const DGLA& g1, const DGLA& g2) {
  DGLA prod = direct_product(g1, g2);
  QMatrix m(g1.dim(), prod.dim());
  for (std::size_t a = 0; a < g1.dim(); ++a) m(a, a) = 1;
  return {std::move(prod), g1, std::move(m)};
}

}  // namespace mcdeform
