#ifndef MCDEFORM_TEST_SUPPORT_HPP
#define MCDEFORM_TEST_SUPPORT_HPP

// Hand-rolled generators, fixtures and brute-force oracles shared by the
// unit and acceptance suites. Everything is seeded; no test depends on
// wall-clock randomness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mcdeform/artin.hpp"
#include "mcdeform/deform.hpp"
#include "mcdeform/deligne.hpp"
#include "mcdeform/dgla.hpp"
#include "mcdeform/forms.hpp"
#include "mcdeform/graded.hpp"
#include "mcdeform/matrix.hpp"
#include "mcdeform/mc.hpp"

namespace mcdeform::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Small rational, numerator in [-range, range], denominator in {1, 2, 3}.
inline Rational small_rational(Rng& rng, long range = 3, bool fractions = true) {
  Rational q(uniform(rng, -range, range));
  if (fractions) q /= uniform(rng, 1, 3);
  return q;
}

inline Vec random_vec(Rng& rng, std::size_t n, int zero_percent = 30) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (uniform(rng, 0, 99) >= zero_percent) v[i] = small_rational(rng);
  return v;
}

inline QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int zero_percent = 30) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (uniform(rng, 0, 99) >= zero_percent) m(r, c) = small_rational(rng);
  return m;
}

/// Random element of GL_n(Q): permuted unitriangular times diagonal.
inline QMatrix random_invertible(Rng& rng, std::size_t n) {
  QMatrix l = QMatrix::identity(n), u = QMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) l(r, c) = small_rational(rng, 2, false);
      if (r < c) u(r, c) = small_rational(rng, 2, false);
      if (r == c) u(r, c) = uniform(rng, 0, 1) ? Rational(uniform(rng, 1, 3)) : Rational(-1, 2);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  QMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return p * l * u;
}

inline Vec random_homogeneous(Rng& rng, const DGLA& g, int degree, int zero_percent = 30) {
  Vec v = g.zero();
  for (auto i : g.indices_in_degree(degree))
    if (uniform(rng, 0, 99) >= zero_percent) v[i] = small_rational(rng);
  return v;
}

/// Complex with known cohomology: a direct sum of copies of Q[i] (free) and
/// Q[i] -> Q[i+1] (pairs), conjugated by random automorphisms per degree.
struct KnownComplex {
  ChainComplex complex;
  std::map<int, std::size_t> homology;
};

inline KnownComplex random_complex(Rng& rng, int lo, int hi, std::size_t max_per_degree = 2) {
  std::map<int, std::size_t> free, pairs_from;
  for (int i = lo; i <= hi; ++i) {
    free[i] = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_per_degree)));
    pairs_from[i] = i < hi ? static_cast<std::size_t>(uniform(rng, 0, 1)) : 0;
  }
  std::map<int, std::size_t> dim;
  for (int i = lo; i <= hi; ++i) dim[i] = free[i] + pairs_from[i] + (i > lo ? pairs_from[i - 1] : 0);
  std::map<int, std::vector<std::string>> labels;
  for (int i = lo; i <= hi; ++i)
    for (std::size_t k = 0; k < dim[i]; ++k) labels[i].push_back("c" + std::to_string(i) + "_" + std::to_string(k));
  // Basis layout per degree: [free | sources of pairs | targets of pairs].
  std::map<int, QMatrix> change;
  for (int i = lo; i <= hi; ++i) change[i] = random_invertible(rng, dim[i]);
  std::map<int, QMatrix> d;
  for (int i = lo; i < hi; ++i) {
    if (dim[i] == 0 || dim[i + 1] == 0) continue;
    QMatrix e(dim[i + 1], dim[i]);
    for (std::size_t p = 0; p < pairs_from[i]; ++p) e(free[i + 1] + pairs_from[i + 1] + p, free[i] + p) = 1;
    d.emplace(i, change[i + 1] * e * *inverse(change[i]));
  }
  KnownComplex out{ChainComplex(GradedVectorSpace(labels), d), {}};
  for (int i = lo; i <= hi; ++i) out.homology[i] = free[i];
  return out;
}

/// Builder with labels instead of indices.
struct DglaSpec {
  std::vector<std::pair<std::string, int>> basis;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rational>>>> d;
  std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, Rational>>>> brackets;
};

inline DGLA build(const DglaSpec& s) {
  std::vector<Generator> gens;
  std::map<std::string, std::size_t> idx;
  for (const auto& [l, deg] : s.basis) {
    idx[l] = gens.size();
    gens.push_back({l, deg});
  }
  std::vector<SparseVector> diff(gens.size());
  for (const auto& [l, terms] : s.d)
    for (const auto& [t, c] : terms) diff[idx.at(l)].add(idx.at(t), c);
  BracketDeclarations br;
  for (const auto& [a, b, terms] : s.brackets) {
    SparseVector v;
    for (const auto& [t, c] : terms) v.add(idx.at(t), c);
    br[{idx.at(a), idx.at(b)}] = v;
  }
  return DGLA(gens, diff, br);
}

inline DGLA abelian_dgla(const std::vector<int>& degrees) {
  DglaSpec s;
  for (std::size_t i = 0; i < degrees.size(); ++i) s.basis.push_back({"v" + std::to_string(i), degrees[i]});
  return build(s);
}

/// Degree-0 Lie algebra [x, y] = y.
inline DGLA affine_lie() { return build({{{"x", 0}, {"y", 0}}, {}, {{"x", "y", {{"y", 1}}}}}); }

inline DGLA sl2() {
  return build({{{"e", 0}, {"f", 0}, {"h", 0}},
                {},
                {{"e", "f", {{"h", 1}}}, {"h", "e", {{"e", 2}}}, {"h", "f", {{"f", -2}}}}});
}

/// Heisenberg algebra [p, q] = c in degree 0.
inline DGLA heisenberg() { return build({{{"p", 0}, {"q", 0}, {"c", 0}}, {}, {{"p", "q", {{"c", 1}}}}}); }

/// x in degree 1, y in degree 2, [x, x] = y, d = 0; with_u adds u in degree 1, du = y.
inline DGLA obstruction_fixture(bool with_u) {
  DglaSpec s{{{"x", 1}, {"y", 2}}, {}, {{"x", "x", {{"y", 1}}}}};
  if (with_u) {
    s.basis.push_back({"u", 1});
    s.d.push_back({"u", {{"y", 1}}});
  }
  return build(s);
}

/// h in degree 0 acting on x (degree 1) and y = [x, x] (degree 2), plus
/// u in degree 1 with du = y so that the MC equation has interesting solutions.
inline DGLA graded_fixture() {
  return build({{{"h", 0}, {"x", 1}, {"u", 1}, {"y", 2}},
                {{"u", {{"y", 1}}}},
                {{"h", "x", {{"x", 1}}}, {"h", "u", {{"u", 2}}}, {"h", "y", {{"y", 2}}}, {"x", "x", {{"y", 1}}}}});
}

/// Strictly upper triangular n x n matrices, degree 0, with the commutator.
inline DGLA upper_triangular(int n) {
  DglaSpec s;
  auto name = [](int i, int j) { return "E" + std::to_string(i) + std::to_string(j); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.basis.push_back({name(i, j), 0});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
          std::vector<std::pair<std::string, Rational>> terms;
          if (j == k) terms.push_back({name(i, l), 1});
          if (l == i) terms.push_back({name(k, j), -1});
          if (!terms.empty()) s.brackets.push_back({name(i, j), name(k, l), terms});
        }
  return build(s);
}

/// u in degree k, v in degree k + 1, du = v: acyclic.
inline DGLA contractible_pair(int k, const std::string& prefix = "c") {
  return build({{{prefix + "u", k}, {prefix + "v", k + 1}}, {{prefix + "u", {{prefix + "v", 1}}}}, {}});
}

inline ChainComplex make_complex(std::map<int, std::vector<std::string>> labels, std::map<int, QMatrix> d = {}) {
  return ChainComplex(GradedVectorSpace(std::move(labels)), std::move(d));
}

/// Q in degrees -1 and 0, zero differential.
inline ChainComplex two_degree_complex() { return make_complex({{-1, {"a"}}, {0, {"b"}}}); }
/// Q --id--> Q in degrees -1, 0.
inline ChainComplex identity_complex() { return make_complex({{-1, {"a"}}, {0, {"b"}}}, {{-1, QMatrix{{1}}}}); }
inline ChainComplex point_complex() { return make_complex({{0, {"a"}}}); }

// ---- oracles ---------------------------------------------------------------

/// Graded Jacobi on every ordered triple of basis vectors.
inline bool jacobi_all_triples(const DGLA& g) {
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec xa = Vec::unit(n, a), xb = Vec::unit(n, b), xc = Vec::unit(n, c);
        const int da = g.degree(a), db = g.degree(b), dc = g.degree(c);
        Vec j = Rational(koszul_sign(da, dc)) * g.bracket(xa, g.bracket(xb, xc)) +
                Rational(koszul_sign(db, da)) * g.bracket(xb, g.bracket(xc, xa)) +
                Rational(koszul_sign(dc, db)) * g.bracket(xc, g.bracket(xa, xb));
        if (!j.is_zero()) return false;
      }
  return true;
}

/// exp of a nilpotent matrix.
inline QMatrix matrix_exp(const QMatrix& a) {
  QMatrix out = QMatrix::identity(a.rows()), term = out;
  for (unsigned k = 1; k <= a.rows() + 1; ++k) {
    term = Rational(1) / k * (term * a);
    if (term.is_zero()) break;
    out = out + term;
  }
  return out;
}

/// log of a unipotent matrix.
inline QMatrix matrix_log(const QMatrix& u) {
  const QMatrix n = u - QMatrix::identity(u.rows());
  QMatrix out(u.rows(), u.cols()), power = n;
  for (unsigned k = 1; k <= u.rows() + 1 && !power.is_zero(); ++k) {
    out = out + Rational(k % 2 == 1 ? 1 : -1) / k * power;
    power = power * n;
  }
  return out;
}

/// Strictly upper triangular element of upper_triangular(n) as a matrix.
inline QMatrix as_upper_matrix(int n, const Vec& v) {
  QMatrix m(n, n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = v[k++];
  return m;
}

inline Vec from_upper_matrix(const QMatrix& m) {
  std::vector<Rational> out;
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(m(i, j));
  return Vec(out);
}

/// sum_i dim A^i dim B^{i+k}.
inline std::size_t hom_dim_by_counting(const ChainComplex& a, const ChainComplex& b, int k) {
  std::size_t total = 0;
  for (int i : a.degrees()) total += a.dim(i) * b.dim(i + k);
  return total;
}

inline std::size_t rank_of(const std::vector<Vec>& vs, std::size_t ambient) { return span_basis(vs, ambient).size(); }

/// Random MC element of m (x) g for truncated polynomial rings: a random
/// first-order cocycle, lifted order by order and moved by a random gauge.
/// nullopt when the lift is obstructed.
inline std::optional<Vec> random_mc(Rng& rng, const ArtinHost& h, bool apply_gauge = true) {
  const DGLA& host = h.host();
  std::vector<Vec> level1 = h.filtration_basis(1, 1);
  std::vector<Vec> first;
  {
    // Cocycles of (m / m^2) (x) g in degree 1.
    std::vector<Vec> cols;
    for (const auto& v : level1) cols.push_back(host.differential(v));
    auto level2 = h.filtration_basis(2, 2);
    cols.insert(cols.end(), level2.begin(), level2.end());
    if (!level1.empty()) {
      auto ker = cols.empty() ? std::vector<Vec>() : kernel_basis(QMatrix::from_columns(host.dim(), cols));
      for (const auto& k : ker) {
        Vec z = host.zero();
        for (std::size_t i = 0; i < level1.size(); ++i) z += k[i] * level1[i];
        if (!h.in_filtration(z, 2)) first.push_back(z);
      }
    }
  }
  Vec z = host.zero();
  for (const auto& f : first)
    if (uniform(rng, 0, 2) > 0) z += small_rational(rng) * f;
  auto steps = lift(h, z, h.filtration().nilpotency_index);
  if (steps.back().obstructed) return std::nullopt;
  z = *steps.back().lifted;
  if (!is_mc(h, z)) return std::nullopt;
  if (apply_gauge) z = gauge_act(h, random_homogeneous(rng, host, 0), z);
  return z;
}

inline SullivanForm random_form(Rng& rng, int n, int max_poly_degree, int terms, int bound = kDefaultFormDegreeBound) {
  SullivanForm w(n, bound);
  for (int t = 0; t < terms; ++t) {
    FormMonomial m;
    m.exponents.assign(static_cast<std::size_t>(n), 0);
    int budget = static_cast<int>(uniform(rng, 0, max_poly_degree));
    for (int j = 0; j < n && budget > 0; ++j) {
      int e = static_cast<int>(uniform(rng, 0, budget));
      m.exponents[static_cast<std::size_t>(j)] = e;
      budget -= e;
    }
    m.dt_mask = static_cast<std::uint32_t>(uniform(rng, 0, (1L << n) - 1));
    w.add_term(m, small_rational(rng));
  }
  return w;
}

inline SullivanForm random_homogeneous_form(Rng& rng, int n, int form_degree, int max_poly_degree, int terms) {
  SullivanForm w(n);
  for (int t = 0; t < terms; ++t) {
    SullivanForm x = random_form(rng, n, max_poly_degree, 1);
    for (const auto& [m, c] : x.terms())
      if (m.form_degree() == form_degree) w.add_term(m, c);
  }
  return w;
}

}  // namespace mcdeform::testing

#endif  // MCDEFORM_TEST_SUPPORT_HPP
