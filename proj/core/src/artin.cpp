#include "mcdeform/artin.hpp"

#include <algorithm>
#include <set>

#include "mcdeform/errors.hpp"

namespace mcdeform {

ArtinianLocalDGA::ArtinianLocalDGA(CommutativeDGA algebra, std::size_t unit, std::vector<std::size_t> m_basis)
    : algebra_(std::move(algebra)), unit_(unit), m_basis_(std::move(m_basis)) {}

std::optional<std::size_t> ArtinianLocalDGA::index_of(const std::string& label) const {
  for (std::size_t a = 0; a < dim(); ++a)
    if (algebra_.basis[a].label == label) return a;
  return std::nullopt;
}

std::optional<std::size_t> ArtinianLocalDGA::m_position(std::size_t a) const {
  auto it = std::find(m_basis_.begin(), m_basis_.end(), a);
  if (it == m_basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - m_basis_.begin());
}

ArtinianLocalDGA make_dual_numbers(int n) {
  if (n < 2) throw PreconditionFailed("dual numbers need n >= 2");
  const auto dim = static_cast<std::size_t>(n);
  CommutativeDGA alg;
  for (std::size_t k = 0; k < dim; ++k) {
    std::string label = k == 0 ? "1" : (k == 1 ? "eps" : "eps^" + std::to_string(k));
    alg.basis.push_back({label, 0});
  }
  alg.product.assign(dim * dim, SparseVector{});
  alg.differential.assign(dim, SparseVector{});
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if (a + b < dim) alg.product[a * dim + b].add(a + b, 1);
  std::vector<std::size_t> m;
  for (std::size_t k = 1; k < dim; ++k) m.push_back(k);
  return ArtinianLocalDGA(std::move(alg), 0, std::move(m));
}

const std::vector<Vec>& MFiltration::level(std::size_t j) const {
  static const std::vector<Vec> empty;
  if (j == 0 || j > levels.size()) return empty;
  return levels[j - 1];
}

std::optional<MFiltration> try_m_filtration(const ArtinianLocalDGA& r) {
  const std::size_t n = r.dim();
  const auto& alg = r.algebra();
  MFiltration f;
  std::vector<Vec> current;
  for (auto a : r.m_basis()) current.push_back(Vec::unit(n, a));
  if (!current.empty()) current = span_basis(current, n);
  f.levels.push_back(current);
  while (!current.empty()) {
    std::vector<Vec> products;
    for (const auto& v : current)
      for (auto a : r.m_basis()) {
        Vec p = alg.multiply(v, Vec::unit(n, a));
        if (!p.is_zero()) products.push_back(std::move(p));
      }
    std::vector<Vec> next = products.empty() ? std::vector<Vec>{} : span_basis(products, n);
    if (next.size() == current.size()) return std::nullopt;
    f.levels.push_back(next);
    current = std::move(next);
  }
  f.nilpotency_index = f.levels.size();
  return f;
}

MFiltration m_filtration(const ArtinianLocalDGA& r) {
  auto f = try_m_filtration(r);
  if (!f) throw PreconditionFailed("maximal ideal is not nilpotent");
  return *f;
}

bool is_square_zero(const ArtinianLocalDGA& r) {
  auto f = try_m_filtration(r);
  return f && f->nilpotency_index <= 2;
}

ValidationReport validate_artinian(const ArtinianLocalDGA& r) {
  const std::size_t n = r.dim();
  const auto& alg = r.algebra();
  auto lbl = [&](std::size_t a) { return alg.basis[a].label; };

  if (alg.product.size() != n * n || alg.differential.size() != n || r.unit() >= n)
    return ValidationReport::fail("shape", {}, "structure tables do not match the basis");
  for (const auto& p : alg.product)
    for (const auto& [i, x] : p)
      if (i >= n) return ValidationReport::fail("shape", {}, "product references unknown basis index");
  for (const auto& p : alg.differential)
    for (const auto& [i, x] : p)
      if (i >= n) return ValidationReport::fail("shape", {}, "differential references unknown basis index");

  for (std::size_t a = 0; a < n; ++a)
    if (alg.basis[a].degree > 0)
      return ValidationReport::fail("degree", {lbl(a)}, "basis element in positive degree");
  if (alg.basis[r.unit()].degree != 0)
    return ValidationReport::fail("degree", {lbl(r.unit())}, "unit is not in degree 0");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [i, x] : alg.mul(a, b))
        if (alg.basis[i].degree != alg.basis[a].degree + alg.basis[b].degree)
          return ValidationReport::fail("degree", {lbl(a), lbl(b)}, "product is not homogeneous");
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& [i, x] : alg.differential[a])
      if (alg.basis[i].degree != alg.basis[a].degree + 1)
        return ValidationReport::fail("degree", {lbl(a)}, "differential does not raise degree by one");

  // Residue field: basis = {unit} u m, so R/m is Q in degree 0.
  {
    std::set<std::size_t> m(r.m_basis().begin(), r.m_basis().end());
    if (m.size() != r.m_basis().size() || m.count(r.unit()) || m.size() + 1 != n ||
        std::any_of(m.begin(), m.end(), [n](std::size_t a) { return a >= n; }))
      return ValidationReport::fail("residue_field", {},
                                    "m-basis must consist of every basis element except the unit");
  }

  for (std::size_t a = 0; a < n; ++a) {
    Vec ea = Vec::unit(n, a);
    if (!(alg.mul(r.unit(), a).to_dense(n) == ea) || !(alg.mul(a, r.unit()).to_dense(n) == ea))
      return ValidationReport::fail("unit", {lbl(a)}, "1*x != x or x*1 != x");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Vec ab = alg.mul(a, b).to_dense(n);
      Vec ba = alg.mul(b, a).to_dense(n);
      if (!(ab == Rational(koszul_sign(alg.basis[a].degree, alg.basis[b].degree)) * ba))
        return ValidationReport::fail("commutativity", {lbl(a), lbl(b)}, "ab != (-1)^{|a||b|} ba");
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vec left = alg.multiply(alg.mul(a, b).to_dense(n), Vec::unit(n, c));
        Vec right = alg.multiply(Vec::unit(n, a), alg.mul(b, c).to_dense(n));
        if (!(left == right))
          return ValidationReport::fail("associativity", {lbl(a), lbl(b), lbl(c)}, "(ab)c != a(bc)");
      }

  for (std::size_t a = 0; a < n; ++a)
    if (!alg.d(alg.differential[a].to_dense(n)).is_zero())
      return ValidationReport::fail("d_squared", {lbl(a)}, "d(d(x)) != 0");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec lhs = alg.d(alg.mul(a, b).to_dense(n));
      Vec rhs = alg.multiply(alg.differential[a].to_dense(n), Vec::unit(n, b));
      Vec t = alg.multiply(Vec::unit(n, a), alg.differential[b].to_dense(n));
      if (alg.basis[a].degree % 2 == 0) rhs += t; else rhs -= t;
      if (!(lhs == rhs))
        return ValidationReport::fail("leibniz", {lbl(a), lbl(b)}, "d(ab) != d(a)b + (-1)^{|a|} a d(b)");
    }

  for (auto m : r.m_basis()) {
    for (std::size_t a = 0; a < n; ++a)
      if (alg.mul(a, m).get(r.unit()) != 0 || alg.mul(m, a).get(r.unit()) != 0)
        return ValidationReport::fail("ideal", {lbl(a), lbl(m)}, "product with m leaves m");
    if (alg.differential[m].get(r.unit()) != 0)
      return ValidationReport::fail("ideal", {lbl(m)}, "d(m) is not contained in m");
  }

  if (!try_m_filtration(r))
    return ValidationReport::fail("nilpotency", {}, "powers of m stabilize at a nonzero ideal");
  return ValidationReport::pass();
}

CommutativeDGA maximal_ideal(const ArtinianLocalDGA& r) {
  const auto& alg = r.algebra();
  const auto& mb = r.m_basis();
  const std::size_t k = mb.size();
  CommutativeDGA m;
  for (auto a : mb) m.basis.push_back(alg.basis[a]);
  m.product.assign(k * k, SparseVector{});
  m.differential.assign(k, SparseVector{});
  auto pos = [&](std::size_t i) {
    auto p = r.m_position(i);
    if (!p) throw PreconditionFailed("maximal ideal is not closed");
    return *p;
  };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b)
      for (const auto& [i, x] : alg.mul(mb[a], mb[b])) m.product[a * k + b].add(pos(i), x);
    for (const auto& [i, x] : alg.differential[mb[a]]) m.differential[a].add(pos(i), x);
  }
  return m;
}

}  // namespace mcdeform
