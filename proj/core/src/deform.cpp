#include "mcdeform/deform.hpp"

#include <stdexcept>

#include "mcdeform/errors.hpp"

namespace mcdeform {

namespace {

std::string first_nonzero(const DGLA& g, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return g.label(i) + " = " + to_string(v[i]);
  return "0";
}

// Nonzero entries of m only connect total degree n to n + shift.
bool has_degree(const DeformationSetting& s, const QMatrix& m, int shift) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && s.total_degree(r) != s.total_degree(c) + shift) return false;
  return true;
}

}  // namespace

DeformationSetting::DeformationSetting(ArtinianLocalDGA r, ChainComplex a)
    : host_(std::move(r), end_dgla(a)), a_(std::move(a)) {
  for (int deg : a_.degrees()) {
    a_offset_[deg] = a_degree_.size();
    for (const auto& l : a_.space().labels(deg)) {
      a_degree_.push_back(deg);
      a_label_.push_back(l);
    }
  }
  for (int k : end_complex(a_).degrees())
    for (const auto& u : hom_basis(a_, a_, k)) end_units_.push_back({k, u});
  if (end_units_.size() != end().dim()) throw std::logic_error("End(A) basis out of sync");

  const auto& alg = base().algebra();
  d0_ = QMatrix(total_dim(), total_dim());
  for (std::size_t r = 0; r < alg.dim(); ++r) {
    const int sign = alg.basis[r].degree % 2 == 0 ? 1 : -1;
    for (std::size_t x = 0; x < fiber_dim(); ++x) {
      for (const auto& [t, c] : alg.differential[r]) d0_(flat(t, x), flat(r, x)) += c;
      const int deg = a_degree_[x];
      const std::size_t local = x - a_offset_.at(deg);
      if (a_.dim(deg + 1) == 0) continue;
      const QMatrix d = a_.d(deg);
      for (std::size_t y = 0; y < d.rows(); ++y)
        if (d(y, local) != 0) d0_(flat(r, a_offset_.at(deg + 1) + y), flat(r, x)) += sign * d(y, local);
    }
  }
}

int DeformationSetting::total_degree(std::size_t i) const {
  return base().generator(i / fiber_dim()).degree + a_degree_[i % fiber_dim()];
}

std::string DeformationSetting::label(std::size_t i) const {
  return base().generator(i / fiber_dim()).label + "*" + a_label_[i % fiber_dim()];
}

void DeformationSetting::add_action(QMatrix& out, std::size_t r, std::size_t e, const Rational& c) const {
  const auto& alg = base().algebra();
  const auto& [k, u] = end_units_[e];
  const std::size_t src = a_offset_.at(u.source_degree) + u.source_index;
  const std::size_t tgt = a_offset_.at(u.source_degree + k) + u.target_index;
  for (std::size_t s = 0; s < alg.dim(); ++s) {
    const Rational signed_c = (k * alg.basis[s].degree) % 2 == 0 ? c : Rational(-c);
    for (const auto& [t, pc] : alg.mul(r, s)) out(flat(t, tgt), flat(s, src)) += signed_c * pc;
  }
}

QMatrix DeformationSetting::action(const Vec& x) const {
  if (x.size() != host_.host().dim()) throw ShapeMismatch("element does not match m (x) End(A)");
  QMatrix out(total_dim(), total_dim());
  const std::size_t ne = end().dim();
  const auto& mb = base().m_basis();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) add_action(out, mb[i / ne], i % ne, x[i]);
  return out;
}

QMatrix DeformationSetting::full_action(const Vec& coeffs) const {
  const std::size_t ne = end().dim();
  if (coeffs.size() != base().dim() * ne) throw ShapeMismatch("element does not match R (x) End(A)");
  QMatrix out(total_dim(), total_dim());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) add_action(out, i / ne, i % ne, coeffs[i]);
  return out;
}

QMatrix DeformationSetting::twisted_differential(const Vec& z) const { return d0_ + action(z); }

QMatrix DeformationSetting::multiplication(std::size_t r) const {
  const auto& alg = base().algebra();
  QMatrix out(total_dim(), total_dim());
  for (std::size_t s = 0; s < alg.dim(); ++s)
    for (const auto& [t, c] : alg.mul(r, s))
      for (std::size_t x = 0; x < fiber_dim(); ++x) out(flat(t, x), flat(s, x)) += c;
  return out;
}

std::optional<std::size_t> DeformationSetting::end_index(int k, int src_degree, std::size_t src,
                                                         std::size_t tgt) const {
  for (std::size_t e = 0; e < end_units_.size(); ++e) {
    const auto& [ek, u] = end_units_[e];
    if (ek == k && u.source_degree == src_degree && u.source_index == src && u.target_index == tgt) return e;
  }
  return std::nullopt;
}

ChainComplex DeformationSetting::complex_of(const QMatrix& d) const {
  if (d.rows() != total_dim() || d.cols() != total_dim()) throw ShapeMismatch("operator does not act on R (x) A");
  if (!has_degree(*this, d, 1)) throw ShapeMismatch("operator is not of degree 1");
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < total_dim(); ++i) by_degree[total_degree(i)].push_back(i);
  std::map<int, std::vector<std::string>> labels;
  for (const auto& [deg, idx] : by_degree)
    for (auto i : idx) labels[deg].push_back(label(i));
  std::map<int, QMatrix> blocks;
  for (const auto& [deg, src] : by_degree) {
    auto it = by_degree.find(deg + 1);
    if (it == by_degree.end()) continue;
    const auto& tgt = it->second;
    QMatrix b(tgt.size(), src.size());
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) b(r, c) = d(tgt[r], src[c]);
    blocks.emplace(deg, std::move(b));
  }
  return ChainComplex(GradedVectorSpace(labels), blocks);
}

QMatrix DeformationSetting::reduced_block(const QMatrix& m) const {
  const std::size_t u = base().unit();
  QMatrix out(fiber_dim(), fiber_dim());
  for (std::size_t y = 0; y < fiber_dim(); ++y)
    for (std::size_t x = 0; x < fiber_dim(); ++x) out(y, x) = m(flat(u, y), flat(u, x));
  return out;
}

ChainComplex DeformationSetting::reduction(const QMatrix& d) const {
  const QMatrix red = reduced_block(d);
  std::map<int, QMatrix> blocks;
  for (int deg : a_.degrees()) {
    if (a_.dim(deg + 1) == 0) continue;
    QMatrix b(a_.dim(deg + 1), a_.dim(deg));
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = red(a_offset_.at(deg + 1) + r, a_offset_.at(deg) + c);
    blocks.emplace(deg, std::move(b));
  }
  return ChainComplex(a_.space(), blocks);
}

Deformation twist(std::shared_ptr<const DeformationSetting> setting, const Vec& z) {
  const DGLA& g = setting->host().host();
  if (z.size() != g.dim()) throw ShapeMismatch("twist does not match m (x) End(A)");
  if (!g.is_homogeneous(z, 1)) throw PreconditionFailed("twist must have degree 1");
  QMatrix d = setting->twisted_differential(z);
  const bool squares_to_zero = (d * d).is_zero();
  const Vec f = curvature(setting->host(), z);
  if (squares_to_zero != f.is_zero())
    throw std::logic_error("D^2 = 0 and the MC equation disagree");
  if (!squares_to_zero) throw NotMC("twisted differential does not square to zero", first_nonzero(g, f));
  return {std::move(setting), z, std::move(d)};
}

ChainComplex reduce(const Deformation& b) { return b.setting->reduction(b.total_differential); }

TrivializationResult mc_from_trivialization(const DeformationSetting& s, const QMatrix& b, const QMatrix& theta) {
  const std::size_t n = s.total_dim();
  if (b.rows() != n || b.cols() != n || theta.rows() != n || theta.cols() != n)
    throw ShapeMismatch("trivialization data does not act on R (x) A");
  if (!has_degree(s, theta, 0)) throw PreconditionFailed("theta is not of degree 0");
  if (!has_degree(s, b, 1)) throw PreconditionFailed("B is not of degree 1");

  const auto& alg = s.base().algebra();
  for (std::size_t r = 0; r < alg.dim(); ++r) {
    const QMatrix lr = s.multiplication(r);
    if (theta * lr != lr * theta) throw PreconditionFailed("theta is not R-linear");
    QMatrix ldr(n, n);
    for (const auto& [t, c] : alg.differential[r]) ldr = ldr + c * s.multiplication(t);
    const Rational sign = alg.basis[r].degree % 2 == 0 ? 1 : -1;
    if (b * lr - sign * (lr * b) != ldr) throw PreconditionFailed("B is not a differential of R-modules");
  }
  if (s.reduced_block(b) != s.reduced_block(s.base_differential())) throw PreconditionFailed("B does not reduce to d_A");

  auto theta_inv = inverse(theta);
  if (!theta_inv) throw NotInvertible("theta is not invertible");
  auto bar_inv = inverse(s.reduced_block(theta));
  if (!bar_inv) throw NotInvertible("theta does not reduce to an automorphism of A");

  TrivializationResult out;
  QMatrix th = theta;
  QMatrix th_inv = *theta_inv;
  if (*bar_inv != QMatrix::identity(s.fiber_dim())) {
    out.normalized = true;
    QMatrix lift(n, n);
    QMatrix lift_inv(n, n);
    const QMatrix bar = s.reduced_block(theta);
    for (std::size_t r = 0; r < alg.dim(); ++r)
      for (std::size_t y = 0; y < s.fiber_dim(); ++y)
        for (std::size_t x = 0; x < s.fiber_dim(); ++x) {
          lift(s.flat(r, y), s.flat(r, x)) = (*bar_inv)(y, x);
          lift_inv(s.flat(r, y), s.flat(r, x)) = bar(y, x);
        }
    th = lift * theta;
    th_inv = *theta_inv * lift_inv;
  }

  const QMatrix m = th * b * th_inv - s.base_differential();
  const DGLA& g = s.host().host();
  const std::size_t ne = s.end().dim();
  const auto& mb = s.base().m_basis();
  const std::size_t u = s.base().unit();
  out.twist = g.zero();
  for (std::size_t p = 0; p < mb.size(); ++p)
    for (std::size_t e = 0; e < ne; ++e) {
      // Read off the coefficient of m_p (x) e from the column of 1 (x) source.
      QMatrix probe = s.action(Vec::unit(g.dim(), p * ne + e));
      for (std::size_t c = 0; c < s.fiber_dim(); ++c)
        for (std::size_t x = 0; x < s.fiber_dim(); ++x)
          if (probe(s.flat(mb[p], x), s.flat(u, c)) != 0) out.twist[p * ne + e] = m(s.flat(mb[p], x), s.flat(u, c));
    }
  if (s.action(out.twist) != m) throw PreconditionFailed("theta d_B theta^-1 - d is not an m (x) End(A) twist");
  if (!(b * b).is_zero()) throw NotMC("B does not square to zero", first_nonzero(g, curvature(s.host(), out.twist)));
  if (!is_mc(s.host(), out.twist)) throw std::logic_error("transported twist is not MC");
  return out;
}

QMatrix exp_action(const DeformationSetting& s, const Vec& gamma) {
  if (!s.host().host().is_homogeneous(gamma, 0)) throw PreconditionFailed("exp_action needs a degree-0 element");
  const QMatrix a = s.action(gamma);
  QMatrix out = QMatrix::identity(s.total_dim());
  QMatrix term = out;
  for (unsigned k = 1; k <= s.total_dim() + 1; ++k) {
    term = Rational(1) / k * (term * a);
    if (term.is_zero()) return out;
    out = out + term;
  }
  throw std::logic_error("action of a gauge element is not nilpotent");
}

FirstOrderClassification classify_first_order(const ChainComplex& a) {
  auto valid = validate_complex(a);
  if (!valid.ok) throw PreconditionFailed("not a complex: " + valid.detail);
  const ChainComplex end = end_complex(a);
  FirstOrderClassification out;
  out.dimension = homology_dim(end, 1);

  std::size_t offset = 0;
  for (int k : end.degrees()) {
    if (k == 1) break;
    offset += end.dim(k);
  }
  std::size_t total = 0;
  for (int k : end.degrees()) total += end.dim(k);

  std::vector<Vec> boundaries;
  if (end.dim(0) > 0 && end.dim(1) > 0) {
    const QMatrix d0 = end.d(0);
    for (std::size_t c = 0; c < d0.cols(); ++c) {
      Vec col = d0.column(c);
      if (!col.is_zero()) boundaries.push_back(std::move(col));
    }
  }
  std::vector<Vec> cycles;
  if (end.dim(1) > 0) cycles = end.dim(2) > 0 ? kernel_basis(end.d(1)) : std::vector<Vec>();
  if (end.dim(1) > 0 && end.dim(2) == 0)
    for (std::size_t i = 0; i < end.dim(1); ++i) cycles.push_back(Vec::unit(end.dim(1), i));

  boundaries = span_basis(boundaries, end.dim(1));
  std::vector<Vec> all = boundaries;
  all.insert(all.end(), cycles.begin(), cycles.end());
  for (auto k : independent_subset(all, end.dim(1))) {
    if (k < boundaries.size()) continue;
    Vec full(total);
    for (std::size_t i = 0; i < end.dim(1); ++i) full[offset + i] = cycles[k - boundaries.size()][i];
    out.cocycle_representatives.push_back(std::move(full));
  }
  if (out.cocycle_representatives.size() != out.dimension) throw std::logic_error("H^1(End A) basis size mismatch");
  out.statement = "gauge classes of first-order deformations = H^1(End A), dimension " + std::to_string(out.dimension);
  return out;
}

std::optional<IsoResult> iso_reducing_to_identity(const DeformationSetting& s, const Vec& z, const Vec& z_prime) {
  if (!is_square_zero(s.base())) throw PreconditionFailed("iso_reducing_to_identity needs m^2 = 0");
  if (!is_mc(s.host(), z) || !is_mc(s.host(), z_prime)) throw PreconditionFailed("both twists must be MC");
  const DGLA& g = s.host().host();
  const QMatrix dz = s.twisted_differential(z);
  const QMatrix dzp = s.twisted_differential(z_prime);
  const std::size_t n = s.total_dim();
  auto flatten = [n](const QMatrix& m) {
    Vec v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = m(r, c);
    return v;
  };
  const auto unknowns = g.indices_in_degree(0);
  std::vector<Vec> cols;
  for (auto k : unknowns) {
    const QMatrix p = s.action(Vec::unit(g.dim(), k));
    cols.push_back(flatten(p * dz - dzp * p));
  }
  const Vec rhs = flatten(dzp - dz);
  Vec psi = g.zero();
  if (cols.empty()) {
    if (!rhs.is_zero()) return std::nullopt;
  } else {
    auto c = solve_affine(QMatrix::from_columns(n * n, cols), rhs);
    if (!c) return std::nullopt;
    for (std::size_t k = 0; k < unknowns.size(); ++k) psi[unknowns[k]] = (*c)[k];
  }
  QMatrix phi = QMatrix::identity(n) + s.action(psi);
  if (phi * dz != dzp * phi) throw std::logic_error("isomorphism check failed");
  return IsoResult{psi, phi};
}

ChainComplex window_complex(int radius) {
  std::map<int, std::vector<std::string>> labels;
  for (int i = -radius; i <= radius; ++i) labels[i] = {"a" + std::to_string(i)};
  return ChainComplex(GradedVectorSpace(labels), {});
}

CounterexampleReport counterexample_demo(const CounterexampleOptions& options) {
  const int n = options.radius;
  if (n < 2) throw PreconditionFailed("window radius must be at least 2");
  auto setting = std::make_shared<const DeformationSetting>(make_dual_numbers(2), window_complex(n));
  const DGLA& g = setting->host().host();
  Vec f = g.zero();
  if (!options.zero_twist)
    for (int i = -n; i < n; ++i) {
      if (options.zeroed_degree && *options.zeroed_degree == i) continue;
      auto e = setting->end_index(1, i, 0, 0);
      if (!e) throw std::logic_error("missing matrix unit in End(A)");
      f[setting->host().index(0, *e)] = 1;
    }

  CounterexampleReport out;
  out.radius = n;
  out.is_mc = is_mc(setting->host(), f);
  out.gauge_trivial = std::holds_alternative<GaugeFound>(gauge_equivalent(setting->host(), f, g.zero()));
  const ChainComplex total = twist(setting, f).total_complex();
  out.interior_acyclic = true;
  for (int i = -n; i <= n; ++i) {
    const std::size_t h = homology_dim(total, i);
    if (i == -n || i == n) {
      out.boundary_homology.emplace_back(i, h);
    } else {
      out.interior_homology.emplace_back(i, h);
      if (h != 0) out.interior_acyclic = false;
    }
  }
  if (out.is_mc && !out.gauge_trivial && out.interior_acyclic) {
    out.conclusion =
        "f is MC and not gauge equivalent to 0, yet the twisted complex is acyclic in every interior degree, "
        "while A itself has nonzero homology there";
  } else {
    out.conclusion = "no counterexample: ";
    if (!out.is_mc) out.conclusion += "f is not MC";
    else if (out.gauge_trivial) out.conclusion += "f is gauge trivial";
    else out.conclusion += "the twisted complex has interior homology";
  }
  return out;
}

}  // namespace mcdeform
