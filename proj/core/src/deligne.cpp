#include "mcdeform/deligne.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcdeform/errors.hpp"

namespace mcdeform {

namespace {

FormHost form_host(const ArtinHost& h, int n, int bound) { return FormHost(h.host(), n, bound); }

void check_host(const ArtinHost& h, const FormElement& x) {
  if (x.host_dim() != h.host().dim()) throw ShapeMismatch("form element does not live over this host");
}

std::vector<Vec> coboundaries(const DGLA& g) {
  std::vector<Vec> images;
  for (auto a : g.indices_in_degree(0)) {
    Vec da = g.differential(Vec::unit(g.dim(), a));
    if (!da.is_zero()) images.push_back(std::move(da));
  }
  return span_basis(images, g.dim());
}

}  // namespace

MembershipReport nerve_member(const ArtinHost& h, const FormElement& z) {
  check_host(h, z);
  FormHost fh = form_host(h, z.simplex_dim(), z.bound());
  if (!fh.is_homogeneous(z, 1)) return {false, "not of total degree 1"};
  FormElement f = curvature(fh, z);
  if (f.is_zero()) return {true, ""};
  return {false, fh.first_term(f)};
}

NerveSimplex gauge_path(const ArtinHost& h, const Vec& z, const Vec& gamma, int bound) {
  const DGLA& g = h.host();
  if (!g.is_homogeneous(z, 1) || !is_mc(h, z)) throw PreconditionFailed("gauge_path needs an MC element");
  if (!g.is_homogeneous(gamma, 0)) throw PreconditionFailed("gauge parameter must have degree 0");
  FormHost fh = form_host(h, 1, bound);
  const FormElement big_gamma = fh.tensor(SullivanForm::coordinate(1, 1, bound), gamma);
  FormElement path = gauge_act(fh, big_gamma, fh.constant(z));

  auto report = nerve_member(h, path);
  if (!report.member) throw std::logic_error("gauge path is not MC: " + report.witness);
  if (as_vector(face_map(1, path)) != z) throw std::logic_error("gauge path does not start at z");
  if (as_vector(face_map(0, path)) != gauge_act(h, gamma, z)) throw std::logic_error("gauge path does not end at gamma . z");
  return {1, std::move(path)};
}

NerveSimplex constant_path(const ArtinHost& h, const Vec& z, int bound) {
  FormHost fh = form_host(h, 0, bound);
  return {1, degeneracy_map(0, fh.constant(z))};
}

GaugeGroupSimplex gauge_group_vertex(const ArtinHost& h, const Vec& log, int bound) {
  if (!h.host().is_homogeneous(log, 0)) throw PreconditionFailed("gauge group elements have degree 0 logarithms");
  return {0, form_host(h, 0, bound).constant(log)};
}

GaugeGroupSimplex group_mul(const ArtinHost& h, const GaugeGroupSimplex& g, const GaugeGroupSimplex& g_prime) {
  if (g.n != g_prime.n) throw ShapeMismatch("group elements on simplices of different dimension");
  check_host(h, g.log);
  check_host(h, g_prime.log);
  FormHost fh = form_host(h, g.n, std::max(g.log.bound(), g_prime.log.bound()));
  return {g.n, bch(fh, g.log, g_prime.log, h.nilpotency_depth())};
}

GaugeGroupSimplex face_map(int i, const GaugeGroupSimplex& g) {
  if (g.n == 0) throw PreconditionFailed("a vertex has no faces");
  return {g.n - 1, face_map(i, g.log)};
}

GaugeGroupSimplex contraction_path(const ArtinHost& h, const GaugeGroupSimplex& g) {
  if (g.n != 0) throw PreconditionFailed("contraction_path takes a vertex");
  check_host(h, g.log);
  FormHost fh = form_host(h, 1, g.log.bound());
  return {1, fh.tensor(SullivanForm::coordinate(1, 1, g.log.bound()), as_vector(g.log))};
}

Vec evaluate_at(const GaugeGroupSimplex& g, const std::vector<Rational>& point) { return evaluate_at(g.log, point); }

SquareZeroClassification pi0_sigma_square_zero(const DGLA& g, const ArtinianLocalDGA& r) {
  ArtinHost h(r, g);
  SquareZeroClassification out;
  auto cocycles = mc_solve_square_zero(h).basis;
  out.coboundary_basis = coboundaries(h.host());
  out.cocycle_dim = cocycles.size();
  out.coboundary_dim = out.coboundary_basis.size();
  out.orbit_dimension = out.cocycle_dim - out.coboundary_dim;

  std::vector<Vec> all = out.coboundary_basis;
  all.insert(all.end(), cocycles.begin(), cocycles.end());
  for (auto k : independent_subset(all, h.host().dim()))
    if (k >= out.coboundary_dim) out.class_basis.push_back(cocycles[k - out.coboundary_dim]);
  out.representatives.push_back(h.host().zero());
  out.representatives.insert(out.representatives.end(), out.class_basis.begin(), out.class_basis.end());

  bool flat = true;
  for (const auto& d : r.algebra().differential)
    if (!d.empty()) flat = false;
  if (flat) {
    const ChainComplex c = g.underlying_complex();
    std::size_t total = 0;
    for (auto a : r.m_basis()) total += homology_dim(c, 1 - r.generator(a).degree);
    out.kunneth_dimension = total;
  }
  return out;
}

ClassesMapReport mc_classes_map(const DGLAMorphism& f, const ArtinianLocalDGA& r) {
  auto valid = validate_morphism(f);
  if (!valid.ok) throw PreconditionFailed("not a dgla morphism: " + valid.axiom);
  ArtinHost hs(r, f.source);
  ArtinHost ht(r, f.target);
  auto cs = pi0_sigma_square_zero(f.source, r);
  auto ct = pi0_sigma_square_zero(f.target, r);

  ClassesMapReport out;
  out.source_dim = cs.class_basis.size();
  out.target_dim = ct.class_basis.size();
  out.induced = QMatrix(out.target_dim, out.source_dim);

  std::vector<Vec> cols = ct.class_basis;
  cols.insert(cols.end(), ct.coboundary_basis.begin(), ct.coboundary_basis.end());
  const std::size_t m = r.m_basis().size();
  for (std::size_t c = 0; c < out.source_dim; ++c) {
    const Vec& z = cs.class_basis[c];
    Vec w = ht.host().zero();
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t x = 0; x < f.source.dim(); ++x) {
        const Rational& zx = z[hs.index(p, x)];
        if (zx == 0) continue;
        for (std::size_t y = 0; y < f.target.dim(); ++y)
          if (f.matrix(y, x) != 0) w[ht.index(p, y)] += f.matrix(y, x) * zx;
      }
    if (w.is_zero()) continue;
    auto coeffs = solve_affine(QMatrix::from_columns(ht.host().dim(), cols), w);
    if (!coeffs) throw std::logic_error("image of a cocycle is not a cocycle");
    for (std::size_t k = 0; k < out.target_dim; ++k) out.induced(k, c) = (*coeffs)[k];
  }
  out.rank = rank(out.induced);
  out.injective = out.rank == out.source_dim;
  out.surjective = out.rank == out.target_dim;
  out.quasi_iso = is_quasi_iso(f);
  return out;
}

DeligneFragment deligne_fragment(const ArtinHost& h, const std::vector<Vec>& objects) {
  DeligneFragment out;
  std::vector<std::size_t> leaders;
  for (const auto& z : objects) {
    std::size_t cls = leaders.size();
    for (std::size_t c = 0; c < leaders.size(); ++c)
      if (std::holds_alternative<GaugeFound>(gauge_equivalent(h, objects[leaders[c]], z))) {
        cls = c;
        break;
      }
    if (cls == leaders.size()) leaders.push_back(out.class_of.size());
    out.class_of.push_back(cls);
  }
  out.class_count = leaders.size();
  out.groupoid = codiscrete_groupoid(out.class_of);
  return out;
}

}  // namespace mcdeform
