#ifndef MCDEFORM_DELIGNE_HPP
#define MCDEFORM_DELIGNE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mcdeform/form_host.hpp"
#include "mcdeform/mc.hpp"
#include "mcdeform/simplicial.hpp"

namespace mcdeform {

// Face convention: the i-th face of Delta^n omits vertex i. On Delta^1 with
// coordinate t = t_1, face 1 evaluates at t = 0 (the source vertex) and
// face 0 at t = 1 (the target vertex).

/// An n-simplex of the nerve: an MC element of Omega_n (x) h.
struct NerveSimplex {
  int n = 0;
  FormElement element;
};

struct MembershipReport {
  bool member = false;
  std::string witness;  ///< first nonzero curvature term, or a degree problem
};

/// True iff Z has total degree 1 and satisfies the MC equation in
/// Omega_n (x) host.
MembershipReport nerve_member(const ArtinHost& h, const FormElement& z);

/// Z(t, dt) = exp(t gamma) . z - dt gamma, the flow line from z (face 1) to
/// gauge_act(gamma, z) (face 0). Both faces and membership are verified
/// before returning; throws DegreeOverflow when `bound` is too small and
/// PreconditionFailed when z is not MC.
NerveSimplex gauge_path(const ArtinHost& h, const Vec& z, const Vec& gamma,
                        int bound = kDefaultFormDegreeBound);

/// Degenerate 1-simplex s_0(z).
NerveSimplex constant_path(const ArtinHost& h, const Vec& z, int bound = kDefaultFormDegreeBound);

/// n-simplex of the simplicial gauge group, recorded by its logarithm, a
/// degree-0 element of Omega_n (x) h.
struct GaugeGroupSimplex {
  int n = 0;
  FormElement log;
};

GaugeGroupSimplex gauge_group_vertex(const ArtinHost& h, const Vec& log, int bound = kDefaultFormDegreeBound);
/// Product by BCH of the logarithms; throws on mismatched dimensions.
GaugeGroupSimplex group_mul(const ArtinHost& h, const GaugeGroupSimplex& g, const GaugeGroupSimplex& g_prime);
GaugeGroupSimplex face_map(int i, const GaugeGroupSimplex& g);
/// The 1-simplex with logarithm t log(g), from the identity to g.
GaugeGroupSimplex contraction_path(const ArtinHost& h, const GaugeGroupSimplex& g);
/// Logarithm of the group element obtained by restricting to the point (t_1..t_n).
Vec evaluate_at(const GaugeGroupSimplex& g, const std::vector<Rational>& point);

/// pi_0 of the MC set over a square-zero base: orbits are cosets of d(h^0)
/// inside the cocycles Z^1(h), h = m (x) g.
struct SquareZeroClassification {
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t orbit_dimension = 0;
  /// sum_p dim m^p * dim H^{1-p}(g), reported when d_R = 0 (Kunneth count).
  std::optional<std::size_t> kunneth_dimension;
  std::vector<Vec> class_basis;       ///< cocycles whose classes form a basis of H^1(h)
  std::vector<Vec> representatives;   ///< 0 followed by class_basis
  std::vector<Vec> coboundary_basis;
};

/// Throws PreconditionFailed unless m^2 = 0.
SquareZeroClassification pi0_sigma_square_zero(const DGLA& g, const ArtinianLocalDGA& r);

/// Linear map on orbit spaces induced by f over a square-zero base.
struct ClassesMapReport {
  QMatrix induced;  ///< target classes x source classes
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  bool quasi_iso = false;
  bool bijective() const { return injective && surjective; }
};

ClassesMapReport mc_classes_map(const DGLAMorphism& f, const ArtinianLocalDGA& r);

/// Finite presentation of the Deligne groupoid on the given MC elements:
/// one arrow per ordered gauge-equivalent pair (automorphism groups are not
/// recorded), with composition inherited from the equivalence relation.
struct DeligneFragment {
  FiniteGroupoid groupoid;
  std::vector<std::size_t> class_of;  ///< class index per object
  std::size_t class_count = 0;
};

DeligneFragment deligne_fragment(const ArtinHost& h, const std::vector<Vec>& objects);

}  // namespace mcdeform

#endif  // MCDEFORM_DELIGNE_HPP
