#ifndef MCDEFORM_DEFORM_HPP
#define MCDEFORM_DEFORM_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcdeform/mc.hpp"

namespace mcdeform {

/// R (x) A as a graded vector space over Q, together with the action of
/// R (x) End(A) on it. Flat index of r (x) a is r * dim(A) + a, where a runs
/// over the basis of A in degree order.
///
/// A coefficient element m (x) f acts by
///   Phi(m (x) f)(s (x) a) = (-1)^{|f||s|} ms (x) f(a),
/// which makes Phi a map of dg Lie algebras into End(R (x) A) with the
/// commutator bracket and differential [d_R (x) 1 + 1 (x) d_A, -].
class DeformationSetting {
 public:
  DeformationSetting(ArtinianLocalDGA r, ChainComplex a);

  const ArtinHost& host() const { return host_; }
  const ArtinianLocalDGA& base() const { return host_.base(); }
  const ChainComplex& fiber() const { return a_; }
  /// End(A), the fiber of the host.
  const DGLA& end() const { return host_.fiber(); }

  std::size_t fiber_dim() const { return a_degree_.size(); }
  std::size_t total_dim() const { return base().dim() * fiber_dim(); }
  std::size_t flat(std::size_t r, std::size_t a) const { return r * fiber_dim() + a; }
  int total_degree(std::size_t flat_index) const;
  std::string label(std::size_t flat_index) const;

  /// d_R (x) 1 + 1 (x) d_A.
  const QMatrix& base_differential() const { return d0_; }
  /// Phi(x) for x in host coordinates (m (x) End(A)).
  QMatrix action(const Vec& x) const;
  /// Phi of a coefficient element over all of R: coordinates r * dim End + e.
  QMatrix full_action(const Vec& coeffs) const;
  /// d_R (x) 1 + 1 (x) d_A + Phi(z).
  QMatrix twisted_differential(const Vec& z) const;
  /// Left multiplication by the R basis element r.
  QMatrix multiplication(std::size_t r) const;
  /// End(A) index of the matrix unit A^{src_degree}[src] -> A^{src_degree + k}[tgt].
  std::optional<std::size_t> end_index(int k, int src_degree, std::size_t src, std::size_t tgt) const;
  /// Position of the basis vector a of A in degree `degree` among all of A.
  std::size_t fiber_index(int degree, std::size_t a) const { return a_offset_.at(degree) + a; }

  /// Splits a degree-1 map on R (x) A into a chain complex over Q.
  ChainComplex complex_of(const QMatrix& d) const;
  /// The induced map on A = k (x)_R (R (x) A), as a chain complex.
  ChainComplex reduction(const QMatrix& d) const;
  /// Unit block of an R-linear map: the endomorphism of A it reduces to.
  QMatrix reduced_block(const QMatrix& m) const;

 private:
  ArtinHost host_;
  ChainComplex a_;
  std::vector<int> a_degree_;
  std::vector<std::string> a_label_;
  std::map<int, std::size_t> a_offset_;
  struct EndUnit {
    int k;
    HomUnit unit;
  };
  std::vector<EndUnit> end_units_;
  QMatrix d0_;

  void add_action(QMatrix& out, std::size_t r, std::size_t e, const Rational& c) const;
};

/// An accepted twist: z in (m (x) End A)^1 with (d_R + d_A + Phi(z))^2 = 0.
struct Deformation {
  std::shared_ptr<const DeformationSetting> setting;
  Vec twist;
  QMatrix total_differential;

  ChainComplex total_complex() const { return setting->complex_of(total_differential); }
};

/// Throws NotMC with the first curvature term as witness. The square of the
/// total differential and the MC equation are computed independently and
/// must agree.
Deformation twist(std::shared_ptr<const DeformationSetting> setting, const Vec& z);

/// Reduction modulo m; recovers (A, d_A).
ChainComplex reduce(const Deformation& b);

struct TrivializationResult {
  Vec twist;
  bool normalized = false;  ///< theta did not reduce to the identity and was rescaled
};

/// z = theta d_B theta^{-1} - d_R (x) 1 - 1 (x) d_A for an R-linear degree-0
/// automorphism theta of R (x) A. When theta reduces to theta_bar != 1 it is
/// first replaced by (1 (x) theta_bar^{-1}) theta. Throws NotInvertible for a
/// singular theta, PreconditionFailed when B is not an R-linear degree-1
/// differential reducing to d_A, NotMC when B^2 != 0.
TrivializationResult mc_from_trivialization(const DeformationSetting& s, const QMatrix& b, const QMatrix& theta);

/// exp(Phi(gamma)) for gamma in host degree 0.
QMatrix exp_action(const DeformationSetting& s, const Vec& gamma);

struct FirstOrderClassification {
  std::size_t dimension = 0;               ///< dim H^1(End A)
  std::vector<Vec> cocycle_representatives;  ///< End(A) coordinates
  std::string statement;
};

/// First-order deformations of A over Q[eps]/eps^2.
FirstOrderClassification classify_first_order(const ChainComplex& a);

/// Some phi = 1 + Phi(psi), psi in (m (x) End A)^0, with phi D_z = D_z' phi.
struct IsoResult {
  Vec psi;
  QMatrix phi;
};
std::optional<IsoResult> iso_reducing_to_identity(const DeformationSetting& s, const Vec& z, const Vec& z_prime);

struct CounterexampleOptions {
  int radius = 2;
  std::optional<int> zeroed_degree;  ///< drop the component A^k -> A^{k+1}
  bool zero_twist = false;
};

struct CounterexampleReport {
  int radius = 0;
  bool is_mc = false;
  bool gauge_trivial = false;
  std::vector<std::pair<int, std::size_t>> interior_homology;
  std::vector<std::pair<int, std::size_t>> boundary_homology;
  bool interior_acyclic = false;
  std::string conclusion;
};

/// Window complex A^i = Q, i in [-N, N], d = 0, twisted over Q[eps]/eps^2
/// by f = sum eps (x) (A^i -> A^{i+1}).
CounterexampleReport counterexample_demo(const CounterexampleOptions& options);

/// A^i = Q for |i| <= radius with zero differential; labels "a<i>".
ChainComplex window_complex(int radius);

}  // namespace mcdeform

#endif  // MCDEFORM_DEFORM_HPP
