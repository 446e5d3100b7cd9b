#ifndef MCDEFORM_MC_HPP
#define MCDEFORM_MC_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <tuple>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcdeform/artin.hpp"
#include "mcdeform/dgla.hpp"
#include "mcdeform/errors.hpp"
#include "mcdeform/form_host.hpp"

namespace mcdeform {

// Maurer-Cartan convention: z of degree 1 with dz + 1/2 [z, z] = 0.

/// A dg Lie algebra whose elements support exact vector-space arithmetic.
template <class H>
concept LieHost = requires(const H& h, const typename H::Element& x, const Rational& s) {
  { h.zero() } -> std::convertible_to<typename H::Element>;
  { h.differential(x) } -> std::convertible_to<typename H::Element>;
  { h.bracket(x, x) } -> std::convertible_to<typename H::Element>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x + x } -> std::convertible_to<typename H::Element>;
  { x - x } -> std::convertible_to<typename H::Element>;
  { s * x } -> std::convertible_to<typename H::Element>;
};

/// dz + 1/2 [z, z].
template <LieHost H>
typename H::Element curvature(const H& h, const typename H::Element& z) {
  return h.differential(z) + Rational(1) / 2 * h.bracket(z, z);
}

template <LieHost H>
bool is_mc(const H& h, const typename H::Element& z) {
  return curvature(h, z).is_zero();
}

/// exp(g) . z = z + sum_{k >= 0} (ad g)^k / (k+1)! ([g, z] - dg).
/// The series terminates because h is nilpotent; `max_terms` guards against
/// a non-nilpotent host.
template <LieHost H>
typename H::Element gauge_act(const H& h, const typename H::Element& gamma, const typename H::Element& z,
                              std::size_t max_terms = 64) {
  typename H::Element result = z;
  typename H::Element term = h.bracket(gamma, z) - h.differential(gamma);
  for (std::size_t k = 0; !term.is_zero(); ++k) {
    if (k >= max_terms) throw PreconditionFailed("gauge series did not terminate; host is not nilpotent");
    result += Rational(1) / factorial(static_cast<unsigned>(k + 1)) * term;
    term = h.bracket(gamma, term);
  }
  return result;
}

/// Coefficients of Dynkin's formula grouped by word: word bit i set means
/// letter i is Y, otherwise X; the bracket is right-nested.
struct DynkinWord {
  std::size_t length;
  std::uint32_t letters;
  Rational coefficient;
};
std::vector<DynkinWord> dynkin_coefficients(std::size_t max_length);

/// log(exp(x) exp(y)) by the Dynkin series truncated at words of length
/// `depth`, which is exact when h^{depth+1} = 0.
template <LieHost H>
typename H::Element bch(const H& h, const typename H::Element& x, const typename H::Element& y,
                        std::size_t depth) {
  typename H::Element out = h.zero();
  for (const auto& w : dynkin_coefficients(depth)) {
    const std::size_t m = w.length;
    typename H::Element nested = ((w.letters >> (m - 1)) & 1u) ? y : x;
    for (std::size_t i = m - 1; i-- > 0;) {
      if (nested.is_zero()) break;
      nested = h.bracket(((w.letters >> i) & 1u) ? y : x, nested);
    }
    if (!nested.is_zero()) out += w.coefficient * nested;
  }
  return out;
}

/// The host m (x) g together with the m-adic filtration F^j = m^j (x) g.
class ArtinHost {
 public:
  ArtinHost(ArtinianLocalDGA base, DGLA g);

  const ArtinianLocalDGA& base() const { return base_; }
  const DGLA& fiber() const { return g_; }
  const DGLA& host() const { return host_; }
  const MFiltration& filtration() const { return filtration_; }
  std::size_t nilpotency_depth() const { return depth_; }

  /// Index of m_basis()[m] (x) g-basis x in host coordinates.
  std::size_t index(std::size_t m, std::size_t x) const { return m * g_.dim() + x; }
  /// Host element sum over terms coeff * r (x) x, with r a label of m.
  Vec element(const std::vector<std::tuple<Rational, std::string, std::string>>& terms) const;

  /// Basis of F^j restricted to host degree `degree` (empty for j >= N).
  std::vector<Vec> filtration_basis(std::size_t j, int degree) const;
  bool in_filtration(const Vec& v, std::size_t j) const;
  /// Largest j with v in F^j (N when v = 0).
  std::size_t filtration_level(const Vec& v) const;

 private:
  ArtinianLocalDGA base_;
  DGLA g_;
  DGLA host_;
  MFiltration filtration_;
  std::size_t depth_;
};

Vec curvature(const ArtinHost& h, const Vec& z);
bool is_mc(const ArtinHost& h, const Vec& z);
Vec gauge_act(const ArtinHost& h, const Vec& gamma, const Vec& z);
Vec bch(const ArtinHost& h, const Vec& x, const Vec& y);

/// Solution set of the MC equation when m^2 = 0: the kernel of d on host
/// degree 1.
struct SquareZeroSolution {
  std::vector<Vec> basis;
};
SquareZeroSolution mc_solve_square_zero(const ArtinHost& h);

/// One stage of order-by-order lifting. `order` = k + 1 when z is exact
/// modulo m^{k+1}: the curvature is projected to (m^{k+1}/m^{k+2}) (x) g^2.
struct ObstructionStep {
  std::size_t order = 0;
  Vec curvature_component;  ///< projection of the curvature, host coordinates
  bool closed = true;       ///< d(component) vanishes in the associated graded
  bool obstructed = false;
  Vec correction;                 ///< u with z + u exact modulo m^{k+2}
  std::optional<Vec> lifted;      ///< z + u when unobstructed
};

/// Throws PreconditionFailed when the curvature of z is not in F^{order}.
ObstructionStep obstruction_step(const ArtinHost& h, const Vec& z, std::size_t order);

/// Runs obstruction_step for orders 1..max_order, stopping at the first
/// obstruction.
std::vector<ObstructionStep> lift(const ArtinHost& h, const Vec& z, std::size_t max_order);

struct GaugeFound {
  Vec gamma;
};
struct GaugeNotFound {
  std::size_t order;
};
using GaugeSearch = std::variant<GaugeFound, GaugeNotFound>;

/// Order-by-order search for gamma with exp(gamma) . z = z'. A Found result
/// is verified exactly. The search carries the stabilizer of z along, so
/// NotFound{k} means no gauge element matches z' modulo F^{k+1}.
GaugeSearch gauge_equivalent(const ArtinHost& h, const Vec& z, const Vec& z_prime);

}  // namespace mcdeform

#endif  // MCDEFORM_MC_HPP
