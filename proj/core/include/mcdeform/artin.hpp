#ifndef MCDEFORM_ARTIN_HPP
#define MCDEFORM_ARTIN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcdeform/dgla.hpp"

namespace mcdeform {

/// Finite-dimensional non-positively graded commutative dg algebra (R, m)
/// presented on a basis {unit} u m-basis. Nothing is assumed about the
/// structure constants; validate_artinian decides admissibility.
class ArtinianLocalDGA {
 public:
  ArtinianLocalDGA() = default;
  ArtinianLocalDGA(CommutativeDGA algebra, std::size_t unit, std::vector<std::size_t> m_basis);

  const CommutativeDGA& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t unit() const { return unit_; }
  const std::vector<std::size_t>& m_basis() const { return m_basis_; }
  const Generator& generator(std::size_t a) const { return algebra_.basis[a]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Position of basis element `a` in m_basis, if it belongs there.
  std::optional<std::size_t> m_position(std::size_t a) const;

 private:
  CommutativeDGA algebra_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> m_basis_;
};

/// k[eps]/eps^n with deg eps = 0 and d = 0; basis 1, eps, eps^2, ...
ArtinianLocalDGA make_dual_numbers(int n);

/// Checks, reporting the first failure: "degree", "shape", "unit",
/// "commutativity", "associativity", "d_squared", "leibniz", "ideal",
/// "residue_field", "nilpotency".
ValidationReport validate_artinian(const ArtinianLocalDGA& r);

/// m = m^1 > m^2 > ... > m^N = 0, each level an echelon basis of vectors in
/// full R coordinates. `levels[j - 1]` spans m^j; the last level is empty
/// and `nilpotency_index` = N.
struct MFiltration {
  std::vector<std::vector<Vec>> levels;
  std::size_t nilpotency_index = 0;

  const std::vector<Vec>& level(std::size_t j) const;
};

/// Throws PreconditionFailed when m is not nilpotent.
MFiltration m_filtration(const ArtinianLocalDGA& r);

/// Same computation without throwing; nullopt when the powers of m stabilize
/// at a nonzero ideal.
std::optional<MFiltration> try_m_filtration(const ArtinianLocalDGA& r);

bool is_square_zero(const ArtinianLocalDGA& r);

/// m as a non-unital CDGA on the m-basis (throws PreconditionFailed when m is
/// not closed under products or d).
CommutativeDGA maximal_ideal(const ArtinianLocalDGA& r);

}  // namespace mcdeform

#endif  // MCDEFORM_ARTIN_HPP
