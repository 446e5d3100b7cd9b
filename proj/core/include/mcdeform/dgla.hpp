#ifndef MCDEFORM_DGLA_HPP
#define MCDEFORM_DGLA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcdeform/graded.hpp"
#include "mcdeform/matrix.hpp"

namespace mcdeform {

struct Generator {
  std::string label;
  int degree = 0;
};

inline int koszul_sign(int a, int b) { return ((a * b) % 2 == 0) ? 1 : -1; }

using BracketDeclarations = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

/// Finite-dimensional dg Lie algebra over Q given by structure constants.
///
/// Brackets are declared for basis pairs; a pair (b, a) with no declaration
/// is generated from (a, b) by [x, y] = -(-1)^{|x||y|} [y, x]. Declaring
/// both orders is allowed and is checked for consistency by validate_dgla.
class DGLA {
 public:
  using Element = Vec;

  DGLA() = default;
  DGLA(std::vector<Generator> basis, std::vector<SparseVector> differential,
       BracketDeclarations brackets);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Generator>& basis() const { return basis_; }
  int degree(std::size_t a) const { return basis_[a].degree; }
  const std::string& label(std::size_t a) const { return basis_[a].label; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::vector<std::size_t> indices_in_degree(int degree) const;
  std::vector<int> degrees() const;

  const SparseVector& d_basis(std::size_t a) const { return differential_[a]; }
  const SparseVector& bracket_basis(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
  const BracketDeclarations& declared_brackets() const { return declared_; }

  Vec zero() const { return Vec(dim()); }
  Vec differential(const Vec& x) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// [x_a, y] for a basis element x_a.
  Vec bracket_with_basis(std::size_t a, const Vec& y) const;

  /// True iff every nonzero coordinate lies in the given degree.
  bool is_homogeneous(const Vec& x, int degree) const;

  /// Underlying cochain complex, basis grouped by degree in index order.
  ChainComplex underlying_complex() const;

 private:
  std::vector<Generator> basis_;
  std::vector<SparseVector> differential_;
  BracketDeclarations declared_;
  std::vector<SparseVector> table_;
};

/// Checks, in order: degree compatibility, d^2 = 0, graded antisymmetry,
/// graded Leibniz, graded Jacobi. The witness names the basis labels.
ValidationReport validate_dgla(const DGLA& g);

/// Graded commutative dg algebra, possibly non-unital (e.g. a maximal ideal).
struct CommutativeDGA {
  std::vector<Generator> basis;
  /// product[a * dim + b] = x_a x_b.
  std::vector<SparseVector> product;
  std::vector<SparseVector> differential;

  std::size_t dim() const { return basis.size(); }
  const SparseVector& mul(std::size_t a, std::size_t b) const { return product[a * dim() + b]; }
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec d(const Vec& x) const;
};

/// C (x) g with d(c x) = dc x + (-1)^{|c|} c dx and
/// [a x, b y] = (-1)^{|x||b|} ab [x, y]. Basis index = c * dim(g) + x.
DGLA tensor_dgla(const CommutativeDGA& c, const DGLA& g);

/// End(A) with the graded commutator and D(f) = d f - (-1)^{|f|} f d.
DGLA end_dgla(const ChainComplex& a);

/// Least c with g^{c+1} = 0 in the lower central series g^1 = g,
/// g^{k+1} = [g, g^k]; nullopt when the series stabilizes at a nonzero
/// subspace. An abelian nonzero algebra has class 1, the zero algebra 0.
std::optional<std::size_t> nilpotency_class(const DGLA& g);

/// Product dgla g1 x g2 (componentwise bracket and differential).
DGLA direct_product(const DGLA& g1, const DGLA& g2);

/// Morphism given by a dim(target) x dim(source) matrix in basis coordinates.
struct DGLAMorphism {
  DGLA source;
  DGLA target;
  QMatrix matrix;

  Vec apply(const Vec& x) const { return matrix.apply(x); }
  /// Per-degree blocks of the underlying chain map.
  GradedMap chain_map() const;
};

/// Degree preservation, compatibility with d, and with brackets on basis pairs.
ValidationReport validate_morphism(const DGLAMorphism& f);

bool is_quasi_iso(const DGLAMorphism& f);

DGLAMorphism identity_morphism(const DGLA& g);
DGLAMorphism zero_morphism(const DGLA& source, const DGLA& target);
/// Projection g1 x g2 -> g1.
DGLAMorphism first_projection(const DGLA& g1, const DGLA& g2);

}  // namespace mcdeform

#endif  // MCDEFORM_DGLA_HPP
