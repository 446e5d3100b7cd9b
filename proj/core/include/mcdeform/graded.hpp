#ifndef MCDEFORM_GRADED_HPP
#define MCDEFORM_GRADED_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcdeform/matrix.hpp"

namespace mcdeform {

// Cohomological convention throughout: differentials raise degree by one.

/// Finitely supported graded vector space described by basis labels.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  /// Empty degrees are dropped; duplicate labels within a degree throw
  /// ShapeMismatch.
  explicit GradedVectorSpace(std::map<int, std::vector<std::string>> components);

  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  const std::map<int, std::vector<std::string>>& components() const { return components_; }
  const std::vector<std::string>& labels(int degree) const;
  std::vector<int> degrees() const;
  std::optional<std::size_t> index_of(int degree, const std::string& label) const;

 private:
  std::map<int, std::vector<std::string>> components_;
};

/// Outcome of a structural validator: the first violated axiom and a witness.
struct ValidationReport {
  bool ok = true;
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string axiom, std::vector<std::string> witness, std::string detail) {
    return {false, std::move(axiom), std::move(witness), std::move(detail)};
  }
};

class ChainComplex {
 public:
  ChainComplex() = default;
  /// `differential[i]` is d^i : C^i -> C^{i+1}, a dim(i+1) x dim(i) matrix.
  /// Missing degrees mean zero maps. Throws ShapeMismatch on bad blocks.
  ChainComplex(GradedVectorSpace space, std::map<int, QMatrix> differential);

  const GradedVectorSpace& space() const { return space_; }
  std::size_t dim(int degree) const { return space_.dim(degree); }
  std::vector<int> degrees() const { return space_.degrees(); }
  /// d^i, always of the right shape (zero when not stored).
  QMatrix d(int degree) const;
  const std::map<int, QMatrix>& differential_blocks() const { return differential_; }

 private:
  GradedVectorSpace space_;
  std::map<int, QMatrix> differential_;
};

/// Homogeneous linear map of the given degree; `blocks[i]` sends source
/// degree i to target degree i + degree.
struct GradedMap {
  int degree = 0;
  std::map<int, QMatrix> blocks;

  QMatrix block(const ChainComplex& source, const ChainComplex& target, int i) const;
};

ValidationReport validate_complex(const ChainComplex& c);

std::size_t homology_dim(const ChainComplex& c, int degree);

/// Sum over degrees of (-1)^i dim C^i.
long euler_characteristic(const ChainComplex& c);
long homology_euler_characteristic(const ChainComplex& c);

/// One basis element of a Hom complex: the matrix unit sending basis vector
/// `source_index` of A^{source_degree} to basis vector `target_index` of
/// B^{source_degree + k}.
struct HomUnit {
  int source_degree;
  std::size_t source_index;
  std::size_t target_index;
};

/// Basis of Hom(A, B)^k ordered by source degree, then target index, then
/// source index.
std::vector<HomUnit> hom_basis(const ChainComplex& a, const ChainComplex& b, int k);

/// Range of k with Hom(A, B)^k possibly nonzero.
std::vector<int> hom_degrees(const ChainComplex& a, const ChainComplex& b);

GradedMap hom_vector_to_map(const ChainComplex& a, const ChainComplex& b, int k, const Vec& coords);
Vec hom_map_to_vector(const ChainComplex& a, const ChainComplex& b, const GradedMap& f);

/// Composition g o f of graded maps A -> B -> C.
GradedMap compose(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c,
                  const GradedMap& g, const GradedMap& f);

/// Hom complex with differential D(f) = d_B o f - (-1)^{|f|} f o d_A.
ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b);
ChainComplex end_complex(const ChainComplex& a);

/// Mapping cone of a degree-0 chain map f : A -> B, with
/// Cone^n = A^{n+1} (+) B^n and d(a, b) = (-d a, f a + d b).
ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const GradedMap& f);

bool is_chain_map(const ChainComplex& a, const ChainComplex& b, const GradedMap& f);

}  // namespace mcdeform

#endif  // MCDEFORM_GRADED_HPP
