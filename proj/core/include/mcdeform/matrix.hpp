#ifndef MCDEFORM_MATRIX_HPP
#define MCDEFORM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "mcdeform/rational.hpp"

namespace mcdeform {

/// Dense exact matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static QMatrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  bool is_zero() const;
  QMatrix transposed() const;

  Vec apply(const Vec& x) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(QMatrix a, const QMatrix& b);
  friend QMatrix operator-(QMatrix a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, QMatrix a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with leftmost-nonzero pivoting: columns are
/// scanned left to right and the topmost remaining row with a nonzero entry
/// becomes the pivot row.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_echelon(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Null-space basis, one vector per free column (free variable set to 1,
/// other free variables 0), in increasing free-column order.
std::vector<Vec> kernel_basis(const QMatrix& m);

/// Some x with m x = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vec> solve_affine(const QMatrix& m, const Vec& b);

std::optional<QMatrix> inverse(const QMatrix& m);

/// Basis of the span of `vectors` (the nonzero rows of their echelon form).
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t ambient);

/// Indices of a maximal independent subset, chosen greedily left to right.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, std::size_t ambient);

bool in_span(const std::vector<Vec>& basis, const Vec& v);

}  // namespace mcdeform

#endif  // MCDEFORM_MATRIX_HPP
