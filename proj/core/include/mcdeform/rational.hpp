#ifndef MCDEFORM_RATIONAL_HPP
#define MCDEFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mcdeform {

// GMP keeps mpq_class canonical (gcd 1, positive denominator) after every
// arithmetic operation; parse_rational canonicalizes on input.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational factorial(unsigned n);

/// Dense rational vector with value semantics.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : data_(n) {}
  Vec(std::initializer_list<Rational> init) : data_(init) {}
  explicit Vec(std::vector<Rational> data) : data_(std::move(data)) {}

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  Rational& operator[](std::size_t i) { return data_[i]; }
  const Rational& operator[](std::size_t i) const { return data_[i]; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  bool is_zero() const;
  static Vec unit(std::size_t n, std::size_t i);

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Rational& s);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= Rational(-1); }
  friend Vec operator*(const Rational& s, Vec a) { return a *= s; }
  friend bool operator==(const Vec& a, const Vec& b) = default;

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Vec& v);

/// Sparse rational vector: (index, value) pairs sorted by index, no zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  SparseVector(std::initializer_list<Entry> entries);

  static SparseVector from_dense(const Vec& v);

  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t nonzeros() const { return entries_.size(); }

  Rational get(std::size_t index) const;
  /// Adds s * value at index, dropping the entry if it cancels.
  void add(std::size_t index, const Rational& value);
  SparseVector scaled(const Rational& s) const;
  /// Accumulates s * this into a dense vector.
  void axpy_into(Vec& out, const Rational& s) const;
  Vec to_dense(std::size_t n) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace mcdeform

#endif  // MCDEFORM_RATIONAL_HPP
