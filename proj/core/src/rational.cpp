#include "mcdeform/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mcdeform {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

bool Vec::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Vec Vec::unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec& Vec::operator+=(const Vec& other) {
  if (other.size() != size()) throw std::length_error("Vec size mismatch");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  if (other.size() != size()) throw std::length_error("Vec size mismatch");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  return os << ')';
}

SparseVector::SparseVector(std::initializer_list<Entry> entries) {
  for (const auto& [i, x] : entries) add(i, x);
}

SparseVector SparseVector::from_dense(const Vec& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.entries_.emplace_back(i, v[i]);
  return s;
}

Rational SparseVector::get(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::add(std::size_t index, const Rational& value) {
  if (value == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.emplace(it, index, value);
  }
}

SparseVector SparseVector::scaled(const Rational& s) const {
  SparseVector out;
  if (s == 0) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) out.entries_.emplace_back(i, x * s);
  return out;
}

void SparseVector::axpy_into(Vec& out, const Rational& s) const {
  for (const auto& [i, x] : entries_) out[i] += s * x;
}

Vec SparseVector::to_dense(std::size_t n) const {
  Vec v(n);
  for (const auto& [i, x] : entries_) v[i] = x;
  return v;
}

}  // namespace mcdeform
