#ifndef MCDEFORM_FORMS_HPP
#define MCDEFORM_FORMS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcdeform/rational.hpp"

namespace mcdeform {

inline constexpr int kDefaultFormDegreeBound = 8;

/// t_1^{e_1} ... t_n^{e_n} dt_{j_1} ^ ... ^ dt_{j_p} with j_1 < ... < j_p.
/// Bit j-1 of `dt_mask` marks dt_j. t_0 = 1 - sum t_i is eliminated, so
/// every form has a unique expansion in these monomials.
struct FormMonomial {
  std::uint32_t dt_mask = 0;
  std::vector<int> exponents;

  int form_degree() const;
  int polynomial_degree() const;
  auto operator<=>(const FormMonomial&) const = default;
};

/// Polynomial differential form on the standard n-simplex with rational
/// coefficients and a hard bound on polynomial degree. Operations that would
/// exceed the bound throw DegreeOverflow.
class SullivanForm {
 public:
  SullivanForm() = default;
  explicit SullivanForm(int n, int bound = kDefaultFormDegreeBound);

  static SullivanForm constant(int n, const Rational& c, int bound = kDefaultFormDegreeBound);
  /// t_j, 1 <= j <= n.
  static SullivanForm coordinate(int n, int j, int bound = kDefaultFormDegreeBound);
  /// dt_j, 1 <= j <= n.
  static SullivanForm coordinate_differential(int n, int j, int bound = kDefaultFormDegreeBound);

  int simplex_dim() const { return n_; }
  int bound() const { return bound_; }
  const std::map<FormMonomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Adds c times the monomial, throwing DegreeOverflow above the bound.
  void add_term(const FormMonomial& m, const Rational& c);
  /// Max polynomial degree over the terms, -1 for the zero form.
  int polynomial_degree() const;
  /// True iff every term has the given exterior degree.
  bool is_homogeneous(int form_degree) const;
  /// Terms of even (resp. odd) exterior degree.
  SullivanForm even_part() const;
  SullivanForm odd_part() const;

  SullivanForm& operator+=(const SullivanForm& other);
  SullivanForm& operator-=(const SullivanForm& other);
  SullivanForm& operator*=(const Rational& s);
  friend SullivanForm operator+(SullivanForm a, const SullivanForm& b) { return a += b; }
  friend SullivanForm operator-(SullivanForm a, const SullivanForm& b) { return a -= b; }
  friend SullivanForm operator*(const Rational& s, SullivanForm a) { return a *= s; }
  friend bool operator==(const SullivanForm& a, const SullivanForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int n_ = 0;
  int bound_ = kDefaultFormDegreeBound;
  std::map<FormMonomial, Rational> terms_;
};

SullivanForm omega_d(const SullivanForm& w);
SullivanForm wedge(const SullivanForm& u, const SullivanForm& w);

/// Affine map Delta^m -> Delta^n in eliminated coordinates: source variable
/// t_j (j = 1..n) pulls back to images[j-1] = (c, a_1, ..., a_m), meaning
/// c + a_1 s_1 + ... + a_m s_m.
struct AffineMap {
  int target_dim = 0;
  std::vector<std::vector<Rational>> images;
};

SullivanForm pullback(const SullivanForm& w, const AffineMap& f);

/// Pullback along the i-th coface Delta^{n-1} -> Delta^n, which misses vertex i.
SullivanForm face_map(int i, const SullivanForm& w);
/// Pullback along the i-th codegeneracy Delta^{n+1} -> Delta^n, which merges
/// vertices i and i+1.
SullivanForm degeneracy_map(int i, const SullivanForm& w);

AffineMap coface(int n, int i);
AffineMap codegeneracy(int n, int i);
/// The vertex-free point (t_1, ..., t_n) as a map Delta^0 -> Delta^n.
AffineMap point_map(const std::vector<Rational>& point);

/// Value of the 0-form part at a point given by (t_1, ..., t_n).
Rational evaluate_at(const SullivanForm& w, const std::vector<Rational>& point);

}  // namespace mcdeform

#endif  // MCDEFORM_FORMS_HPP
