#ifndef MCDEFORM_FORM_HOST_HPP
#define MCDEFORM_FORM_HOST_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mcdeform/dgla.hpp"
#include "mcdeform/forms.hpp"

namespace mcdeform {

/// Element of Omega_n (x) h: one Sullivan form per basis vector of h.
class FormElement {
 public:
  FormElement() = default;
  FormElement(int n, std::size_t host_dim, int bound = kDefaultFormDegreeBound);

  int simplex_dim() const { return n_; }
  int bound() const { return bound_; }
  std::size_t host_dim() const { return components_.size(); }
  const SullivanForm& component(std::size_t a) const { return components_[a]; }
  SullivanForm& component(std::size_t a) { return components_[a]; }

  bool is_zero() const;
  int polynomial_degree() const;

  FormElement& operator+=(const FormElement& other);
  FormElement& operator-=(const FormElement& other);
  FormElement& operator*=(const Rational& s);
  friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
  friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
  friend FormElement operator-(FormElement a) { return a *= Rational(-1); }
  friend FormElement operator*(const Rational& s, FormElement a) { return a *= s; }
  friend bool operator==(const FormElement& a, const FormElement& b) {
    return a.n_ == b.n_ && a.components_ == b.components_;
  }

 private:
  int n_ = 0;
  int bound_ = kDefaultFormDegreeBound;
  std::vector<SullivanForm> components_;
};

/// The dg Lie algebra Omega_n (x) h with
/// d(w x) = dw x + (-1)^{|w|} w dx and [w x, u y] = (-1)^{|x||u|} (w ^ u) [x, y].
class FormHost {
 public:
  using Element = FormElement;

  FormHost(DGLA inner, int n, int bound = kDefaultFormDegreeBound);

  const DGLA& inner() const { return inner_; }
  int simplex_dim() const { return n_; }
  int bound() const { return bound_; }

  Element zero() const { return FormElement(n_, inner_.dim(), bound_); }
  Element differential(const Element& x) const;
  Element bracket(const Element& x, const Element& y) const;

  /// 1 (x) x.
  Element constant(const Vec& x) const;
  /// w (x) x.
  Element tensor(const SullivanForm& w, const Vec& x) const;

  /// Total degree |w| + |x| of every term equals `degree`.
  bool is_homogeneous(const Element& x, int degree) const;

  /// Same host one simplex dimension up or down.
  FormHost on_simplex(int n) const { return FormHost(inner_, n, bound_); }

  /// Human-readable description of the first nonzero term, e.g. "x: 1/2*t1*dt1".
  std::string first_term(const Element& x) const;

 private:
  DGLA inner_;
  int n_;
  int bound_;
};

FormElement face_map(int i, const FormElement& x);
FormElement degeneracy_map(int i, const FormElement& x);
FormElement pullback(const FormElement& x, const AffineMap& f);
/// 0-form part at the point (t_1, ..., t_n), as a vector in h.
Vec evaluate_at(const FormElement& x, const std::vector<Rational>& point);
/// Omega_0 (x) h = h.
Vec as_vector(const FormElement& x);

}  // namespace mcdeform

#endif  // MCDEFORM_FORM_HOST_HPP
