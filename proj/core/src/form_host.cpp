#include "mcdeform/form_host.hpp"

#include "mcdeform/errors.hpp"

namespace mcdeform {

FormElement::FormElement(int n, std::size_t host_dim, int bound)
    : n_(n), bound_(bound), components_(host_dim, SullivanForm(n, bound)) {}

bool FormElement::is_zero() const {
  for (const auto& w : components_)
    if (!w.is_zero()) return false;
  return true;
}

int FormElement::polynomial_degree() const {
  int d = -1;
  for (const auto& w : components_) d = std::max(d, w.polynomial_degree());
  return d;
}

FormElement& FormElement::operator+=(const FormElement& other) {
  if (other.components_.size() != components_.size()) throw ShapeMismatch("form elements of different hosts");
  for (std::size_t a = 0; a < components_.size(); ++a) components_[a] += other.components_[a];
  return *this;
}

FormElement& FormElement::operator-=(const FormElement& other) {
  if (other.components_.size() != components_.size()) throw ShapeMismatch("form elements of different hosts");
  for (std::size_t a = 0; a < components_.size(); ++a) components_[a] -= other.components_[a];
  return *this;
}

FormElement& FormElement::operator*=(const Rational& s) {
  for (auto& w : components_) w *= s;
  return *this;
}

FormHost::FormHost(DGLA inner, int n, int bound) : inner_(std::move(inner)), n_(n), bound_(bound) {}

FormElement FormHost::differential(const FormElement& x) const {
  FormElement out = zero();
  for (std::size_t a = 0; a < inner_.dim(); ++a) {
    const SullivanForm& w = x.component(a);
    if (w.is_zero()) continue;
    out.component(a) += omega_d(w);
    const SullivanForm signed_w = w.even_part() - w.odd_part();
    for (const auto& [b, c] : inner_.d_basis(a)) out.component(b) += c * signed_w;
  }
  return out;
}

FormElement FormHost::bracket(const FormElement& x, const FormElement& y) const {
  const std::size_t n = inner_.dim();
  std::vector<SullivanForm> y_even(n), y_odd(n);
  for (std::size_t b = 0; b < n; ++b) {
    y_even[b] = y.component(b).even_part();
    y_odd[b] = y.component(b).odd_part();
  }
  FormElement out = zero();
  for (std::size_t a = 0; a < n; ++a) {
    const SullivanForm& wa = x.component(a);
    if (wa.is_zero()) continue;
    const bool odd_a = inner_.degree(a) % 2 != 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (y.component(b).is_zero()) continue;
      const auto& lie = inner_.bracket_basis(a, b);
      if (lie.empty()) continue;
      // (-1)^{|x_a| |u|} with u the form factor of the right argument.
      SullivanForm right = odd_a ? y_even[b] - y_odd[b] : y.component(b);
      SullivanForm prod = wedge(wa, right);
      if (prod.is_zero()) continue;
      for (const auto& [e, c] : lie) out.component(e) += c * prod;
    }
  }
  return out;
}

FormElement FormHost::constant(const Vec& x) const {
  return tensor(SullivanForm::constant(n_, 1, bound_), x);
}

FormElement FormHost::tensor(const SullivanForm& w, const Vec& x) const {
  if (x.size() != inner_.dim()) throw ShapeMismatch("vector does not match the host dimension");
  FormElement out = zero();
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] != 0) out.component(a) = x[a] * w;
  return out;
}

bool FormHost::is_homogeneous(const FormElement& x, int degree) const {
  for (std::size_t a = 0; a < inner_.dim(); ++a)
    if (!x.component(a).is_homogeneous(degree - inner_.degree(a))) return false;
  return true;
}

std::string FormHost::first_term(const FormElement& x) const {
  for (std::size_t a = 0; a < inner_.dim(); ++a) {
    const SullivanForm& w = x.component(a);
    if (w.is_zero()) continue;
    const auto& [m, c] = *w.terms().begin();
    SullivanForm single(w.simplex_dim(), w.bound());
    single.add_term(m, c);
    return inner_.label(a) + ": " + single.to_string();
  }
  return "0";
}

FormElement pullback(const FormElement& x, const AffineMap& f) {
  FormElement out(f.target_dim, x.host_dim(), x.bound());
  for (std::size_t a = 0; a < x.host_dim(); ++a)
    if (!x.component(a).is_zero()) out.component(a) = pullback(x.component(a), f);
  return out;
}

FormElement face_map(int i, const FormElement& x) { return pullback(x, coface(x.simplex_dim(), i)); }

FormElement degeneracy_map(int i, const FormElement& x) {
  return pullback(x, codegeneracy(x.simplex_dim(), i));
}

Vec evaluate_at(const FormElement& x, const std::vector<Rational>& point) {
  Vec v(x.host_dim());
  for (std::size_t a = 0; a < x.host_dim(); ++a) v[a] = evaluate_at(x.component(a), point);
  return v;
}

Vec as_vector(const FormElement& x) {
  if (x.simplex_dim() != 0) throw PreconditionFailed("as_vector needs a form element on the 0-simplex");
  return evaluate_at(x, {});
}

}  // namespace mcdeform
