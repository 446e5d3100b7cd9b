#include "mcdeform/forms.hpp"

#include <bit>
#include <numeric>

#include "mcdeform/errors.hpp"

namespace mcdeform {

int FormMonomial::form_degree() const { return std::popcount(dt_mask); }

int FormMonomial::polynomial_degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

SullivanForm::SullivanForm(int n, int bound) : n_(n), bound_(bound) {
  if (n < 0 || n > 31) throw PreconditionFailed("simplex dimension out of range");
}

SullivanForm SullivanForm::constant(int n, const Rational& c, int bound) {
  SullivanForm w(n, bound);
  w.add_term(FormMonomial{0, std::vector<int>(static_cast<std::size_t>(n), 0)}, c);
  return w;
}

SullivanForm SullivanForm::coordinate(int n, int j, int bound) {
  if (j < 1 || j > n) throw PreconditionFailed("coordinate index out of range");
  SullivanForm w(n, bound);
  FormMonomial m{0, std::vector<int>(static_cast<std::size_t>(n), 0)};
  m.exponents[static_cast<std::size_t>(j - 1)] = 1;
  w.add_term(m, 1);
  return w;
}

SullivanForm SullivanForm::coordinate_differential(int n, int j, int bound) {
  if (j < 1 || j > n) throw PreconditionFailed("coordinate index out of range");
  SullivanForm w(n, bound);
  w.add_term(FormMonomial{1u << (j - 1), std::vector<int>(static_cast<std::size_t>(n), 0)}, 1);
  return w;
}

void SullivanForm::add_term(const FormMonomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.exponents.size() != static_cast<std::size_t>(n_) || (n_ < 32 && (m.dt_mask >> n_) != 0))
    throw ShapeMismatch("monomial does not live on the " + std::to_string(n_) + "-simplex");
  if (m.polynomial_degree() > bound_)
    throw DegreeOverflow("polynomial degree " + std::to_string(m.polynomial_degree()) +
                         " exceeds bound " + std::to_string(bound_));
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int SullivanForm::polynomial_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.polynomial_degree());
  return d;
}

bool SullivanForm::is_homogeneous(int form_degree) const {
  for (const auto& [m, c] : terms_)
    if (m.form_degree() != form_degree) return false;
  return true;
}

SullivanForm SullivanForm::even_part() const {
  SullivanForm w(n_, bound_);
  for (const auto& [m, c] : terms_)
    if (m.form_degree() % 2 == 0) w.terms_.emplace(m, c);
  return w;
}

SullivanForm SullivanForm::odd_part() const {
  SullivanForm w(n_, bound_);
  for (const auto& [m, c] : terms_)
    if (m.form_degree() % 2 == 1) w.terms_.emplace(m, c);
  return w;
}

SullivanForm& SullivanForm::operator+=(const SullivanForm& other) {
  if (other.n_ != n_) throw ShapeMismatch("forms live on different simplices");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SullivanForm& SullivanForm::operator-=(const SullivanForm& other) {
  if (other.n_ != n_) throw ShapeMismatch("forms live on different simplices");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SullivanForm& SullivanForm::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string SullivanForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += mcdeform::to_string(c);
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
      if (m.exponents[j] == 0) continue;
      s += "*t" + std::to_string(j + 1);
      if (m.exponents[j] > 1) s += "^" + std::to_string(m.exponents[j]);
    }
    bool first = true;
    for (int j = 0; j < n_; ++j)
      if (m.dt_mask & (1u << j)) {
        s += first ? "*" : "^";
        s += "dt" + std::to_string(j + 1);
        first = false;
      }
  }
  return s;
}

namespace {

// Sign of moving dt_J past dt_I when forming dt_I ^ dt_J in sorted order.
int wedge_sign(std::uint32_t left, std::uint32_t right) {
  int inversions = 0;
  for (std::uint32_t r = right; r != 0; r &= r - 1) {
    const std::uint32_t bit = r & (~r + 1);
    inversions += std::popcount(left & ~((bit << 1) - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

SullivanForm wedge(const SullivanForm& u, const SullivanForm& w) {
  if (u.simplex_dim() != w.simplex_dim()) throw ShapeMismatch("forms live on different simplices");
  SullivanForm out(u.simplex_dim(), std::min(u.bound(), w.bound()));
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mw, cw] : w.terms()) {
      if (mu.dt_mask & mw.dt_mask) continue;
      FormMonomial m{mu.dt_mask | mw.dt_mask, mu.exponents};
      for (std::size_t j = 0; j < m.exponents.size(); ++j) m.exponents[j] += mw.exponents[j];
      out.add_term(m, Rational(wedge_sign(mu.dt_mask, mw.dt_mask)) * cu * cw);
    }
  return out;
}

SullivanForm omega_d(const SullivanForm& w) {
  SullivanForm out(w.simplex_dim(), w.bound());
  for (const auto& [m, c] : w.terms())
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
      const std::uint32_t bit = 1u << j;
      if (m.exponents[j] == 0 || (m.dt_mask & bit)) continue;
      FormMonomial dm{m.dt_mask | bit, m.exponents};
      dm.exponents[j] -= 1;
      // dt_j ^ dt_I: dt_j moves past the dt_i with i < j.
      const int sign = std::popcount(m.dt_mask & (bit - 1)) % 2 == 0 ? 1 : -1;
      out.add_term(dm, Rational(sign * m.exponents[j]) * c);
    }
  return out;
}

SullivanForm pullback(const SullivanForm& w, const AffineMap& f) {
  const int n = w.simplex_dim();
  const int m = f.target_dim;
  if (f.images.size() != static_cast<std::size_t>(n)) throw ShapeMismatch("affine map has the wrong source");
  std::vector<SullivanForm> var_images, diff_images;
  for (const auto& img : f.images) {
    if (img.size() != static_cast<std::size_t>(m) + 1) throw ShapeMismatch("affine image has the wrong length");
    SullivanForm v = SullivanForm::constant(m, img[0], w.bound());
    SullivanForm dv(m, w.bound());
    for (int k = 1; k <= m; ++k) {
      const Rational& a = img[static_cast<std::size_t>(k)];
      if (a == 0) continue;
      v += a * SullivanForm::coordinate(m, k, w.bound());
      dv += a * SullivanForm::coordinate_differential(m, k, w.bound());
    }
    var_images.push_back(std::move(v));
    diff_images.push_back(std::move(dv));
  }
  SullivanForm out(m, w.bound());
  for (const auto& [mono, c] : w.terms()) {
    SullivanForm term = SullivanForm::constant(m, c, w.bound());
    for (int j = 0; j < n; ++j)
      for (int e = 0; e < mono.exponents[static_cast<std::size_t>(j)]; ++e)
        term = wedge(term, var_images[static_cast<std::size_t>(j)]);
    for (int j = 0; j < n; ++j)
      if (mono.dt_mask & (1u << j)) term = wedge(term, diff_images[static_cast<std::size_t>(j)]);
    out += term;
  }
  return out;
}

AffineMap coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw PreconditionFailed("coface index out of range");
  AffineMap f;
  f.target_dim = n - 1;
  for (int j = 1; j <= n; ++j) {
    std::vector<Rational> img(static_cast<std::size_t>(n), Rational(0));
    if (i == 0) {
      if (j == 1) {
        img[0] = 1;
        for (int k = 1; k <= n - 1; ++k) img[static_cast<std::size_t>(k)] = -1;
      } else {
        img[static_cast<std::size_t>(j - 1)] = 1;
      }
    } else if (j < i) {
      img[static_cast<std::size_t>(j)] = 1;
    } else if (j > i) {
      img[static_cast<std::size_t>(j - 1)] = 1;
    }
    f.images.push_back(std::move(img));
  }
  return f;
}

AffineMap codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw PreconditionFailed("codegeneracy index out of range");
  AffineMap f;
  f.target_dim = n + 1;
  for (int j = 1; j <= n; ++j) {
    std::vector<Rational> img(static_cast<std::size_t>(n) + 2, Rational(0));
    if (j < i) {
      img[static_cast<std::size_t>(j)] = 1;
    } else if (j == i) {
      img[static_cast<std::size_t>(i)] = 1;
      img[static_cast<std::size_t>(i) + 1] = 1;
    } else {
      img[static_cast<std::size_t>(j) + 1] = 1;
    }
    f.images.push_back(std::move(img));
  }
  return f;
}

AffineMap point_map(const std::vector<Rational>& point) {
  AffineMap f;
  f.target_dim = 0;
  for (const auto& x : point) f.images.push_back({x});
  return f;
}

SullivanForm face_map(int i, const SullivanForm& w) { return pullback(w, coface(w.simplex_dim(), i)); }

SullivanForm degeneracy_map(int i, const SullivanForm& w) {
  return pullback(w, codegeneracy(w.simplex_dim(), i));
}

Rational evaluate_at(const SullivanForm& w, const std::vector<Rational>& point) {
  SullivanForm v = pullback(w, point_map(point));
  auto it = v.terms().find(FormMonomial{0, {}});
  return it == v.terms().end() ? Rational(0) : it->second;
}

}  // namespace mcdeform
