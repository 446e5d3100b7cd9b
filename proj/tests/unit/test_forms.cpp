#include <gtest/gtest.h>

#include "mcdeform/errors.hpp"
#include "mcdeform/form_host.hpp"
#include "mcdeform/forms.hpp"
#include "test_support.hpp"

using namespace mcdeform;
using namespace mcdeform::testing;

namespace {

SullivanForm t(int n, int j) { return SullivanForm::coordinate(n, j); }
SullivanForm dt(int n, int j) { return SullivanForm::coordinate_differential(n, j); }

int form_degree_of(const SullivanForm& w) {
  for (int p = 0; p <= w.simplex_dim(); ++p)
    if (w.is_homogeneous(p)) return p;
  return -1;
}

// Barycentric insertion of a zero coordinate at vertex i, computed without
// the library's affine maps.
std::vector<Rational> coface_point(int n, int i, const std::vector<Rational>& p) {
  std::vector<Rational> bary{1};
  for (const auto& x : p) {
    bary[0] -= x;
    bary.push_back(x);
  }
  bary.insert(bary.begin() + i, Rational(0));
  (void)n;
  return {bary.begin() + 1, bary.end()};
}

std::vector<Rational> random_point(Rng& rng, int n) {
  std::vector<Rational> p;
  for (int j = 0; j < n; ++j) p.push_back(small_rational(rng, 2));
  return p;
}

}  // namespace

TEST(OmegaD, Examples) {
  EXPECT_EQ(omega_d(wedge(t(1, 1), t(1, 1))), Rational(2) * wedge(t(1, 1), dt(1, 1)));
  EXPECT_TRUE(omega_d(dt(1, 1)).is_zero());
  EXPECT_EQ(omega_d(wedge(t(2, 1), t(2, 2))), wedge(t(2, 2), dt(2, 1)) + wedge(t(2, 1), dt(2, 2)));
}

TEST(Wedge, Examples) {
  EXPECT_TRUE(wedge(dt(1, 1), dt(1, 1)).is_zero());
  EXPECT_EQ(wedge(t(1, 1), dt(1, 1)).to_string(), "1*t1*dt1");
  EXPECT_EQ(wedge(dt(2, 1), dt(2, 2)), Rational(-1) * wedge(dt(2, 2), dt(2, 1)));
  EXPECT_THROW(wedge(t(1, 1), dt(2, 1)), ShapeMismatch);
}

TEST(Wedge, DegreeBoundIsEnforced) {
  SullivanForm big(1, 3);
  FormMonomial m{0, {3}};
  big.add_term(m, 1);
  EXPECT_THROW(wedge(big, SullivanForm::coordinate(1, 1, 3)), DegreeOverflow);
  SullivanForm w(1, 2);
  EXPECT_THROW(w.add_term(FormMonomial{0, {3}}, 1), DegreeOverflow);
  EXPECT_NO_THROW(w.add_term(FormMonomial{0, {3}}, 0));
}

TEST(FaceMap, Examples) {
  // Face 0 omits vertex 0 (t = 1), face 1 omits vertex 1 (t = 0).
  EXPECT_EQ(evaluate_at(face_map(0, t(1, 1)), {}), 1);
  EXPECT_EQ(evaluate_at(face_map(1, t(1, 1)), {}), 0);
  for (int i = 0; i <= 2; ++i) EXPECT_EQ(face_map(i, dt(2, 1)), omega_d(face_map(i, t(2, 1))));
  EXPECT_THROW(face_map(3, t(2, 1)), PreconditionFailed);
}

TEST(DegeneracyMap, Examples) {
  EXPECT_EQ(degeneracy_map(0, SullivanForm::constant(1, Rational(5, 2))), SullivanForm::constant(2, Rational(5, 2)));
  EXPECT_EQ(degeneracy_map(0, SullivanForm::constant(0, 3)), SullivanForm::constant(1, 3));
}

TEST(FormsProperty, DifferentialSquaresToZeroAndLeibniz) {
  Rng rng(41);
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 80; ++trial) {
      const int p = static_cast<int>(uniform(rng, 0, n));
      const int q = static_cast<int>(uniform(rng, 0, n));
      SullivanForm u = random_homogeneous_form(rng, n, p, 3, 4);
      SullivanForm w = random_homogeneous_form(rng, n, q, 3, 4);
      EXPECT_TRUE(omega_d(omega_d(u)).is_zero());
      const Rational sign = p % 2 == 0 ? 1 : -1;
      EXPECT_EQ(omega_d(wedge(u, w)), wedge(omega_d(u), w) + sign * wedge(u, omega_d(w)));
      const Rational swap = (p * q) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(wedge(u, w), swap * wedge(w, u));
      ++checked;
    }
  EXPECT_GE(checked, 200);
}

TEST(FormsProperty, WedgeIsAssociative) {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(uniform(rng, 1, 3));
    SullivanForm a = random_form(rng, n, 2, 3), b = random_form(rng, n, 2, 3), c = random_form(rng, n, 2, 3);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(FormsProperty, FaceIdentities) {
  Rng rng(43);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 70; ++trial) {
      SullivanForm w = random_form(rng, n, 2, 4);
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j; ++i) EXPECT_EQ(face_map(i, face_map(j, w)), face_map(j - 1, face_map(i, w)));
    }
}

TEST(FormsProperty, DegeneracyIdentities) {
  Rng rng(44);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 70; ++trial) {
      SullivanForm w = random_form(rng, n, 2, 4);
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          EXPECT_EQ(degeneracy_map(i, degeneracy_map(j, w)), degeneracy_map(j + 1, degeneracy_map(i, w)));
      // Mixed identities, with d_i : Omega_{n+1} -> Omega_n.
      for (int j = 0; j <= n; ++j) {
        SullivanForm s = degeneracy_map(j, w);
        EXPECT_EQ(face_map(j, s), w);
        EXPECT_EQ(face_map(j + 1, s), w);
        for (int i = 0; i < j; ++i) EXPECT_EQ(face_map(i, s), degeneracy_map(j - 1, face_map(i, w)));
        for (int i = j + 2; i <= n + 1; ++i) EXPECT_EQ(face_map(i, s), degeneracy_map(j, face_map(i - 1, w)));
      }
    }
}

TEST(FormsProperty, SimplicialOperatorsAreDgAlgebraMaps) {
  Rng rng(45);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      SullivanForm u = random_form(rng, n, 2, 3), w = random_form(rng, n, 2, 3);
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(face_map(i, wedge(u, w)), wedge(face_map(i, u), face_map(i, w)));
        EXPECT_EQ(face_map(i, omega_d(u)), omega_d(face_map(i, u)));
        EXPECT_EQ(degeneracy_map(i, wedge(u, w)), wedge(degeneracy_map(i, u), degeneracy_map(i, w)));
        EXPECT_EQ(degeneracy_map(i, omega_d(u)), omega_d(degeneracy_map(i, u)));
      }
    }
}

TEST(FormsProperty, FaceMatchesPointEvaluation) {
  Rng rng(46);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      SullivanForm w = random_form(rng, n, 3, 5);
      for (int i = 0; i <= n; ++i) {
        auto p = random_point(rng, n - 1);
        EXPECT_EQ(evaluate_at(face_map(i, w), p), evaluate_at(w, coface_point(n, i, p)));
      }
    }
}

TEST(FormsProperty, PointFormsAreConstants) {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    SullivanForm w = random_form(rng, 2, 3, 4);
    SullivanForm v = face_map(0, face_map(0, w));
    EXPECT_EQ(v.simplex_dim(), 0);
    for (const auto& [m, c] : v.terms()) {
      EXPECT_EQ(m.dt_mask, 0u);
      EXPECT_TRUE(m.exponents.empty());
    }
    EXPECT_EQ(v, SullivanForm::constant(0, evaluate_at(v, {})));
  }
}

TEST(FormsProperty, RandomFormsHaveDeclaredDegree) {
  Rng rng(48);
  for (int trial = 0; trial < 20; ++trial) {
    SullivanForm w = random_homogeneous_form(rng, 3, 2, 2, 3);
    if (!w.is_zero()) EXPECT_EQ(form_degree_of(w), 2);
  }
}

TEST(FormHost, IsADgla) {
  Rng rng(49);
  const std::vector<DGLA> fibers = {graded_fixture(), sl2(), obstruction_fixture(true)};
  for (const auto& g : fibers)
    for (int n = 1; n <= 2; ++n) {
      FormHost h(g, n);
      auto random_element = [&] {
        FormElement x = h.zero();
        for (std::size_t a = 0; a < g.dim(); ++a)
          if (uniform(rng, 0, 1)) x.component(a) = random_form(rng, n, 1, 2);
        return x;
      };
      for (int trial = 0; trial < 10; ++trial) {
        FormElement x = random_element(), y = random_element();
        EXPECT_TRUE(h.differential(h.differential(x)).is_zero());
        // Faces are dgla maps Omega_n (x) g -> Omega_{n-1} (x) g.
        FormElement xy = h.bracket(x, y);
        for (int i = 0; i <= n; ++i) {
          EXPECT_EQ(face_map(i, h.differential(x)), h.on_simplex(n - 1).differential(face_map(i, x)));
          EXPECT_EQ(face_map(i, xy), h.on_simplex(n - 1).bracket(face_map(i, x), face_map(i, y)));
        }
      }
    }
}

TEST(FormHost, HomogeneousLeibnizAndJacobi) {
  Rng rng(50);
  DGLA g = graded_fixture();
  FormHost h(g, 1);
  auto homogeneous = [&](int degree) {
    // w (x) e with |w| + |e| = degree.
    FormElement x = h.zero();
    for (std::size_t a = 0; a < g.dim(); ++a) {
      const int p = degree - g.degree(a);
      if (p < 0 || p > 1 || uniform(rng, 0, 2) == 0) continue;
      x.component(a) = random_homogeneous_form(rng, 1, p, 2, 2);
    }
    return x;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const int p = static_cast<int>(uniform(rng, 0, 2));
    const int q = static_cast<int>(uniform(rng, 0, 2));
    const int r = static_cast<int>(uniform(rng, 0, 2));
    FormElement x = homogeneous(p), y = homogeneous(q), z = homogeneous(r);
    ASSERT_TRUE(h.is_homogeneous(x, p));
    const Rational sp = p % 2 == 0 ? 1 : -1;
    const Rational spq = (p * q) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(h.bracket(x, y), -spq * h.bracket(y, x));
    EXPECT_EQ(h.differential(h.bracket(x, y)),
              h.bracket(h.differential(x), y) + sp * h.bracket(x, h.differential(y)));
    // [x, [y, z]] = [[x, y], z] + (-1)^{pq} [y, [x, z]].
    EXPECT_EQ(h.bracket(x, h.bracket(y, z)), h.bracket(h.bracket(x, y), z) + spq * h.bracket(y, h.bracket(x, z)));
  }
}

TEST(FormHost, ConstantAndTensor) {
  DGLA g = affine_lie();
  FormHost h(g, 1);
  FormElement c = h.constant(Vec{1, 2});
  EXPECT_TRUE(h.differential(c).is_zero());
  EXPECT_EQ(as_vector(face_map(0, c)), (Vec{1, 2}));
  FormElement tx = h.tensor(t(1, 1), Vec{1, 0});
  EXPECT_EQ(evaluate_at(tx, {Rational(1, 3)}), (Vec{Rational(1, 3), 0}));
  EXPECT_EQ(h.first_term(h.differential(tx)), "x: 1*dt1");
}

TEST(FormHost, AbelianFiberStaysAbelian) {
  // Degree-bounded forms on Delta^1 with polynomial degree <= 2 coefficients.
  Rng rng(51);
  DGLA g = abelian_dgla({0, 1});
  FormHost h(g, 1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    FormElement x = h.zero(), y = h.zero();
    for (std::size_t a = 0; a < g.dim(); ++a) {
      x.component(a) = random_form(rng, 1, 2, 3, 2);
      y.component(a) = random_form(rng, 1, 2, 3, 2);
    }
    EXPECT_TRUE(h.bracket(x, y).is_zero());
    FormElement dx = h.zero();
    for (std::size_t a = 0; a < g.dim(); ++a) dx.component(a) = omega_d(x.component(a));
    EXPECT_EQ(h.differential(x), dx);
  }
}
