#include <gtest/gtest.h>

#include <variant>

#include "mcdeform/deligne.hpp"
#include "mcdeform/errors.hpp"
#include "mcdeform/simplicial.hpp"
#include "test_support.hpp"

using namespace mcdeform;
using namespace mcdeform::testing;

namespace {

FiniteGroupoid z2() { return group_groupoid({{0, 1}, {1, 0}}); }

bool same(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b) {
  return a.sizes == b.sizes && a.faces == b.faces && a.degeneracies == b.degeneracies;
}

}  // namespace

TEST(FiniteNerve, GroupExample) {
  FiniteSimplicialSet x = finite_nerve(z2(), 2);
  EXPECT_EQ(x.sizes, (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_TRUE(validate_simplicial(x).ok);
  EXPECT_EQ(pi0(x), 1u);
  FiniteSimplicialSet s3 = finite_nerve(group_groupoid({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}), 3);
  EXPECT_EQ(s3.sizes, (std::vector<std::size_t>{1, 3, 9, 27}));
  EXPECT_TRUE(validate_simplicial(s3).ok);
}

TEST(FiniteNerve, DiscreteAndCodiscrete) {
  EXPECT_EQ(pi0(finite_nerve(discrete_groupoid(2), 2)), 2u);
  FiniteGroupoid c = codiscrete_groupoid({0, 1, 0, 2, 1});
  FiniteSimplicialSet x = finite_nerve(c, 3);
  EXPECT_TRUE(validate_simplicial(x).ok);
  EXPECT_EQ(pi0(x), 3u);
  // One arrow per ordered pair inside each class.
  EXPECT_EQ(x.sizes[1], 4u + 4u + 1u);
}

TEST(Diagonal, OfConstantIsOriginal) {
  for (const auto& g : {z2(), codiscrete_groupoid({0, 0, 1}), discrete_groupoid(3)}) {
    FiniteSimplicialSet x = finite_nerve(g, 3);
    FiniteSimplicialSet d = diagonal(constant_bisimplicial(x));
    EXPECT_TRUE(same(d, x));
    EXPECT_TRUE(validate_simplicial(d).ok);
  }
}

TEST(ValidateSimplicial, RejectsBrokenTables) {
  FiniteSimplicialSet x = finite_nerve(codiscrete_groupoid({0, 0, 0}), 2);
  ASSERT_TRUE(validate_simplicial(x).ok);
  int rejected = 0;
  for (std::size_t i = 0; i < x.faces[2].size(); ++i)
    for (std::size_t s = 0; s < x.faces[2][i].size(); ++s) {
      FiniteSimplicialSet y = x;
      y.faces[2][i][s] = (y.faces[2][i][s] + 1) % y.sizes[1];
      if (!validate_simplicial(y).ok) ++rejected;
    }
  EXPECT_GT(rejected, 0);
  FiniteSimplicialSet y = x;
  y.degeneracies[0][0][0] = 1;
  auto r = validate_simplicial(y);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.axiom.empty());
}

TEST(NerveMember, Examples) {
  ArtinHost h(make_dual_numbers(3), graded_fixture());
  Rng rng(71);
  auto z = random_mc(rng, h);
  ASSERT_TRUE(z);
  EXPECT_TRUE(nerve_member(h, constant_path(h, *z).element).member);

  // Abelian host with dz = 0: z - t dgamma - dt gamma is MC for our sign
  // conventions; flipping the dt term leaves curvature dt dgamma behind.
  ArtinHost ab(make_dual_numbers(2), contractible_pair(0));
  FormHost fh(ab.host(), 1);
  Vec gamma = ab.element({{1, "eps", "cu"}});
  Vec dgamma = ab.host().differential(gamma);
  Vec z0 = ab.host().zero();
  const SullivanForm t = SullivanForm::coordinate(1, 1), dt = SullivanForm::coordinate_differential(1, 1);
  FormElement good = fh.constant(z0) - fh.tensor(t, dgamma) - fh.tensor(dt, gamma);
  FormElement flipped = fh.constant(z0) - fh.tensor(t, dgamma) + fh.tensor(dt, gamma);
  EXPECT_TRUE(nerve_member(ab, good).member);
  auto r = nerve_member(ab, flipped);
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.witness, "eps*cv: -2*dt1");

  FormElement wrong_degree = fh.constant(gamma);
  EXPECT_FALSE(nerve_member(ab, wrong_degree).member);
}

TEST(GaugePath, Examples) {
  Rng rng(72);
  ArtinHost h(make_dual_numbers(3), end_dgla(window_complex(1)));
  std::optional<Vec> z;
  while (!z) z = random_mc(rng, h);
  EXPECT_EQ(gauge_path(h, *z, h.host().zero()).element, constant_path(h, *z).element);

  ArtinHost ab(make_dual_numbers(2), contractible_pair(0));
  Vec gamma = ab.element({{3, "eps", "cu"}});
  NerveSimplex p = gauge_path(ab, ab.host().zero(), gamma);
  FormHost fh(ab.host(), 1);
  EXPECT_EQ(p.element, Rational(-1) * fh.tensor(SullivanForm::coordinate(1, 1), ab.host().differential(gamma)) -
                           fh.tensor(SullivanForm::coordinate_differential(1, 1), gamma));

  EXPECT_THROW(gauge_path(ab, ab.host().zero(), gamma, 0), DegreeOverflow);
  Vec not_mc = ArtinHost(make_dual_numbers(3), obstruction_fixture(false)).element({{1, "eps", "x"}});
  EXPECT_THROW(gauge_path(ArtinHost(make_dual_numbers(3), obstruction_fixture(false)), not_mc, Vec(not_mc.size())),
               PreconditionFailed);
}

TEST(GaugePathProperty, FacesAndMembership) {
  Rng rng(73);
  const std::vector<ArtinHost> hosts = {ArtinHost(make_dual_numbers(3), end_dgla(window_complex(1))),
                                        ArtinHost(make_dual_numbers(4), graded_fixture()),
                                        ArtinHost(make_dual_numbers(3), end_dgla(identity_complex()))};
  for (const auto& h : hosts)
    for (int trial = 0; trial < 6; ++trial) {
      auto z = random_mc(rng, h);
      if (!z) continue;
      Vec gamma = random_homogeneous(rng, h.host(), 0);
      NerveSimplex p = gauge_path(h, *z, gamma);
      EXPECT_TRUE(nerve_member(h, p.element).member);
      EXPECT_EQ(as_vector(face_map(1, p.element)), *z);
      EXPECT_EQ(as_vector(face_map(0, p.element)), gauge_act(h, gamma, *z));
      // Every interior point is MC and lies on the orbit.
      for (const Rational s : {Rational(1, 3), Rational(-2), Rational(5, 2)}) {
        Vec point = evaluate_at(p.element, {s});
        EXPECT_EQ(point, gauge_act(h, s * gamma, *z));
      }
    }
}

TEST(GroupMul, Examples) {
  Rng rng(74);
  ArtinHost h(make_dual_numbers(4), graded_fixture());
  ArtinHost ab(make_dual_numbers(3), contractible_pair(0));
  for (int trial = 0; trial < 5; ++trial) {
    auto g = gauge_group_vertex(h, random_homogeneous(rng, h.host(), 0));
    auto id = gauge_group_vertex(h, h.host().zero());
    EXPECT_EQ(group_mul(h, g, id).log, g.log);
    Vec a = random_homogeneous(rng, ab.host(), 0), b = random_homogeneous(rng, ab.host(), 0);
    EXPECT_EQ(as_vector(group_mul(ab, gauge_group_vertex(ab, a), gauge_group_vertex(ab, b)).log), a + b);
  }
  EXPECT_THROW(gauge_group_vertex(h, h.element({{1, "eps", "x"}})), PreconditionFailed);
}

TEST(GroupMulProperty, AssociativeAndCommutesWithFaces) {
  Rng rng(75);
  ArtinHost h(make_dual_numbers(4), end_dgla(window_complex(1)));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<GaugeGroupSimplex> paths;
    for (int k = 0; k < 3; ++k)
      paths.push_back(contraction_path(h, gauge_group_vertex(h, random_homogeneous(rng, h.host(), 0))));
    auto left = group_mul(h, group_mul(h, paths[0], paths[1]), paths[2]);
    auto right = group_mul(h, paths[0], group_mul(h, paths[1], paths[2]));
    EXPECT_EQ(left.log, right.log);
    for (int i = 0; i <= 1; ++i)
      EXPECT_EQ(face_map(i, group_mul(h, paths[0], paths[1])).log,
                group_mul(h, face_map(i, paths[0]), face_map(i, paths[1])).log);
  }
}

TEST(ContractionPath, Examples) {
  Rng rng(76);
  ArtinHost h(make_dual_numbers(4), graded_fixture());
  auto id = contraction_path(h, gauge_group_vertex(h, h.host().zero()));
  EXPECT_TRUE(id.log.is_zero());
  for (int trial = 0; trial < 10; ++trial) {
    Vec log = random_homogeneous(rng, h.host(), 0);
    auto path = contraction_path(h, gauge_group_vertex(h, log));
    EXPECT_TRUE(as_vector(face_map(1, path).log).is_zero());
    EXPECT_EQ(as_vector(face_map(0, path).log), log);
    const Rational s = small_rational(rng), u = small_rational(rng);
    EXPECT_EQ(bch(h, evaluate_at(path, {s}), evaluate_at(path, {u})), evaluate_at(path, {s + u}));
  }
  EXPECT_THROW(contraction_path(h, id), PreconditionFailed);
}

TEST(Pi0SquareZero, Examples) {
  auto r = make_dual_numbers(2);
  auto ab = pi0_sigma_square_zero(abelian_dgla({0, 1, 1, 2}), r);
  EXPECT_EQ(ab.orbit_dimension, 2u);
  EXPECT_EQ(ab.kunneth_dimension, 2u);
  auto two = pi0_sigma_square_zero(end_dgla(two_degree_complex()), r);
  EXPECT_EQ(two.orbit_dimension, 1u);
  auto acyclic = pi0_sigma_square_zero(direct_product(contractible_pair(0), contractible_pair(1, "e")), r);
  EXPECT_EQ(acyclic.orbit_dimension, 0u);
  ASSERT_EQ(acyclic.representatives.size(), 1u);
  EXPECT_TRUE(acyclic.representatives[0].is_zero());
  EXPECT_THROW(pi0_sigma_square_zero(sl2(), make_dual_numbers(3)), PreconditionFailed);
}

TEST(Pi0SquareZeroProperty, AgreesWithGaugeSearchAndNerve) {
  Rng rng(77);
  auto r = make_dual_numbers(2);
  int nontrivial = 0;
  for (int trial = 0; trial < 15; ++trial) {
    DGLA g = end_dgla(random_complex(rng, -1, 1, 1).complex);
    ArtinHost h(r, g);
    auto c = pi0_sigma_square_zero(g, r);
    ASSERT_EQ(c.kunneth_dimension, c.orbit_dimension);
    EXPECT_EQ(c.representatives.size(), c.orbit_dimension + 1);
    // Pad the representatives with gauge-moved copies; classes must not grow.
    std::vector<Vec> objects = c.representatives;
    for (const auto& z : c.representatives) objects.push_back(gauge_act(h, random_homogeneous(rng, h.host(), 0), z));
    for (const auto& b : c.coboundary_basis) objects.push_back(b);
    DeligneFragment f = deligne_fragment(h, objects);
    EXPECT_EQ(f.class_count, c.representatives.size());
    EXPECT_TRUE(validate_simplicial(finite_nerve(f.groupoid, 2)).ok);
    EXPECT_EQ(pi0(finite_nerve(f.groupoid, 2)), c.representatives.size());
    if (c.orbit_dimension > 0) ++nontrivial;
  }
  EXPECT_GE(nontrivial, 3);
}

TEST(McClassesMap, Examples) {
  auto r = make_dual_numbers(2);
  DGLA g = end_dgla(two_degree_complex());
  auto id = mc_classes_map(identity_morphism(g), r);
  EXPECT_TRUE(id.bijective());
  EXPECT_TRUE(id.quasi_iso);
  auto proj = mc_classes_map(first_projection(g, contractible_pair(0)), r);
  EXPECT_TRUE(proj.quasi_iso);
  EXPECT_TRUE(proj.bijective());
  auto kill = mc_classes_map(first_projection(g, abelian_dgla({1})), r);
  EXPECT_FALSE(kill.quasi_iso);
  EXPECT_FALSE(kill.injective);
  EXPECT_TRUE(kill.surjective);
  EXPECT_EQ(kill.source_dim, 2u);
  EXPECT_EQ(kill.target_dim, 1u);
}

TEST(McClassesMapProperty, QuasiIsosAreBijective) {
  Rng rng(78);
  auto r = make_dual_numbers(2);
  for (int trial = 0; trial < 10; ++trial) {
    DGLA g = end_dgla(random_complex(rng, -1, 1, 1).complex);
    for (int k = -1; k <= 1; ++k) {
      auto rep = mc_classes_map(first_projection(g, contractible_pair(k)), r);
      EXPECT_TRUE(rep.quasi_iso);
      EXPECT_TRUE(rep.bijective());
    }
  }
}
