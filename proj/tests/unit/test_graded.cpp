#include <gtest/gtest.h>

#include "mcdeform/errors.hpp"
#include "mcdeform/graded.hpp"
#include "test_support.hpp"

using namespace mcdeform;
using namespace mcdeform::testing;

TEST(GradedVectorSpace, DropsEmptyAndRejectsDuplicates) {
  GradedVectorSpace v({{-1, {"a"}}, {0, {}}, {2, {"b", "c"}}});
  EXPECT_EQ(v.degrees(), (std::vector<int>{-1, 2}));
  EXPECT_EQ(v.total_dim(), 3u);
  EXPECT_EQ(v.index_of(2, "c"), 1u);
  EXPECT_THROW(GradedVectorSpace({{0, {"a", "a"}}}), ShapeMismatch);
}

TEST(ChainComplex, RejectsBadBlocks) {
  EXPECT_THROW(make_complex({{0, {"a"}}, {1, {"b"}}}, {{0, QMatrix(2, 1)}}), ShapeMismatch);
}

TEST(ValidateComplex, Examples) {
  EXPECT_TRUE(validate_complex(make_complex({{0, {"a"}}, {1, {"b"}}}, {{0, QMatrix{{1}}}})).ok);
  EXPECT_TRUE(validate_complex(window_complex(2)).ok);
  auto bad = validate_complex(make_complex({{0, {"a"}}, {1, {"b"}}, {2, {"c"}}}, {{0, QMatrix{{1}}}, {1, QMatrix{{2}}}}));
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.axiom, "d_squared");
  ASSERT_FALSE(bad.witness.empty());
  EXPECT_NE(bad.witness[0].find("0"), std::string::npos);
}

TEST(Homology, Examples) {
  const ChainComplex id = identity_complex();
  for (int i = -3; i <= 3; ++i) EXPECT_EQ(homology_dim(id, i), 0u);
  const ChainComplex w = window_complex(3);
  for (int i = -3; i <= 3; ++i) EXPECT_EQ(homology_dim(w, i), 1u);
  EXPECT_EQ(homology_dim(w, 4), 0u);
}

TEST(HomologyProperty, KnownComplexesAndEuler) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    auto kc = random_complex(rng, -2, 2);
    ASSERT_TRUE(validate_complex(kc.complex).ok);
    for (const auto& [i, h] : kc.homology) EXPECT_EQ(homology_dim(kc.complex, i), h) << "degree " << i;
    EXPECT_EQ(euler_characteristic(kc.complex), homology_euler_characteristic(kc.complex));
  }
}

TEST(HomComplex, PointComplex) {
  ChainComplex h = end_complex(point_complex());
  EXPECT_EQ(h.degrees(), (std::vector<int>{0}));
  EXPECT_EQ(h.dim(0), 1u);
  EXPECT_TRUE(h.d(0).is_zero());
}

TEST(HomComplex, TwoDegreeComplex) {
  ChainComplex h = end_complex(two_degree_complex());
  EXPECT_EQ(h.dim(-1), 1u);
  EXPECT_EQ(h.dim(0), 2u);
  EXPECT_EQ(h.dim(1), 1u);
  for (int k = -1; k <= 1; ++k) EXPECT_TRUE(h.d(k).is_zero());
}

TEST(HomComplexProperty, SquareZeroAndDimensionCount) {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_complex(rng, -1, 1).complex;
    auto b = random_complex(rng, -2, 1).complex;
    ChainComplex h = hom_complex(a, b);
    EXPECT_TRUE(validate_complex(h).ok);
    for (int k = -4; k <= 4; ++k) EXPECT_EQ(h.dim(k), hom_dim_by_counting(a, b, k)) << "k = " << k;
  }
}

TEST(HomComplexProperty, ChainMapsAreCycles) {
  // A degree-0 element of Hom(A, B) is a cycle iff it is a chain map.
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_complex(rng, -1, 1).complex;
    ChainComplex h = end_complex(a);
    if (h.dim(0) == 0) continue;
    Vec coords(h.dim(0));
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = small_rational(rng);
    GradedMap f = hom_vector_to_map(a, a, 0, coords);
    EXPECT_EQ(is_chain_map(a, a, f), h.d(0).apply(coords).is_zero());
    EXPECT_EQ(hom_map_to_vector(a, a, f), coords);
  }
}

TEST(MappingCone, IdentityIsAcyclic) {
  Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_complex(rng, -1, 1).complex;
    GradedMap id{0, {}};
    for (int i : a.degrees()) id.blocks[i] = QMatrix::identity(a.dim(i));
    ChainComplex cone = mapping_cone(a, a, id);
    EXPECT_TRUE(validate_complex(cone).ok);
    for (int i = -3; i <= 3; ++i) EXPECT_EQ(homology_dim(cone, i), 0u);
  }
}

TEST(Compose, MatchesMatrixProduct) {
  ChainComplex a = make_complex({{0, {"a", "b"}}});
  GradedMap f{0, {{0, QMatrix{{1, 2}, {0, 1}}}}};
  GradedMap g{0, {{0, QMatrix{{0, 1}, {1, 0}}}}};
  GradedMap gf = compose(a, a, a, g, f);
  EXPECT_EQ(gf.block(a, a, 0), (QMatrix{{0, 1}, {1, 2}}));
}
