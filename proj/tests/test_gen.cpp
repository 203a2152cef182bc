#include <gtest/gtest.h>

#include "ringlat/errors.hpp"
#include "ringlat/gen.hpp"
#include "ringlat/canonical.hpp"

using namespace ringlat;

TEST(Gen, ShapeNames) {
  for (Shape s : {Shape::LocalSubintegral, Shape::ProductOfLocals, Shape::FieldTower, Shape::Mixed}) {
    EXPECT_EQ(parse_shape(shape_name(s)), s);
  }
  EXPECT_FALSE(parse_shape("pyramid"));
}

TEST(Gen, RngIsDeterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(3);
  for (int i = 0; i < 1000; ++i) {
    const auto x = c.between(2, 5);
    EXPECT_GE(x, 2u);
    EXPECT_LE(x, 5u);
  }
}

TEST(Gen, SpecValidation) {
  EXPECT_THROW(validate_spec(GenSpec{1, 6, 4, Shape::Mixed, 1}), AlgebraError);
  EXPECT_THROW(validate_spec(GenSpec{1, 128, 4, Shape::Mixed, 1}), AlgebraError);
  EXPECT_THROW(validate_spec(GenSpec{1, 2, 1, Shape::Mixed, 1}), AlgebraError);
  EXPECT_THROW(validate_spec(GenSpec{1, 2, kMaxGenDim + 1, Shape::Mixed, 1}), AlgebraError);
  EXPECT_NO_THROW(validate_spec(GenSpec{1, 4, 4, Shape::FieldTower, 1}));
}

TEST(Gen, RandomBuildingBlocks) {
  Rng rng(5);
  const auto F = FiniteField::make(3, 1);
  for (int i = 0; i < 20; ++i) {
    const Algebra a = random_local_algebra(rng, F, 5);
    EXPECT_GE(a.dim(), 2u);
    EXPECT_LE(a.dim(), 5u);
    const LocalStructure ls = local_structure(a);
    EXPECT_EQ(ls.size(), 1u);
    EXPECT_EQ(ls.residue_degrees[0], 1u);
    EXPECT_TRUE(poly::is_irreducible(*F, random_irreducible(rng, *F, 3)));
  }
  const Algebra pq = random_primary_quotient(rng, F, 2, 2);
  EXPECT_EQ(pq.dim(), 4u);
  EXPECT_EQ(local_structure(pq).residue_degrees[0], 2u);
}

class GenShapes : public ::testing::TestWithParam<Shape> {};

TEST_P(GenShapes, InstancesMatchTheirShape) {
  for (unsigned q : {2u, 3u}) {
    GenStats stats;
    const auto exts = random_extensions(GenSpec{17, q, 5, GetParam(), 15}, &stats);
    ASSERT_EQ(exts.size(), 15u);
    EXPECT_EQ(stats.accepted, 15u);
    EXPECT_GE(stats.attempts, stats.accepted);
    for (const auto& e : exts) {
      EXPECT_FALSE(e.trivial());
      EXPECT_LE(e.algebra.dim(), 5u);
      EXPECT_EQ(e.algebra.field().order(), q);
      switch (GetParam()) {
        case Shape::LocalSubintegral: {
          EXPECT_TRUE(is_subintegral(e));
          EXPECT_EQ(local_structure(e.algebra).size(), 1u);
          const LocalStructure lr = local_structure(e.algebra, e.r());
          EXPECT_NE(lr.maximal_ideals[0], conductor(e.algebra, e.r(), e.algebra.full()));
          break;
        }
        case Shape::ProductOfLocals: EXPECT_GE(local_structure(e.algebra).size(), 2u); break;
        case Shape::FieldTower:
          EXPECT_EQ(nilradical(e.algebra).dim(), 0u);
          EXPECT_EQ(local_structure(e.algebra).size(), 1u);
          EXPECT_EQ(e.base.dim(), 1u);
          break;
        case Shape::Mixed: break;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllShapes, GenShapes,
                         ::testing::Values(Shape::LocalSubintegral, Shape::ProductOfLocals, Shape::FieldTower,
                                           Shape::Mixed));

TEST(Gen, SeedReproducibility) {
  const auto a = random_extensions(GenSpec{99, 2, 5, Shape::Mixed, 10});
  const auto b = random_extensions(GenSpec{99, 2, 5, Shape::Mixed, 10});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].algebra, b[i].algebra);
    EXPECT_EQ(a[i].r(), b[i].r());
  }
}
