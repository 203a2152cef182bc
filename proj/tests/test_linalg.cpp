#include <gtest/gtest.h>

#include <random>

#include "ringlat/linalg.hpp"

using namespace ringlat;

namespace {

Vec random_vec(std::mt19937_64& rng, unsigned q, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = static_cast<Scalar>(rng() % q);
  return v;
}

}  // namespace

TEST(Subspace, EchelonFormIsCanonical) {
  const auto F = FiniteField::make(3, 1);
  const std::vector<Vec> a{{1, 2, 0}, {0, 1, 1}};
  const std::vector<Vec> b{{1, 0, 1}, {2, 0, 2}, {1, 2, 0}};
  const Subspace sa = Subspace::span(F, 3, a), sb = Subspace::span(F, 3, b);
  EXPECT_EQ(sa.dim(), 2u);
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(sa.hash(), sb.hash());
  for (std::size_t i = 0; i < sa.dim(); ++i) EXPECT_EQ(sa.basis()[i][sa.pivots()[i]], 1);
}

TEST(Subspace, ReduceContainsCoordinates) {
  const auto F = FiniteField::make(5, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_vec(rng, 5, 5));
    const Subspace s = Subspace::span(F, 5, gens);
    for (const auto& g : gens) {
      EXPECT_TRUE(s.contains(g));
      EXPECT_TRUE(vec::is_zero(s.reduce(g)));
      EXPECT_EQ(s.combine(s.coordinates(g)), g);
    }
    const Vec x = random_vec(rng, 5, 5);
    const Vec r = s.reduce(x);
    EXPECT_TRUE(s.contains(vec::sub(*F, x, r)));
    for (auto p : s.pivots()) EXPECT_EQ(r[p], 0);
  }
}

TEST(Subspace, SumIntersectionDimensionFormula) {
  const auto F = FiniteField::make(2, 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec> ga, gb;
    for (int i = 0; i < 3; ++i) ga.push_back(random_vec(rng, 2, 6));
    for (int i = 0; i < 4; ++i) gb.push_back(random_vec(rng, 2, 6));
    const Subspace a = Subspace::span(F, 6, ga), b = Subspace::span(F, 6, gb);
    const Subspace s = a.sum(b), i = a.intersect(b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a) && s.contains(b));
    EXPECT_TRUE(a.contains(i) && b.contains(i));
  }
}

TEST(Subspace, FreeColumnsComplementPivots) {
  const auto F = FiniteField::make(2, 1);
  const std::vector<Vec> g{{0, 1, 1, 0}};
  const Subspace s = Subspace::span(F, 4, g);
  EXPECT_EQ(s.free_columns(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(Subspace::full(F, 4).free_columns().size(), 0u);
  EXPECT_EQ(Subspace(F, 4).dim(), 0u);
}

TEST(Subspace, OrderByDimensionThenBasis) {
  const auto F = FiniteField::make(2, 1);
  const std::vector<Vec> one{{1, 0, 0}};
  const std::vector<Vec> two{{0, 1, 0}, {0, 0, 1}};
  EXPECT_LT(Subspace::span(F, 3, one), Subspace::span(F, 3, two));
  EXPECT_LT(Subspace(F, 3), Subspace::span(F, 3, one));
}

TEST(Nullspace, RelationsAmongImages) {
  const auto F = FiniteField::make(3, 1);
  const std::vector<Vec> images{{1, 0}, {0, 1}, {1, 1}};
  const Subspace ns = nullspace(F, images, 2);
  ASSERT_EQ(ns.dim(), 1u);
  const Vec& c = ns.basis()[0];
  for (std::size_t k = 0; k < 2; ++k) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < 3; ++j) acc = F->add(acc, F->mul(c[j], images[j][k]));
    EXPECT_EQ(acc, 0);
  }
}
