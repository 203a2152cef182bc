#include <gtest/gtest.h>

#include "ringlat/errors.hpp"
#include "ringlat/field.hpp"
#include "ringlat/poly.hpp"

using namespace ringlat;

TEST(Field, F4EveryNonzeroElementInvertible) {
  const auto F = FiniteField::make(2, 2, {1, 1, 1});
  ASSERT_EQ(F->order(), 4u);
  for (Scalar a = 1; a < 4; ++a) EXPECT_EQ(F->mul(a, F->inv(a)), 1);
  EXPECT_THROW(F->inv(0), AlgebraError);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldAxioms, RingAndFieldLaws) {
  const auto [p, e] = GetParam();
  const auto F = FiniteField::make(p, e);
  const unsigned q = F->order();
  for (Scalar a = 0; a < q; ++a) {
    EXPECT_EQ(F->add(a, F->neg(a)), 0);
    EXPECT_EQ(F->mul(a, 1), a);
    if (a) {
      EXPECT_EQ(F->mul(a, F->inv(a)), 1);
    }
    EXPECT_EQ(F->pow(a, q), a);
    EXPECT_EQ(F->from_digits(F->digits(a)), a);
    for (Scalar b = 0; b < q; ++b) {
      EXPECT_EQ(F->mul(a, b), F->mul(b, a));
      EXPECT_EQ(F->sub(F->add(a, b), b), a);
      for (Scalar c = 0; c < q; c += 3) {
        EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
        EXPECT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{2u, 2u},
                                           std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{7u, 1u}));

TEST(Field, FrobeniusIsAdditive) {
  const auto F = FiniteField::make(3, 2);
  for (Scalar a = 0; a < 9; ++a) {
    for (Scalar b = 0; b < 9; ++b) EXPECT_EQ(F->pow(F->add(a, b), 3), F->add(F->pow(a, 3), F->pow(b, 3)));
  }
}

TEST(Field, PrimeSubfieldEmbedding) {
  const auto F = FiniteField::make(5, 1);
  EXPECT_EQ(F->from_int(7), 2);
  EXPECT_EQ(F->from_int(-1), 4);
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(FiniteField::make(4, 1), AlgebraError);
  EXPECT_THROW(FiniteField::make(2, 0), AlgebraError);
  EXPECT_THROW(FiniteField::make(2, 2, {1, 0, 1}), AlgebraError);
  EXPECT_THROW(FiniteField::make(2, 2, {1, 1}), AlgebraError);
  EXPECT_THROW(FiniteField::make(2, 11), AlgebraError);
  EXPECT_THROW(FiniteField::make(2, 7), AlgebraError);
  EXPECT_NO_THROW(FiniteField::make(2, 7, {1, 1, 0, 0, 0, 0, 0, 1}));
}

TEST(Field, BuiltinModuliAreIrreducible) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned e = 1; e <= 6; ++e) {
      const auto m = FiniteField::builtin_modulus(p, e);
      if (m.empty()) continue;
      const auto Fp = FiniteField::make(p, 1);
      EXPECT_TRUE(poly::is_irreducible(*Fp, Poly(m.begin(), m.end()))) << p << "^" << e;
    }
  }
}

TEST(NumberTheory, Helpers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_omega(1), 0u);
  EXPECT_EQ(prime_omega(6), 2u);
  EXPECT_EQ(prime_omega(8), 3u);
  unsigned p = 0, e = 0;
  EXPECT_TRUE(split_prime_power(243, p, e));
  EXPECT_EQ(p, 3u);
  EXPECT_EQ(e, 5u);
  EXPECT_FALSE(split_prime_power(12, p, e));
}

TEST(Poly, Arithmetic) {
  const auto F = FiniteField::make(2, 1);
  const Poly a{1, 1};        // 1 + x
  const Poly b{1, 0, 1};     // 1 + x^2 = (1 + x)^2
  EXPECT_EQ(poly::mul(*F, a, a), b);
  EXPECT_TRUE(poly::rem(*F, b, a).empty());
  EXPECT_EQ(poly::gcd(*F, b, Poly{0, 1, 1}), a);
  EXPECT_EQ(poly::degree(Poly{}), -1);
  EXPECT_EQ(poly::pow_mod(*F, Poly{0, 1}, 4, Poly{1, 1, 1}), (Poly{0, 1}));
}

TEST(Poly, IrreducibilityAgreesWithRootlessCubics) {
  const auto F = FiniteField::make(3, 1);
  for (Scalar c0 = 0; c0 < 3; ++c0) {
    for (Scalar c1 = 0; c1 < 3; ++c1) {
      for (Scalar c2 = 0; c2 < 3; ++c2) {
        const Poly f{c0, c1, c2, 1};
        bool root = false;
        for (Scalar x = 0; x < 3; ++x) {
          const Scalar val = F->add(F->add(c0, F->mul(c1, x)), F->add(F->mul(c2, F->mul(x, x)), F->pow(x, 3)));
          root = root || val == 0;
        }
        EXPECT_EQ(poly::is_irreducible(*F, f), !root);
      }
    }
  }
}
