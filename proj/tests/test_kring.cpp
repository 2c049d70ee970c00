#include <gtest/gtest.h>

#include <random>

#include "toruschar/kring.hpp"

using namespace toruschar;

namespace {

KClass random_class(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 5), coef(-9, 9);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return KClass(c);
}

}  // namespace

TEST(KRing, CanonicalFormTrimsZeros) {
  KClass a{1, 2, 0, 0};
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(a.coeffs().size(), 2u);
  EXPECT_TRUE(KClass{}.is_zero());
  EXPECT_EQ(KClass({0, 0}).degree(), -1);
  EXPECT_EQ(KClass{1} - KClass{1}, KClass{});
}

TEST(KRing, Printing) {
  EXPECT_EQ((KClass{12, -15, -3, 4, 1}).str(), "L^4+4L^3-3L^2-15L+12");
  EXPECT_EQ((KClass{-1, 0, -1}).str(), "-L^2-1");
  EXPECT_EQ(KClass{}.str(), "0");
  EXPECT_EQ(lefschetz().str(), "L");
}

TEST(KRing, ArithmeticMatchesEvaluation) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const KClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
    for (long x : {-3, -1, 0, 1, 2, 5}) {
      EXPECT_EQ(keval(kadd(a, b), x), keval(a, x) + keval(b, x));
      EXPECT_EQ(keval(ksub(a, b), x), keval(a, x) - keval(b, x));
      EXPECT_EQ(keval(kmul(a, b), x), keval(a, x) * keval(b, x));
      EXPECT_EQ(keval(kscale(a, 7), x), 7 * keval(a, x));
    }
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(KRing, LefschetzPowers) {
  const KClass L = lefschetz();
  const KClass Lm1 = L - KClass::constant(1);
  EXPECT_EQ(Lm1.pow(2), (KClass{1, -2, 1}));
  EXPECT_EQ(L.pow(3), KClass::monomial(3));
  EXPECT_EQ(kcoeff(Lm1.pow(5), 0), -1);
}

TEST(KRing, BigCoefficients) {
  const BigInt huge("123456789012345678901234567890");
  const KClass a = KClass::constant(huge) * lefschetz();
  EXPECT_EQ(kcoeff(a * a, 2), huge * huge);
  EXPECT_EQ(keval(a, 2), 2 * huge);
}

TEST(KRing, DivmodMonic) {
  const KClass num = KClass{-1, 0, 0, 1};  // L^3 - 1
  auto [q, r] = num.divmod_monic(KClass{-1, 1});
  EXPECT_EQ(q, (KClass{1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(num.divmod_monic(KClass{1, 2}), InternalError);
}

TEST(KRing, ExactDiv) {
  EXPECT_EQ(exact_div(12, 4), 3);
  EXPECT_THROW(exact_div(7, 2), InternalError);
  EXPECT_THROW(exact_div(7, 0), InternalError);
}
