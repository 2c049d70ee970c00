#include <gtest/gtest.h>

#include <random>

#include "toruschar/knotpoly.hpp"

using namespace toruschar;

namespace {

std::vector<KnotParams> grid(long max) {
  std::vector<KnotParams> out;
  for (long m = 2; m <= max; ++m)
    for (long n = m + 1; n <= max; ++n)
      if (std::gcd(m, n) == 1) out.push_back(KnotParams::make(m, n));
  return out;
}

}  // namespace

TEST(Alexander, Values) {
  EXPECT_EQ(alexander(KnotParams::make(2, 3)).str(), "t^2-t+1");
  EXPECT_EQ(alexander(KnotParams::make(2, 5)).str(), "t^4-t^3+t^2-t+1");
  EXPECT_EQ(alexander(KnotParams::make(3, 4)).str(), "t^6-t^5+t^3-t+1");
}

TEST(Alexander, Properties) {
  for (const auto& p : grid(12)) {
    const auto a = alexander(p);
    EXPECT_EQ(a.degree(), (p.m() - 1) * (p.n() - 1));
    EXPECT_EQ(a.eval(1), 1);
    EXPECT_TRUE(is_palindromic(a));
    // Delta (t^m - 1)(t^n - 1) = (t^{mn} - 1)(t - 1)
    const IntPoly one = IntPoly::constant(1);
    const auto m = static_cast<std::size_t>(p.m()), n = static_cast<std::size_t>(p.n());
    EXPECT_EQ(a * (IntPoly::monomial(m) - one) * (IntPoly::monomial(n) - one),
              (IntPoly::monomial(m * n) - one) * (IntPoly::var() - one));
  }
}

TEST(TwistedAlexander, PerLabelTotals) {
  for (const auto& p : grid(8)) {
    const long m = p.m(), n = p.n();
    for (const auto& l : enumerate_F(2, p).labels) {
      const auto rc = twisted_root_count(l, p);
      EXPECT_EQ(rc.total(), 3 * (2 * m * n - 2 * m - 2 * n));
      for (const auto& [z, mult] : rc.roots) EXPECT_TRUE(mult == 1 || mult == 2);
      // Swapping eps <-> 1/eps (and eps' <-> 1/eps') leaves the count unchanged.
      EigenLabel inv(l.order, {l.order - l.a_exps[0], l.order - l.a_exps[1]},
                     {l.order - l.b_exps[0], l.order - l.b_exps[1]});
      EXPECT_EQ(twisted_root_count(inv, p).total(), rc.total());
    }
  }
}

TEST(TwistedAlexander, TrefoilLabel) {
  const auto p = KnotParams::make(2, 3);
  const auto labels = enumerate_F(2, p).labels;
  ASSERT_EQ(labels.size(), 1u);
  const auto rc = twisted_root_count(*labels.begin(), p);
  EXPECT_EQ(rc.total(), 6);
}

TEST(TwistedAlexander, RejectsInvalidLabels) {
  const auto p = KnotParams::make(2, 3);
  EXPECT_THROW(twisted_root_count(EigenLabel(12, {0, 0}, {0, 0}), p), InvalidLabel);
  const auto tau = *enumerate_F(3, KnotParams::make(3, 4)).labels.begin();
  EXPECT_THROW(twisted_root_count(tau, KnotParams::make(3, 4)), InvalidLabel);
}

TEST(LineCount, Fixtures) {
  const auto a = line_count_identity(KnotParams::make(2, 3));
  EXPECT_EQ(a.closed_form, 3);
  EXPECT_TRUE(a.agree());
  const auto b = line_count_identity(KnotParams::make(3, 4));
  EXPECT_EQ(b.closed_form, 45);
  EXPECT_TRUE(b.agree());
  const auto c = line_count_identity(KnotParams::make(3, 5));
  EXPECT_EQ(c.closed_form, 84);
  EXPECT_TRUE(c.agree());
}

TEST(LineCount, Grid) {
  for (const auto& p : grid(8)) EXPECT_TRUE(line_count_identity(p).agree());
}

TEST(BoundaryCurve, TrefoilK1) {
  const auto c = boundary_curve(KnotParams::make(2, 3), 1);
  EXPECT_NEAR(c.c, 1.0, 1e-12);
  EXPECT_NEAR(c.c_cubes, -3.0, 1e-12);
  EXPECT_NEAR(c.c_xy, 10.0, 1e-12);
  EXPECT_NEAR(c.c_const, -8.0, 1e-12);
}

TEST(BoundaryCurve, Grouping) {
  const auto p = KnotParams::make(3, 5);
  EXPECT_EQ(boundary_curve(p, 1).component_key, boundary_curve(p, 14).component_key);
  EXPECT_NE(boundary_curve(p, 1).component_key, boundary_curve(p, 2).component_key);
  EXPECT_THROW(boundary_curve(p, 3), InvalidK);
  EXPECT_THROW(boundary_curve(p, 10), InvalidK);
  EXPECT_THROW(boundary_curve(p, 0), InvalidK);
  // Keys agree exactly when k' = +-k mod m and mod n.
  for (long k = 1; k < 15; ++k)
    for (long kp = 1; kp < 15; ++kp) {
      if (k % 3 == 0 || k % 5 == 0 || kp % 3 == 0 || kp % 5 == 0) continue;
      const bool same = ((kp - k) % 3 == 0 || (kp + k) % 3 == 0) &&
                        ((kp - k) % 5 == 0 || (kp + k) % 5 == 0);
      EXPECT_EQ(same, boundary_curve(p, k).component_key == boundary_curve(p, kp).component_key);
    }
}

TEST(BoundaryCurve, TypeTwoFlag) {
  const auto p = KnotParams::make(4, 5);
  long type2 = 0;
  for (const auto& c : boundary_curves(p)) type2 += c.type2;
  // k = 2 mod 4, k not divisible by 5, 0 < k < 20.
  EXPECT_EQ(type2, 4);
  for (const auto& c : boundary_curves(KnotParams::make(3, 5))) EXPECT_FALSE(c.type2);
}

TEST(BoundaryCurve, ParametrizationLiesOnCurve) {
  const auto [x, y] = parametrize_curve({0, 1}, 1);
  EXPECT_NEAR(std::abs(x - cplx(1)), 0, 1e-15);
  EXPECT_NEAR(std::abs(y - cplx(1)), 0, 1e-15);
  EXPECT_NEAR(curve_residual(cplx(-2), x, y).abs, 0, 1e-12);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rad(0.3, 3), ang(0, 6.283185307179586);
  for (int i = 0; i < 1000; ++i) {
    const cplx d = std::polar(rad(rng), ang(rng)), t = std::polar(rad(rng), ang(rng));
    const auto [px, py] = parametrize_curve(d, t);
    EXPECT_LT(curve_residual(d * d + 1.0 / (d * d), px, py).relative(), 1e-9);
  }
  EXPECT_THROW(parametrize_curve(0, 1), InternalError);
}

TEST(BoundaryCurve, CubeRootOfUnitySymmetry) {
  // t -> omega t keeps the point on the same curve.
  const cplx omega = std::polar(1.0, 2.0943951023931953);
  const cplx d = std::polar(1.0, 0.4), t(0.7, 1.3);
  const cplx c = d * d + 1.0 / (d * d);
  const auto [x, y] = parametrize_curve(d, omega * t);
  EXPECT_LT(curve_residual(c, x, y).relative(), 1e-9);
}
