#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bcmetric/ball.hpp"
#include "bcmetric/collapse.hpp"
#include "bcmetric/errors.hpp"
#include "bcmetric/scene.hpp"

using namespace bcmetric;

namespace {

const Box kBox({-30.0, -30.0}, {30.0, 30.0});

// Max |p(s) - p(t)| / |s - t| over a fine grid: a lower estimate of the true bound.
double grid_slope(const Curve& c, double lo, double hi) {
  double best = 0.0;
  const int n = 20000;
  const double h = (hi - lo) / n;
  for (int i = 0; i < n; ++i) {
    const double s = lo + i * h;
    best = std::max(best, std::abs(c.value(s + h) - c.value(s)) / h);
  }
  return best;
}

}  // namespace

TEST(Curve, SinusoidValuesAndBound) {
  const Curve c(SinusoidCurve{2.0, 3.0, 0.5, -1.0});
  EXPECT_DOUBLE_EQ(c.value(0.7), 2.0 * std::sin(3.0 * 0.7 + 0.5) - 1.0);
  EXPECT_DOUBLE_EQ(c.slope(0.7), 6.0 * std::cos(3.0 * 0.7 + 0.5));
  EXPECT_DOUBLE_EQ(c.lipschitz(), 6.0);
  EXPECT_DOUBLE_EQ(c.feature_scale(), 1.0 / 12.0);
}

TEST(Curve, ConstantIsFlat) {
  const Curve c(ConstantCurve{2.5});
  EXPECT_EQ(c.value(-100.0), 2.5);
  EXPECT_EQ(c.slope(3.0), 0.0);
  EXPECT_EQ(c.lipschitz(), 0.0);
  EXPECT_TRUE(c.is_constant());
}

TEST(Curve, PolynomialClippedToRange) {
  const Curve c(PolynomialCurve{{0.0, 0.0, 1.0}, -2.0, 3.0});  // t^2 on [-2, 3]
  EXPECT_DOUBLE_EQ(c.value(1.5), 2.25);
  EXPECT_DOUBLE_EQ(c.value(10.0), 9.0);
  EXPECT_DOUBLE_EQ(c.value(-10.0), 4.0);
  EXPECT_EQ(c.slope(5.0), 0.0);
  EXPECT_NEAR(c.lipschitz(), 6.0, 1e-12);
  const auto k = c.kinks();
  ASSERT_EQ(k.size(), 2u);
}

TEST(Curve, PolynomialInteriorExtremeOfSlope) {
  // p' = 3t^2 - 12t + 1 on [0, 4]: 1 at both ends, -11 at the interior vertex t = 2.
  const double bound = polynomial_slope_bound({0.0, 1.0, -6.0, 1.0}, 0.0, 4.0);
  EXPECT_NEAR(bound, 11.0, 1e-9);
}

TEST(Curve, LipschitzBoundHoldsOnSamples) {
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> cs(5);
    for (double& v : cs) v = coef(gen);
    const Curve poly(PolynomialCurve{cs, -3.0, 3.0});
    EXPECT_LE(grid_slope(poly, -4.0, 4.0), poly.lipschitz() + 1e-9) << "trial " << trial;
    EXPECT_GE(poly.lipschitz(), 0.0);
    const Curve sine(SinusoidCurve{coef(gen), coef(gen), coef(gen), coef(gen)});
    EXPECT_LE(grid_slope(sine, -10.0, 10.0), sine.lipschitz() + 1e-9);
  }
}

TEST(Box, Validation) {
  EXPECT_THROW(Box({0.0}, {0.0}), ArgumentError);
  EXPECT_THROW(Box({0.0, 0.0}, {1.0}), ArgumentError);
  EXPECT_TRUE(kBox.contains(Point{30.0, -30.0}));
  EXPECT_FALSE(kBox.contains(Point{30.1, 0.0}));
}

TEST(StripScene, MembershipAndFiberLength) {
  const StripScene sine(Curve(SinusoidCurve{}), 1.0, 1.0, kBox);
  EXPECT_TRUE(sine.contains(Point{std::numbers::pi / 2, 1.9}));
  EXPECT_FALSE(sine.contains(Point{0.0, 1.5}));
  EXPECT_DOUBLE_EQ(max_fiber_length(sine), 2.0);
  const StripScene uneven(Curve(ConstantCurve{}), 0.5, 1.5, kBox);
  EXPECT_DOUBLE_EQ(max_fiber_length(uneven), 2.0);
  EXPECT_THROW(StripScene(Curve(ConstantCurve{}), -1.0, 1.0, kBox), ArgumentError);
  EXPECT_THROW(StripScene(Curve(ConstantCurve{}), 0.0, 0.0, kBox), ArgumentError);
  EXPECT_THROW(StripScene(Curve(ConstantCurve{}), 1.0, 1.0, Box({0.0}, {1.0})), ArgumentError);
}

TEST(StripScene, TransversalMeetsEachFiberOnce) {
  const StripScene sine(Curve(SinusoidCurve{1.0, 2.0, 0.3, 0.0}), 0.7, 1.3, kBox);
  for (double t = -30.0; t <= 30.0; t += 0.37) {
    const Point on_t{t, sine.center().value(t)};
    EXPECT_TRUE(sine.contains(on_t));
    EXPECT_TRUE(sine.on_transversal(on_t, 1e-12));
    EXPECT_FALSE(sine.on_transversal(Point{t, sine.center().value(t) + 0.1}, 1e-12));
  }
}

TEST(BallScene, FiberLength) {
  const BallScene ball(Point{0.0, 0.0}, 1.0, kBox);
  EXPECT_DOUBLE_EQ(max_fiber_length(ball), 2.0);
  EXPECT_THROW(BallScene(Point{0.0, 0.0}, 0.0, kBox), ArgumentError);
}

TEST(CollapsedSpace, DerivedConstants) {
  const CollapsedSpace sine(StripScene(Curve(SinusoidCurve{}), 1.0, 1.0, kBox));
  EXPECT_DOUBLE_EQ(sine.k_l(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(sine.f_max(), 2.0);
  const CollapsedSpace flat(StripScene(Curve(ConstantCurve{}), 1.0, 1.0, kBox));
  EXPECT_DOUBLE_EQ(flat.k_l(), 1.0);
  const CollapsedSpace cos2(
      StripScene(Curve(SinusoidCurve{1.0, 2.0, std::numbers::pi / 2, 0.0}), 1.0, 1.0, kBox));
  EXPECT_DOUBLE_EQ(cos2.k_l(), std::sqrt(5.0));
  EXPECT_LE(cos2.k_l(), std::sqrt(17.0));
}
