#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bcmetric/errors.hpp"
#include "bcmetric/numerics.hpp"
#include "oracles.hpp"

using namespace bcmetric::numerics;

TEST(AdaptiveSimpson, Polynomials) {
  EXPECT_NEAR(adaptive_simpson([](double t) { return t * t; }, 0.0, 3.0), 9.0, 1e-12);
  EXPECT_NEAR(adaptive_simpson([](double t) { return t * t * t * t; }, -1.0, 2.0), 33.0 / 5.0,
              1e-9);
  EXPECT_EQ(adaptive_simpson([](double) { return 1.0; }, 2.0, 2.0), 0.0);
}

TEST(AdaptiveSimpson, ReversedLimitsNegate) {
  const auto f = [](double t) { return std::exp(t); };
  EXPECT_NEAR(adaptive_simpson(f, 1.0, 0.0), -(std::exp(1.0) - 1.0), 1e-10);
}

TEST(AdaptiveSimpson, SineArcLengthAgainstComposite) {
  const auto f = [](double t) { return std::sqrt(1.0 + std::cos(t) * std::cos(t)); };
  const double ref = oracle::composite_simpson(f, 0.0, 2.0 * std::numbers::pi, 200000);
  EXPECT_NEAR(adaptive_simpson(f, 0.0, 2.0 * std::numbers::pi), ref, 1e-9 * ref);
}

TEST(AdaptiveSimpson, DepthCapIsAnError) {
  const auto spiky = [](double t) { return 1.0 / std::sqrt(std::abs(t - 0.3)); };
  EXPECT_THROW(adaptive_simpson(spiky, 0.0, 1.0, QuadratureOptions{1e-14, 6}),
               bcmetric::NumericalError);
}

TEST(GoldenSection, UnimodalMinimum) {
  const Minimum m = golden_section([](double t) { return (t - 1.234) * (t - 1.234) + 2.0; }, 0.0,
                                   5.0);
  EXPECT_NEAR(m.t, 1.234, 1e-7);
  EXPECT_NEAR(m.value, 2.0, 1e-12);
}

TEST(GoldenSection, EndpointMinimum) {
  const Minimum m = golden_section([](double t) { return t; }, 2.0, 3.0);
  EXPECT_EQ(m.t, 2.0);
}

TEST(GridMinimize, FindsGlobalAmongSeveralLocalMinima) {
  // Local minima near every 2 pi k; the parabola makes the one at 2 pi global.
  const auto f = [](double t) {
    return -std::cos(t) + 0.001 * (t - 2.0 * std::numbers::pi) * (t - 2.0 * std::numbers::pi);
  };
  const Minimum m = grid_minimize(f, -20.0, 20.0, 0.1, 1e-12);
  EXPECT_NEAR(m.t, 2.0 * std::numbers::pi, 1e-4);
}

TEST(GridMinimize, NeverWorseThanDenseScan) {
  for (double w : {1.0, 2.0, 5.0}) {
    const auto f = [w](double t) { return std::sin(w * t) + 0.05 * t; };
    const Minimum m = grid_minimize(f, -7.0, 7.0, 1.0 / (4.0 * w), 1e-12);
    double scan = f(-7.0);
    for (double t = -7.0; t <= 7.0; t += 1e-4) scan = std::min(scan, f(t));
    EXPECT_LE(m.value, scan + 1e-12) << "w = " << w;
  }
}
