#pragma once

#include <functional>

namespace bcmetric::numerics {

using ScalarFn = std::function<double(double)>;

struct QuadratureOptions {
  double rel_tol = 1e-10;
  int max_depth = 48;
};

/// Adaptive Simpson integral of fn over [a, b] (a <= b not required).
/// Throws NumericalError when a subinterval hits max_depth before converging
/// or the integrand is not finite.
double adaptive_simpson(const ScalarFn& fn, double a, double b,
                        const QuadratureOptions& opts = {});

struct Minimum {
  double t;
  double value;
};

/// Golden-section search for a minimum of fn inside [lo, hi], refined until the
/// bracket is narrower than width_tol.
Minimum golden_section(const ScalarFn& fn, double lo, double hi, double width_tol = 1e-12);

/// Global minimum of fn over [lo, hi]: evaluates a uniform grid no coarser than
/// `spacing`, brackets every local grid minimum and refines each by golden section.
/// Ties resolve toward the smaller t.
Minimum grid_minimize(const ScalarFn& fn, double lo, double hi, double spacing,
                      double width_tol = 1e-12);

}  // namespace bcmetric::numerics
