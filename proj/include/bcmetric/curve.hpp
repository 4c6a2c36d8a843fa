#pragma once

#include <string>
#include <variant>
#include <vector>

namespace bcmetric {

struct ConstantCurve {
  double level = 0.0;
};

/// t -> amplitude * sin(frequency * t + phase) + offset
struct SinusoidCurve {
  double amplitude = 1.0;
  double frequency = 1.0;
  double phase = 0.0;
  double offset = 0.0;
};

/// Polynomial sum_k coefficients[k] t^k, evaluated at t clamped to [lo, hi].
/// Outside the clip range the curve is flat, so the slope bound over the
/// range holds on all of R.
struct PolynomialCurve {
  std::vector<double> coefficients;
  double lo = 0.0;
  double hi = 0.0;
};

/// Graph of a Lipschitz function R -> R used as a transversal (or a strip
/// boundary). The Lipschitz constant is computed once at construction.
class Curve {
 public:
  using Spec = std::variant<ConstantCurve, SinusoidCurve, PolynomialCurve>;

  explicit Curve(Spec spec);

  [[nodiscard]] double value(double t) const;
  /// Analytic derivative. For polynomials, zero outside the clip range.
  [[nodiscard]] double slope(double t) const;
  /// Exact bound on |slope| over R.
  [[nodiscard]] double lipschitz() const noexcept { return lipschitz_; }

  /// Abscissae where the slope may be discontinuous (polynomial clip ends).
  [[nodiscard]] std::vector<double> kinks() const;
  /// Scale on which the curve can change direction; used for grid spacing.
  [[nodiscard]] double feature_scale() const;

  [[nodiscard]] const Spec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::string kind_name() const;
  [[nodiscard]] bool is_constant() const noexcept {
    return std::holds_alternative<ConstantCurve>(spec_);
  }

 private:
  Spec spec_;
  double lipschitz_ = 0.0;
};

/// Max |p'| over [lo, hi] for the polynomial with the given coefficients, found
/// by locating the roots of p'' with a sign-change scan plus bisection.
double polynomial_slope_bound(const std::vector<double>& coefficients, double lo, double hi);

}  // namespace bcmetric
