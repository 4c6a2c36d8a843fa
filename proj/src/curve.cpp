#include "bcmetric/curve.hpp"

#include <algorithm>
#include <cmath>

#include "bcmetric/errors.hpp"
#include "bcmetric/point.hpp"

namespace bcmetric {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double horner(const std::vector<double>& coeffs, double t) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<double> derivative(const std::vector<double>& coeffs) {
  std::vector<double> out;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    out.push_back(static_cast<double>(k) * coeffs[k]);
  }
  return out;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ArgumentError(std::string(what) + " must be finite");
}

}  // namespace

double polynomial_slope_bound(const std::vector<double>& coefficients, double lo, double hi) {
  const auto d1 = derivative(coefficients);
  const auto d2 = derivative(d1);
  if (d1.empty()) return 0.0;

  double best = std::max(std::abs(horner(d1, lo)), std::abs(horner(d1, hi)));
  if (d2.empty() || hi <= lo) return best;

  constexpr int kScan = 4096;
  const double h = (hi - lo) / kScan;
  double prev_t = lo;
  double prev_v = horner(d2, lo);
  for (int i = 1; i <= kScan; ++i) {
    const double t = i == kScan ? hi : lo + h * i;
    const double v = horner(d2, t);
    best = std::max(best, std::abs(horner(d1, t)));
    if (v == 0.0) {
      best = std::max(best, std::abs(horner(d1, t)));
    } else if ((prev_v < 0.0) != (v < 0.0) && prev_v != 0.0) {
      double a = prev_t;
      double b = t;
      double fa = prev_v;
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = horner(d2, m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      best = std::max(best, std::abs(horner(d1, 0.5 * (a + b))));
    }
    prev_t = t;
    prev_v = v;
  }
  return best;
}

Curve::Curve(Spec spec) : spec_(std::move(spec)) {
  std::visit(Overloaded{
                 [&](const ConstantCurve& c) {
                   require_finite(c.level, "curve level");
                   lipschitz_ = 0.0;
                 },
                 [&](const SinusoidCurve& s) {
                   require_finite(s.amplitude, "curve amplitude");
                   require_finite(s.frequency, "curve frequency");
                   require_finite(s.phase, "curve phase");
                   require_finite(s.offset, "curve offset");
                   lipschitz_ = std::abs(s.amplitude * s.frequency);
                 },
                 [&](const PolynomialCurve& p) {
                   if (p.coefficients.empty()) {
                     throw ArgumentError("polynomial curve needs at least one coefficient");
                   }
                   for (double c : p.coefficients) require_finite(c, "polynomial coefficient");
                   require_finite(p.lo, "polynomial clip bound");
                   require_finite(p.hi, "polynomial clip bound");
                   if (!(p.lo < p.hi)) {
                     throw ArgumentError("polynomial clip range must satisfy lo < hi");
                   }
                   lipschitz_ = polynomial_slope_bound(p.coefficients, p.lo, p.hi);
                 },
             },
             spec_);
}

double Curve::value(double t) const {
  return std::visit(
      Overloaded{
          [](const ConstantCurve& c) { return c.level; },
          [t](const SinusoidCurve& s) {
            return s.amplitude * std::sin(s.frequency * t + s.phase) + s.offset;
          },
          [t](const PolynomialCurve& p) { return horner(p.coefficients, std::clamp(t, p.lo, p.hi)); },
      },
      spec_);
}

double Curve::slope(double t) const {
  return std::visit(
      Overloaded{
          [](const ConstantCurve&) { return 0.0; },
          [t](const SinusoidCurve& s) {
            return s.amplitude * s.frequency * std::cos(s.frequency * t + s.phase);
          },
          [t](const PolynomialCurve& p) {
            if (t < p.lo || t > p.hi) return 0.0;
            return horner(derivative(p.coefficients), t);
          },
      },
      spec_);
}

std::vector<double> Curve::kinks() const {
  if (const auto* p = std::get_if<PolynomialCurve>(&spec_)) return {p->lo, p->hi};
  return {};
}

double Curve::feature_scale() const {
  return std::visit(Overloaded{
                        [](const ConstantCurve&) { return 1.0; },
                        [](const SinusoidCurve& s) {
                          return 1.0 / (4.0 * std::max(std::abs(s.frequency), 1.0));
                        },
                        [this](const PolynomialCurve&) {
                          return 1.0 / (4.0 * std::max(lipschitz_, 1.0));
                        },
                    },
                    spec_);
}

std::string Curve::kind_name() const {
  return std::visit(Overloaded{
                        [](const ConstantCurve&) { return std::string("constant"); },
                        [](const SinusoidCurve&) { return std::string("sinusoid"); },
                        [](const PolynomialCurve&) { return std::string("polynomial"); },
                    },
                    spec_);
}

}  // namespace bcmetric
