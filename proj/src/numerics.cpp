#include "bcmetric/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bcmetric/errors.hpp"
#include "bcmetric/point.hpp"

namespace bcmetric::numerics {

namespace {

double checked(const ScalarFn& fn, double t) {
  const double v = fn(t);
  if (!std::isfinite(v)) {
    throw NumericalError("non-finite function value at t = " + format_real(t));
  }
  return v;
}

struct SimpsonPanel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double simpson_step(const ScalarFn& fn, const SimpsonPanel& p, double eps, int depth,
                    int max_depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = checked(fn, lm);
  const double frm = checked(fn, rm);
  const double left = (p.m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
  const double right = (p.b - p.m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
  const double delta = left + right - p.whole;
  if (std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  if (depth >= max_depth) {
    throw NumericalError("adaptive Simpson hit recursion cap on [" + format_real(p.a) + ", " +
                         format_real(p.b) + "]");
  }
  return simpson_step(fn, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * eps, depth + 1,
                      max_depth) +
         simpson_step(fn, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * eps, depth + 1,
                      max_depth);
}

}  // namespace

double adaptive_simpson(const ScalarFn& fn, double a, double b, const QuadratureOptions& opts) {
  if (a == b) return 0.0;
  if (b < a) return -adaptive_simpson(fn, b, a, opts);

  const double m = 0.5 * (a + b);
  const double fa = checked(fn, a);
  const double fm = checked(fn, m);
  const double fb = checked(fn, b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double scale = std::max(std::abs(whole), std::numeric_limits<double>::min());
  return simpson_step(fn, {a, m, b, fa, fm, fb, whole}, opts.rel_tol * scale, 0,
                      opts.max_depth);
}

Minimum golden_section(const ScalarFn& fn, double lo, double hi, double width_tol) {
  if (hi < lo) std::swap(lo, hi);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = checked(fn, c);
  double fd = checked(fn, d);
  // Bounded: each step shrinks the bracket by 1/phi, so 200 steps reach any
  // representable width. The extra guard stops on brackets at ulp scale.
  for (int it = 0; it < 200 && (b - a) > width_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      if (!(c > a && c < d)) break;
      fc = checked(fn, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      if (!(d > c && d < b)) break;
      fd = checked(fn, d);
    }
  }
  Minimum best = fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
  for (double t : {lo, hi}) {
    const double v = checked(fn, t);
    if (v < best.value) best = {t, v};
  }
  return best;
}

Minimum grid_minimize(const ScalarFn& fn, double lo, double hi, double spacing,
                      double width_tol) {
  if (hi < lo) std::swap(lo, hi);
  if (!(spacing > 0.0)) throw ArgumentError("grid spacing must be positive");
  if (hi == lo) return {lo, checked(fn, lo)};

  const auto cells = static_cast<std::size_t>(std::ceil((hi - lo) / spacing));
  const std::size_t n = std::max<std::size_t>(cells, 2);
  const double h = (hi - lo) / static_cast<double>(n);
  std::vector<double> ts(n + 1);
  std::vector<double> vs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = i == n ? hi : lo + h * static_cast<double>(i);
    vs[i] = checked(fn, ts[i]);
  }

  Minimum best{ts[0], vs[0]};
  for (std::size_t i = 0; i <= n; ++i) {
    const bool left_ok = i == 0 || vs[i] <= vs[i - 1];
    const bool right_ok = i == n || vs[i] < vs[i + 1];
    if (!left_ok || !right_ok) continue;
    const double a = ts[i == 0 ? 0 : i - 1];
    const double b = ts[i == n ? n : i + 1];
    const Minimum local = golden_section(fn, a, b, width_tol);
    if (local.value < best.value) best = local;
  }
  return best;
}

}  // namespace bcmetric::numerics
