#include "bcmetric/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <unordered_map>

#include "bcmetric/errors.hpp"
#include "bcmetric/numerics.hpp"

namespace bcmetric {

namespace {

constexpr double kBoxTol = 1e-9;

void require_in_box(const CollapsedSpace& space, const Point& x) {
  if (x.dim() != 2) {
    throw ArgumentError("strip scenes take 2-D points, got dimension " + std::to_string(x.dim()));
  }
  if (!space.scene().domain().contains(x, kBoxTol)) {
    throw DomainError("point " + to_string(x) + " lies outside the scene domain box");
  }
}

double arc_length(const Curve& curve, double a, double b) {
  if (a > b) std::swap(a, b);
  if (a == b) return 0.0;
  if (curve.is_constant()) return b - a;

  // Panel breaks: every kink inside (a, b) plus a uniform subdivision no wider
  // than the curve's feature scale, so that no oscillation fits inside one
  // initial Simpson stencil.
  std::vector<double> breaks{a};
  for (double k : curve.kinks()) {
    if (k > a && k < b) breaks.push_back(k);
  }
  breaks.push_back(b);

  const double max_panel = std::min(0.5, 2.0 * curve.feature_scale());
  const auto integrand = [&curve](double t) { return std::hypot(1.0, curve.slope(t)); };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = breaks[i + 1];
    const auto panels = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / max_panel)));
    const double h = (hi - lo) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double pa = lo + h * static_cast<double>(p);
      const double pb = p + 1 == panels ? hi : lo + h * static_cast<double>(p + 1);
      total += numerics::adaptive_simpson(integrand, pa, pb);
    }
  }
  return total;
}

}  // namespace

Point fiber_project(const StripScene& scene, const Point& x, double tol) {
  if (!scene.contains(x, tol)) {
    throw DomainError("point " + to_string(x) + " is not in the collapsing set");
  }
  return Point{x[0], scene.center().value(x[0])};
}

Nearest nearest_distance_to_set(const CollapsedSpace& space, const Point& x) {
  require_in_box(space, x);
  const StripScene& scene = space.scene();
  if (scene.contains(x)) return {0.0, x};

  const double t0 = x[0];
  const bool above = x[1] > scene.upper(t0);
  const auto boundary = [&scene, above](double t) {
    return above ? scene.upper(t) : scene.lower(t);
  };
  const double r0 = std::abs(x[1] - boundary(t0));
  if (scene.center().is_constant()) return {r0, Point{t0, boundary(t0)}};

  // Any boundary point closer than the vertical drop has |t - t0| < r0.
  const auto squared = [&](double t) {
    const double dt = t - t0;
    const double dy = boundary(t) - x[1];
    return dt * dt + dy * dy;
  };
  const double spacing = std::min(0.1, scene.center().feature_scale());
  const numerics::Minimum m = numerics::grid_minimize(squared, t0 - r0, t0 + r0, spacing, 1e-12);
  const double r = std::sqrt(m.value);
  if (!std::isfinite(r) || r > r0 * (1.0 + 1e-12) + 1e-15) {
    throw NumericalError("nearest-point search failed at " + to_string(x) + ": r = " +
                         format_real(r) + ", vertical bound = " + format_real(r0));
  }
  return {r, Point{m.t, boundary(m.t)}};
}

LocatedPoint locate(const CollapsedSpace& space, const Point& x) {
  Nearest n = nearest_distance_to_set(space, x);
  Point rep = fiber_project(space.scene(), n.x_s, kMembershipTol);
  return {x, n.r, std::move(n.x_s), std::move(rep)};
}

Point collapse_representative(const CollapsedSpace& space, const Point& x) {
  return locate(space, x).representative;
}

double path_metric(const CollapsedSpace& space, const Point& x_prime, const Point& y_prime) {
  const StripScene& scene = space.scene();
  for (const Point* p : {&x_prime, &y_prime}) {
    if (p->dim() != 2 || !scene.on_transversal(*p, kMembershipTol)) {
      throw DomainError("point " + to_string(*p) + " is not on the transversal");
    }
  }
  return arc_length(scene.center(), x_prime[0], y_prime[0]);
}

bool in_vicinity(const CollapsedSpace& space, const Point& x, const Point& y) {
  const double r_x = nearest_distance_to_set(space, x).r;
  const double r_y = nearest_distance_to_set(space, y).r;
  return euclidean(x, y) > r_x + r_y;
}

CollapsedDistanceBreakdown collapsed_distance(const CollapsedSpace& space, const LocatedPoint& x,
                                              const LocatedPoint& y) {
  CollapsedDistanceBreakdown out{
      .rho = euclidean(x.point, y.point),
      .in_vicinity = false,
      .r_x = x.r,
      .r_y = y.r,
      .x_prime = x.representative,
      .y_prime = y.representative,
      .rho_p = std::nullopt,
      .rho_phi = 0.0,
  };
  // r_x + r_y is commutative, which keeps both branches exactly symmetric.
  const double radii = x.r + y.r;
  out.in_vicinity = out.rho > radii;
  if (out.in_vicinity) {
    out.rho_p = path_metric(space, x.representative, y.representative);
    out.rho_phi = *out.rho_p + radii;
  } else {
    out.rho_phi = out.rho;
  }
  return out;
}

CollapsedDistanceBreakdown collapsed_distance(const CollapsedSpace& space, const Point& x,
                                              const Point& y) {
  return collapsed_distance(space, locate(space, x), locate(space, y));
}

DistanceFunction collapsed_metric(const CollapsedSpace& space) {
  auto shared = std::make_shared<const CollapsedSpace>(space);
  return [shared](const Point& x, const Point& y) {
    return collapsed_distance(*shared, x, y).rho_phi;
  };
}

namespace {

// Points are resolved by coordinates, so the cache can stand behind a plain
// DistanceFunction.
class LocatedPool {
 public:
  explicit LocatedPool(CollapsedSpace space) : space_(std::move(space)) {}

  std::size_t add(const Point& p) {
    auto key = std::vector<double>(p.coords().begin(), p.coords().end());
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    located_.push_back(locate(space_, p));
    index_.emplace(std::move(key), located_.size() - 1);
    return located_.size() - 1;
  }

  double rho_phi(std::size_t i, std::size_t j) {
    if (i == j) return collapsed_distance(space_, located_[i], located_[j]).rho_phi;
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(i, j)) << 32) | std::max(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const double v = collapsed_distance(space_, located_[i], located_[j]).rho_phi;
    memo_.emplace(key, v);
    return v;
  }

 private:
  CollapsedSpace space_;
  std::vector<LocatedPoint> located_;
  std::map<std::vector<double>, std::size_t> index_;
  std::unordered_map<std::uint64_t, double> memo_;
};

}  // namespace

DistanceFunction cached_collapsed_metric(const CollapsedSpace& space) {
  auto pool = std::make_shared<LocatedPool>(space);
  return [pool](const Point& x, const Point& y) {
    const std::size_t i = pool->add(x);
    const std::size_t j = pool->add(y);
    return pool->rho_phi(i, j);
  };
}

LipschitzEstimate lipschitz_estimates(const CollapsedSpace& space,
                                      std::span<const double> abscissae) {
  std::vector<double> ts(abscissae.begin(), abscissae.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.size() < 2) {
    throw ArgumentError("lipschitz_estimates needs at least two distinct abscissae");
  }

  const Curve& curve = space.scene().center();
  std::vector<double> ys(ts.size());
  std::vector<double> cumulative(ts.size(), 0.0);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ys[i] = curve.value(ts[i]);
    if (i > 0) cumulative[i] = cumulative[i - 1] + arc_length(curve, ts[i - 1], ts[i]);
  }

  LipschitzEstimate est{0.0, 1.0};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const double dt = ts[j] - ts[i];
      const double dy = ys[j] - ys[i];
      est.l_emp = std::max(est.l_emp, std::abs(dy) / dt);
      est.k_l_emp = std::max(est.k_l_emp, (cumulative[j] - cumulative[i]) / std::hypot(dt, dy));
    }
  }
  return est;
}

}  // namespace bcmetric
