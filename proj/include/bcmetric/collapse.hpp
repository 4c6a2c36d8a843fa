#pragma once

#include <optional>
#include <span>

#include "bcmetric/metric.hpp"
#include "bcmetric/point.hpp"
#include "bcmetric/scene.hpp"

namespace bcmetric {

/// Least distance from a point to the collapsing set, and a point realizing it.
struct Nearest {
  double r;
  Point x_s;
};

/// A point with its nearest-point data and T-representative resolved, so that
/// repeated collapsed-distance evaluations do not redo the minimization.
struct LocatedPoint {
  Point point;
  double r;
  Point x_s;
  Point representative;
};

struct CollapsedDistanceBreakdown {
  double rho;
  bool in_vicinity;
  double r_x;
  double r_y;
  Point x_prime;
  Point y_prime;
  std::optional<double> rho_p;  // set only in the vicinity branch
  double rho_phi;
};

/// Membership slack for "x in S" and "x on T" preconditions.
inline constexpr double kMembershipTol = 1e-9;

/// The point of T on the fiber through x: (x1, center(x1)). Throws DomainError
/// when x is farther than tol outside S.
Point fiber_project(const StripScene& scene, const Point& x, double tol = kMembershipTol);

/// r = 0 and x_s = x inside S. Otherwise the nearer boundary graph is searched by
/// a coarse grid over the curve parameter (bracketing every local minimum of the
/// squared distance) followed by golden-section refinement of each bracket.
/// Throws DomainError outside the domain box.
Nearest nearest_distance_to_set(const CollapsedSpace& space, const Point& x);

/// The T-representative of x: fiber_project(x) in S, else fiber_project(x_s).
Point collapse_representative(const CollapsedSpace& space, const Point& x);

LocatedPoint locate(const CollapsedSpace& space, const Point& x);

/// Arc length of the center curve between the abscissae of two points of T,
/// by panel-wise adaptive Simpson at relative tolerance 1e-10. Throws DomainError
/// for points off T.
double path_metric(const CollapsedSpace& space, const Point& x_prime, const Point& y_prime);

/// rho(x, y) > r_x + r_y, strictly.
bool in_vicinity(const CollapsedSpace& space, const Point& x, const Point& y);

CollapsedDistanceBreakdown collapsed_distance(const CollapsedSpace& space, const Point& x,
                                              const Point& y);
CollapsedDistanceBreakdown collapsed_distance(const CollapsedSpace& space, const LocatedPoint& x,
                                              const LocatedPoint& y);

/// rho_phi as a DistanceFunction. The returned callable owns a copy of the space.
DistanceFunction collapsed_metric(const CollapsedSpace& space);

/// rho_phi with memoized point location and pair distances. Copies of the
/// returned callable share one cache, which is not synchronized.
DistanceFunction cached_collapsed_metric(const CollapsedSpace& space);

struct LipschitzEstimate {
  double l_emp;    // sup |center(s) - center(t)| / |s - t|
  double k_l_emp;  // sup rho_p / rho over pairs on T
};

/// Empirical slope and path-metric ratio over all pairs of the given abscissae.
/// Throws ArgumentError when fewer than two distinct abscissae are given.
LipschitzEstimate lipschitz_estimates(const CollapsedSpace& space,
                                      std::span<const double> abscissae);

}  // namespace bcmetric
