#pragma once

#include <string>
#include <vector>

#include "bcmetric/curve.hpp"
#include "bcmetric/params.hpp"
#include "bcmetric/point.hpp"

namespace bcmetric {

/// Axis-aligned box. Every side has lo < hi.
class Box {
 public:
  Box(std::vector<double> lo, std::vector<double> hi);

  [[nodiscard]] std::size_t dim() const noexcept { return lo_.size(); }
  [[nodiscard]] const std::vector<double>& lo() const noexcept { return lo_; }
  [[nodiscard]] const std::vector<double>& hi() const noexcept { return hi_; }
  [[nodiscard]] bool contains(const Point& p, double tol = 0.0) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<double> lo_;
  std::vector<double> hi_;
};

/// Vertical strip around the graph of `center`:
///   S = {(t, y) : center(t) - below <= y <= center(t) + above}.
/// Fibers are the vertical segments {t} x [center(t) - below, center(t) + above];
/// the transversal T is the graph of center, meeting each fiber once.
class StripScene {
 public:
  StripScene(Curve center, double half_width_below, double half_width_above, Box domain);

  [[nodiscard]] const Curve& center() const noexcept { return center_; }
  [[nodiscard]] double half_width_below() const noexcept { return below_; }
  [[nodiscard]] double half_width_above() const noexcept { return above_; }
  [[nodiscard]] const Box& domain() const noexcept { return domain_; }

  [[nodiscard]] double lower(double t) const { return center_.value(t) - below_; }
  [[nodiscard]] double upper(double t) const { return center_.value(t) + above_; }
  [[nodiscard]] bool contains(const Point& p, double tol = 0.0) const;
  [[nodiscard]] bool on_transversal(const Point& p, double tol) const;

 private:
  Curve center_;
  double below_;
  double above_;
  Box domain_;
};

/// Closed ball collapsed to a single class.
class BallScene {
 public:
  BallScene(Point center, double radius, Box domain);

  [[nodiscard]] const Point& center() const noexcept { return center_; }
  [[nodiscard]] double radius() const noexcept { return radius_; }
  [[nodiscard]] const Box& domain() const noexcept { return domain_; }
  [[nodiscard]] std::size_t dim() const noexcept { return center_.dim(); }
  [[nodiscard]] bool contains(const Point& p) const;

 private:
  Point center_;
  double radius_;
  Box domain_;
};

/// A strip scene together with the data the collapsed distance and its
/// constants depend on.
class CollapsedSpace {
 public:
  explicit CollapsedSpace(StripScene scene, BcParams ambient = BcParams(1.0, 0.0));

  [[nodiscard]] const StripScene& scene() const noexcept { return scene_; }
  /// Longest fiber length.
  [[nodiscard]] double f_max() const noexcept { return f_max_; }
  /// Lipschitz constant of the identity (T, rho) -> (T, rho_p): sqrt(1 + L^2).
  [[nodiscard]] double k_l() const noexcept { return k_l_; }
  /// Lipschitz constant L of the center curve.
  [[nodiscard]] double curve_lipschitz() const noexcept { return scene_.center().lipschitz(); }
  [[nodiscard]] const BcParams& ambient() const noexcept { return ambient_; }

 private:
  StripScene scene_;
  double f_max_;
  double k_l_;
  BcParams ambient_;
};

double max_fiber_length(const StripScene& scene);
double max_fiber_length(const BallScene& scene);

std::string describe(const StripScene& scene);
std::string describe(const BallScene& scene);

}  // namespace bcmetric
