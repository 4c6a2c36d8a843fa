#include "bcmetric/scene.hpp"

#include <cmath>
#include <variant>

#include "bcmetric/errors.hpp"

namespace bcmetric {

Box::Box(std::vector<double> lo, std::vector<double> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty() || lo_.size() != hi_.size()) {
    throw ArgumentError("box bounds must be non-empty and of equal dimension");
  }
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!std::isfinite(lo_[i]) || !std::isfinite(hi_[i]) || !(lo_[i] < hi_[i])) {
      throw ArgumentError("degenerate box on axis " + std::to_string(i) + ": [" +
                          format_real(lo_[i]) + ", " + format_real(hi_[i]) + "]");
    }
  }
}

bool Box::contains(const Point& p, double tol) const {
  if (p.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i] < lo_[i] - tol || p[i] > hi_[i] + tol) return false;
  }
  return true;
}

StripScene::StripScene(Curve center, double half_width_below, double half_width_above, Box domain)
    : center_(std::move(center)),
      below_(half_width_below),
      above_(half_width_above),
      domain_(std::move(domain)) {
  if (!(below_ > 0.0) || !(above_ > 0.0) || !std::isfinite(below_) || !std::isfinite(above_)) {
    throw ArgumentError("strip half widths must be positive and finite");
  }
  if (domain_.dim() != 2) throw ArgumentError("strip scenes live in R^2");
}

bool StripScene::contains(const Point& p, double tol) const {
  if (p.dim() != 2) throw ArgumentError("strip scenes take 2-D points");
  const double c = center_.value(p[0]);
  return p[1] >= c - below_ - tol && p[1] <= c + above_ + tol;
}

bool StripScene::on_transversal(const Point& p, double tol) const {
  if (p.dim() != 2) throw ArgumentError("strip scenes take 2-D points");
  return std::abs(p[1] - center_.value(p[0])) <= tol;
}

BallScene::BallScene(Point center, double radius, Box domain)
    : center_(std::move(center)), radius_(radius), domain_(std::move(domain)) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw ArgumentError("ball radius must be positive and finite");
  }
  if (domain_.dim() != center_.dim()) {
    throw ArgumentError("ball domain box dimension does not match its center");
  }
}

bool BallScene::contains(const Point& p) const { return euclidean(p, center_) <= radius_; }

CollapsedSpace::CollapsedSpace(StripScene scene, BcParams ambient)
    : scene_(std::move(scene)),
      f_max_(max_fiber_length(scene_)),
      k_l_(std::sqrt(1.0 + scene_.center().lipschitz() * scene_.center().lipschitz())),
      ambient_(ambient) {}

double max_fiber_length(const StripScene& scene) {
  return scene.half_width_below() + scene.half_width_above();
}

double max_fiber_length(const BallScene& scene) { return 2.0 * scene.radius(); }

namespace {

std::string describe_box(const Box& box) {
  std::string out;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (i > 0) out += " x ";
    out += "[" + format_real(box.lo()[i]) + ", " + format_real(box.hi()[i]) + "]";
  }
  return out;
}

}  // namespace

std::string describe(const StripScene& scene) {
  std::string curve = scene.center().kind_name();
  if (const auto* s = std::get_if<SinusoidCurve>(&scene.center().spec())) {
    curve += " " + format_real(s->amplitude) + "*sin(" + format_real(s->frequency) + "*t + " +
             format_real(s->phase) + ") + " + format_real(s->offset);
  } else if (const auto* c = std::get_if<ConstantCurve>(&scene.center().spec())) {
    curve += " " + format_real(c->level);
  }
  return "strip2d center=" + curve + " below=" + format_real(scene.half_width_below()) +
         " above=" + format_real(scene.half_width_above()) +
         " L=" + format_real(scene.center().lipschitz()) + " domain=" + describe_box(scene.domain());
}

std::string describe(const BallScene& scene) {
  return "ball dim=" + std::to_string(scene.dim()) + " center=" + to_string(scene.center()) +
         " radius=" + format_real(scene.radius()) + " domain=" + describe_box(scene.domain());
}

}  // namespace bcmetric
