#include "bcmetric/ball.hpp"

#include <algorithm>
#include <cmath>

#include "bcmetric/errors.hpp"

namespace bcmetric {

double chord_length(const BallScene& ball, const Point& x_in, const Point& y_in) {
  // Canonical endpoint order makes the result exactly symmetric.
  const bool swap = std::lexicographical_compare(y_in.coords().begin(), y_in.coords().end(),
                                                 x_in.coords().begin(), x_in.coords().end());
  const Point& x = swap ? y_in : x_in;
  const Point& y = swap ? x_in : y_in;
  if (x.dim() != ball.dim() || y.dim() != ball.dim()) {
    throw ArgumentError("point dimension does not match the ball");
  }
  if (x == y) throw ArgumentError("chord of a degenerate segment at " + to_string(x));

  // |x + t (y - x) - center|^2 = radius^2  <=>  a t^2 + 2 h t + k = 0
  double a = 0.0;
  double h = 0.0;
  double k = -ball.radius() * ball.radius();
  for (std::size_t i = 0; i < ball.dim(); ++i) {
    const double d = y[i] - x[i];
    const double w = x[i] - ball.center()[i];
    a += d * d;
    h += d * w;
    k += w * w;
  }
  const double disc = h * h - a * k;
  if (disc <= 0.0) return 0.0;
  const double root = std::sqrt(disc);
  const double t0 = std::clamp((-h - root) / a, 0.0, 1.0);
  const double t1 = std::clamp((-h + root) / a, 0.0, 1.0);
  if (t1 <= t0) return 0.0;
  return std::min((t1 - t0) * std::sqrt(a), 2.0 * ball.radius());
}

double ball_sigma(const BallScene& ball, const Point& x, const Point& y) {
  if (x == y) return 0.0;
  return std::max(0.0, euclidean(x, y) - chord_length(ball, x, y));
}

Nearest nearest_distance_to_set(const BallScene& ball, const Point& x) {
  if (x.dim() != ball.dim()) throw ArgumentError("point dimension does not match the ball");
  const double dist = euclidean(x, ball.center());
  if (dist <= ball.radius()) return {0.0, x};
  std::vector<double> coords(ball.dim());
  for (std::size_t i = 0; i < ball.dim(); ++i) {
    coords[i] = ball.center()[i] + ball.radius() * (x[i] - ball.center()[i]) / dist;
  }
  return {dist - ball.radius(), Point(std::move(coords))};
}

DistanceFunction ball_metric(const BallScene& ball) {
  return [ball](const Point& x, const Point& y) { return ball_sigma(ball, x, y); };
}

}  // namespace bcmetric
