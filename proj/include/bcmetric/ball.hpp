#pragma once

#include "bcmetric/collapse.hpp"
#include "bcmetric/metric.hpp"
#include "bcmetric/scene.hpp"

namespace bcmetric {

/// Length of the part of segment [x, y] inside the ball; 0 when they miss.
/// Throws ArgumentError for x == y or a dimension mismatch.
double chord_length(const BallScene& ball, const Point& x, const Point& y);

/// Distance on the ball quotient: rho(x, y) minus the chord the segment spends
/// inside the ball. sigma(x, x) = 0.
double ball_sigma(const BallScene& ball, const Point& x, const Point& y);

/// Radial projection onto the ball; r = 0 inside.
Nearest nearest_distance_to_set(const BallScene& ball, const Point& x);

DistanceFunction ball_metric(const BallScene& ball);

}  // namespace bcmetric
