#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bcmetric/metric.hpp"
#include "bcmetric/params.hpp"
#include "bcmetric/point.hpp"

namespace bcmetric {

/// A map between point sets, e.g. R -> Z embedded as 1-D points.
using PointMap = std::function<Point(const Point&)>;

enum class SandwichSide { Lower, Upper };

struct PairViolation {
  Point x;
  Point y;
  double rho;        // d_dom(x, y)
  double rho_image;  // d_cod(f x, f y)
  SandwichSide side;
  double excess;     // amount by which the side is broken, always > 0
};

struct QiFrontierEntry {
  double k;
  double c;
};

/// Empirical quasi-isometry constants over a K grid.
///
/// `frontier` holds, per probed K, the least C satisfying both sandwich sides on
/// every sampled pair (non-increasing in K). `c_emp_at_k` is the frontier value at
/// the largest probed K. `k_emp` is the least probed K whose C fits the budget
/// passed to estimate_qi (without a budget: the least K attaining the frontier
/// minimum); it is unset when no probed K fits.
struct QiEstimate {
  std::optional<double> k_emp;
  double c_emp_at_k = 0.0;
  std::vector<QiFrontierEntry> frontier;

  [[nodiscard]] double c_at(double k) const;
};

/// One sampled pair after evaluation of both distances.
struct PairSample {
  double rho;
  double rho_image;
};

/// Pairs breaking either sandwich side by more than tol. Pairs with x = y are checked.
std::vector<PairViolation> check_qi(const PointMap& f, const DistanceFunction& d_dom,
                                    const DistanceFunction& d_cod, const QiParams& params,
                                    std::span<const PointPair> pairs, double tol);

/// Frontier of least C per K. Pairs with x = y are skipped.
QiEstimate estimate_qi(const PointMap& f, const DistanceFunction& d_dom,
                       const DistanceFunction& d_cod, std::span<const PointPair> pairs,
                       std::span<const double> k_grid,
                       std::optional<double> c_budget = std::nullopt);

/// Same estimate from pre-evaluated (rho, rho_image) values.
QiEstimate estimate_qi(std::span<const PairSample> samples, std::span<const double> k_grid,
                       std::optional<double> c_budget = std::nullopt);

/// Least C so that every sample satisfies both sides at multiplicative constant k.
double least_c(std::span<const PairSample> samples, double k);

/// Greatest integer <= x.
std::int64_t floor_map(double x);

/// floor_map lifted to 1-D points.
Point floor_point(const Point& x);

}  // namespace bcmetric
