#include "bcmetric/quasi_isometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcmetric/errors.hpp"

namespace bcmetric {

namespace {

Point apply(const PointMap& f, const Point& x) {
  try {
    return f(x);
  } catch (const std::exception& e) {
    throw EvaluationError("map undefined at " + to_string(x) + ": " + e.what());
  }
}

bool upper_holds(double rho, double image, double k, double c, double tol) {
  return !(image > k * rho + c + tol);
}

bool lower_holds(double rho, double image, double k, double c, double tol) {
  return !(image < rho / k - c - tol);
}

std::vector<double> sorted_grid(std::span<const double> k_grid) {
  for (double k : k_grid) {
    if (!(k >= 1.0) || !std::isfinite(k)) {
      throw ArgumentError("K grid values must be finite and >= 1, got " + format_real(k));
    }
  }
  std::vector<double> grid(k_grid.begin(), k_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) throw ArgumentError("K grid is empty");
  return grid;
}

}  // namespace

double QiEstimate::c_at(double k) const {
  for (const auto& e : frontier) {
    if (e.k == k) return e.c;
  }
  throw ArgumentError("K = " + format_real(k) + " was not probed");
}

std::vector<PairViolation> check_qi(const PointMap& f, const DistanceFunction& d_dom,
                                    const DistanceFunction& d_cod, const QiParams& params,
                                    std::span<const PointPair> pairs, double tol) {
  if (!(tol >= 0.0)) throw ArgumentError("tol must be >= 0");
  const double k = params.k();
  const double c = params.c();
  std::vector<PairViolation> out;
  for (const auto& p : pairs) {
    const double rho = evaluate(d_dom, p.x, p.y);
    const double image = evaluate(d_cod, apply(f, p.x), apply(f, p.y));
    if (!upper_holds(rho, image, k, c, tol)) {
      out.push_back({p.x, p.y, rho, image, SandwichSide::Upper, image - (k * rho + c)});
    }
    if (!lower_holds(rho, image, k, c, tol)) {
      out.push_back({p.x, p.y, rho, image, SandwichSide::Lower, (rho / k - c) - image});
    }
  }
  return out;
}

double least_c(std::span<const PairSample> samples, double k) {
  double c = 0.0;
  for (const auto& s : samples) {
    double needed = std::max(s.rho_image - k * s.rho, s.rho / k - s.rho_image);
    // Round up until the comparisons in check_qi accept it at tol 0.
    while (needed > 0.0 && !(upper_holds(s.rho, s.rho_image, k, needed, 0.0) &&
                             lower_holds(s.rho, s.rho_image, k, needed, 0.0))) {
      needed = std::nextafter(needed, HUGE_VAL);
    }
    c = std::max(c, needed);
  }
  return c;
}

QiEstimate estimate_qi(std::span<const PairSample> samples, std::span<const double> k_grid,
                       std::optional<double> c_budget) {
  if (samples.empty()) throw ArgumentError("estimate_qi needs at least one pair");
  const auto grid = sorted_grid(k_grid);

  QiEstimate est;
  for (double k : grid) {
    est.frontier.push_back({k, least_c(samples, k)});
  }
  est.c_emp_at_k = est.frontier.back().c;

  const double budget = c_budget.value_or(est.frontier.back().c);
  for (const auto& e : est.frontier) {
    if (e.c <= budget) {
      est.k_emp = e.k;
      break;
    }
  }
  return est;
}

QiEstimate estimate_qi(const PointMap& f, const DistanceFunction& d_dom,
                       const DistanceFunction& d_cod, std::span<const PointPair> pairs,
                       std::span<const double> k_grid, std::optional<double> c_budget) {
  if (pairs.empty()) throw ArgumentError("estimate_qi needs at least one pair");
  std::vector<PairSample> samples;
  samples.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.x == p.y) continue;
    samples.push_back({evaluate(d_dom, p.x, p.y),
                       evaluate(d_cod, apply(f, p.x), apply(f, p.y))});
  }
  if (samples.empty()) throw ArgumentError("estimate_qi: every pair is degenerate (x = y)");
  return estimate_qi(samples, k_grid, c_budget);
}

std::int64_t floor_map(double x) { return static_cast<std::int64_t>(std::floor(x)); }

Point floor_point(const Point& x) {
  if (x.dim() != 1) throw ArgumentError("floor map is defined on 1-D points");
  return Point{static_cast<double>(floor_map(x[0]))};
}

}  // namespace bcmetric
