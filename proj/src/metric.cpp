#include "bcmetric/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcmetric/errors.hpp"

namespace bcmetric {

namespace {

void require_finite_param(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ArgumentError(std::string(name) + " must be finite");
  }
}

}  // namespace

BcParams::BcParams(double b, double c) : b_(b), c_(c) {
  require_finite_param(b, "b");
  require_finite_param(c, "c");
  if (b < 1.0) throw ArgumentError("b must be >= 1, got " + format_real(b));
  if (c < 0.0) throw ArgumentError("c must be >= 0, got " + format_real(c));
}

QiParams::QiParams(double k, double c) : k_(k), c_(c) {
  require_finite_param(k, "K");
  require_finite_param(c, "C");
  if (k < 1.0) throw ArgumentError("K must be >= 1, got " + format_real(k));
  if (c < 0.0) throw ArgumentError("C must be >= 0, got " + format_real(c));
}

double BcFrontier::c_at(double b) const {
  for (const auto& e : entries) {
    if (e.b == b) return e.c_min;
  }
  throw ArgumentError("b = " + format_real(b) + " was not probed");
}

double evaluate(const DistanceFunction& d, const Point& x, const Point& y) {
  double v = 0.0;
  try {
    v = d(x, y);
  } catch (const EvaluationError&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError("distance failed at " + to_string(x) + ", " + to_string(y) + ": " +
                          e.what());
  }
  if (!std::isfinite(v)) {
    throw EvaluationError("non-finite distance at " + to_string(x) + ", " + to_string(y));
  }
  return v;
}

std::vector<SemimetricViolation> check_semimetric(const DistanceFunction& d,
                                                  std::span<const Point> pts, double tol) {
  if (pts.empty()) throw ArgumentError("check_semimetric needs at least one point");
  if (!(tol >= 0.0)) throw ArgumentError("tol must be >= 0");

  std::vector<SemimetricViolation> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double self = evaluate(d, pts[i], pts[i]);
    if (self > tol) {
      out.push_back({SemimetricAxiom::ZeroOnDiagonal, pts[i], pts[i], self, self});
    }
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dxy = evaluate(d, pts[i], pts[j]);
      const double dyx = evaluate(d, pts[j], pts[i]);
      if (dxy < -tol || dyx < -tol) {
        out.push_back({SemimetricAxiom::NonNegative, pts[i], pts[j], dxy, dyx});
      }
      if (std::abs(dxy - dyx) > tol) {
        out.push_back({SemimetricAxiom::Symmetric, pts[i], pts[j], dxy, dyx});
      }
    }
  }
  return out;
}

std::vector<TripleViolation> verify_bc(const DistanceFunction& d, const BcParams& params,
                                       std::span<const PointTriple> triples, double tol) {
  if (!(tol >= 0.0)) throw ArgumentError("tol must be >= 0");
  std::vector<TripleViolation> out;
  for (const auto& t : triples) {
    const double lhs = evaluate(d, t.x, t.z);
    const double rhs = params.b() * (evaluate(d, t.x, t.y) + evaluate(d, t.y, t.z)) + params.c();
    if (lhs > rhs + tol) {
      out.push_back({t.x, t.y, t.z, lhs, rhs, lhs - rhs});
    }
  }
  return out;
}

BcFrontier estimate_bc(const DistanceFunction& d, std::span<const PointTriple> triples,
                       std::span<const double> b_grid) {
  if (triples.empty()) throw ArgumentError("estimate_bc needs at least one triple");
  for (double b : b_grid) {
    if (!(b >= 1.0) || !std::isfinite(b)) {
      throw ArgumentError("b grid values must be finite and >= 1, got " + format_real(b));
    }
  }

  // Each triple only contributes (d(x,z), d(x,y) + d(y,z)); evaluate once.
  std::vector<std::pair<double, double>> sides;
  sides.reserve(triples.size());
  for (const auto& t : triples) {
    sides.emplace_back(evaluate(d, t.x, t.z), evaluate(d, t.x, t.y) + evaluate(d, t.y, t.z));
  }

  std::vector<double> grid(b_grid.begin(), b_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  BcFrontier frontier;
  for (double b : grid) {
    double c_min = 0.0;
    for (const auto& [lhs, sum] : sides) {
      double needed = lhs - b * sum;
      // Round up until the exact expression used by verify_bc is satisfied.
      while (b * sum + needed < lhs) needed = std::nextafter(needed, HUGE_VAL);
      c_min = std::max(c_min, needed);
    }
    frontier.entries.push_back({b, c_min});
  }
  return frontier;
}

BcParams transfer_bc(const BcParams& source, const QiParams& qi) {
  const double b = source.b();
  const double c = source.c();
  const double k = qi.k();
  const double big_c = qi.c();
  return BcParams(b * k * k, 2.0 * b * big_c * k * k + k * c + big_c);
}

}  // namespace bcmetric
