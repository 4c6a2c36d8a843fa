#include "bcmetric/point.hpp"

#include <cmath>
#include <cstdio>

#include "bcmetric/errors.hpp"

namespace bcmetric {

namespace {

void validate(const std::vector<double>& coords) {
  if (coords.empty()) {
    throw ArgumentError("point must have dimension >= 1");
  }
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw ArgumentError("point coordinates must be finite");
    }
  }
}

}  // namespace

Point::Point(std::initializer_list<double> coords) : coords_(coords) { validate(coords_); }

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(coords_); }

double euclidean(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) {
    throw ArgumentError("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                        std::to_string(y.dim()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double d = x[i] - y[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i > 0) out += ", ";
    out += format_real(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace bcmetric
