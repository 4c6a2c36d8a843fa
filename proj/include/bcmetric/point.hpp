#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bcmetric {

/// A point of R^n. Dimension is at least one and every coordinate is finite.
class Point {
 public:
  Point(std::initializer_list<double> coords);
  explicit Point(std::vector<double> coords);

  [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// Standard Euclidean distance. Throws ArgumentError on dimension mismatch.
double euclidean(const Point& x, const Point& y);

/// "(x1, x2, ...)" with 12 significant digits.
std::string to_string(const Point& p);

/// Formats a real with 12 significant digits ("%.12g").
std::string format_real(double v);

struct PointPair {
  Point x;
  Point y;
};

struct PointTriple {
  Point x;
  Point y;
  Point z;
};

}  // namespace bcmetric
