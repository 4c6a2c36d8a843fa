#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bcmetric/params.hpp"
#include "bcmetric/point.hpp"

namespace bcmetric {

/// Symmetric, non-negative pairwise distance candidate. Ambient metrics, the
/// collapsed distance and the disk quotient all present through this type.
using DistanceFunction = std::function<double(const Point&, const Point&)>;

/// Default slack for closed-form distances.
inline constexpr double kClosedFormTol = 1e-9;
/// Default slack when quadrature- or minimization-backed distances participate.
inline constexpr double kNumericTol = 1e-6;

enum class SemimetricAxiom { NonNegative, Symmetric, ZeroOnDiagonal };

struct SemimetricViolation {
  SemimetricAxiom axiom;
  Point x;
  Point y;
  double d_xy;
  double d_yx;
};

struct TripleViolation {
  Point x;
  Point y;
  Point z;
  double lhs;      // d(x,z)
  double rhs;      // b(d(x,y) + d(y,z)) + c
  double deficit;  // lhs - rhs, always > 0
};

struct BcFrontierEntry {
  double b;
  double c_min;
};

/// Least additive slack per probed b. c_min is non-increasing in b.
struct BcFrontier {
  std::vector<BcFrontierEntry> entries;

  /// c_min for the given b; throws ArgumentError if b was not probed.
  [[nodiscard]] double c_at(double b) const;
};

/// Evaluates d and throws EvaluationError naming the pair when the value is not finite.
double evaluate(const DistanceFunction& d, const Point& x, const Point& y);

/// Checks non-negativity, symmetry and d(x,x) = 0 on every ordered pair of pts.
std::vector<SemimetricViolation> check_semimetric(const DistanceFunction& d,
                                                  std::span<const Point> pts, double tol);

/// Triples with d(x,z) > b(d(x,y) + d(y,z)) + c + tol. Triples are checked as ordered.
std::vector<TripleViolation> verify_bc(const DistanceFunction& d, const BcParams& params,
                                       std::span<const PointTriple> triples, double tol);

/// For each b in b_grid, the least c making every triple satisfy the (b,c) inequality.
BcFrontier estimate_bc(const DistanceFunction& d, std::span<const PointTriple> triples,
                       std::span<const double> b_grid);

/// Constants of the image of a (b,c)-metric under a (K,C)-quasi-isometry:
/// b' = bK^2, c' = 2bCK^2 + Kc + C.
BcParams transfer_bc(const BcParams& source, const QiParams& qi);

}  // namespace bcmetric
