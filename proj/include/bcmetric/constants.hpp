#pragma once

#include "bcmetric/params.hpp"
#include "bcmetric/scene.hpp"

namespace bcmetric {

/// Theoretical constants of the collapse bounds, for ambient constants (b, c),
/// longest fiber f and path-metric constant K_L.
struct LemmaConstants {
  /// rho_phi <= K_L rho for pairs on T.
  double ratio;
  /// rho(x', y') <= b^2 rho(x, y) + (b^2 f + bc + c) for x, y in S, as stated.
  QiParams fiber;
  /// Same bound with the displacement terms of both endpoints kept:
  /// (b^2 + b) f + bc + c. Reduces to rho + 2f for a metric ambient space.
  QiParams fiber_metric_case;
  /// Upper bound for x, y in S with rho(x, y) >= f: (b^2 K_L, K_L (b^2 f + bc + c)).
  QiParams upper_far;
  /// Upper bound for x, y in S with rho(x, y) < f: (b^2 K_L, K_L (3 b^2 f + bc + c)).
  QiParams upper_near;
  /// Upper bound on all of X as stated: (b^2 K_L + 1, b^2 f + bc + c). Broken by
  /// pairs outside S whose nearest points in S lie far apart.
  QiParams upper_all;
  /// Upper bound on all of X with the fiber bound applied to x_S, y_S and
  /// rho(x_S, y_S) <= b^2 (rho + r_x + r_y) + bc + c < 2 b^2 rho + bc + c:
  /// (2 b^4 K_L + 1, K_L ((b^2 + b) f + (b^3 + b^2 + b + 1) c)).
  QiParams upper_all_derived;
  /// Lower bound on all of X: rho / b^3 - C with C = 2(bMf + N) + (c(2b + 1) + 1) / b^2,
  /// M = 1 and N = 0 for Euclidean strips.
  QiParams lower;
};

LemmaConstants lemma_constants(const BcParams& ambient, const CollapsedSpace& space);

/// Sandwich constants for the whole collapse: K = b^3 max(K_L, 1) + 1,
/// C = K (3 b^2 f + bc + c).
QiParams theorem2_constants(const BcParams& ambient, const CollapsedSpace& space);

/// Same formula with the curve's slope bound L in place of max(K_L, 1):
/// K = b^3 L + 1. Fails on flat strips, where L = 0; reported, never gated on.
QiParams theorem2_constants_literal(const BcParams& ambient, const CollapsedSpace& space);

}  // namespace bcmetric
