#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcmetric/ball.hpp"
#include "bcmetric/collapse.hpp"
#include "bcmetric/metric.hpp"
#include "bcmetric/params.hpp"
#include "bcmetric/quasi_isometry.hpp"
#include "bcmetric/scene.hpp"

namespace bcmetric {

struct SampleConfig {
  std::uint64_t seed = 42;
  std::size_t n_points = 2000;
  std::size_t n_pairs = 10000;
  std::size_t n_triples = 10000;
  Box box = Box({-30.0, -30.0}, {30.0, 30.0});
};

/// Uniform points in the box plus index pairs/triples into the point pool.
/// Indices within one pair or triple are distinct.
struct Sample {
  std::vector<Point> points;
  std::vector<std::array<std::size_t, 2>> pairs;
  std::vector<std::array<std::size_t, 3>> triples;

  [[nodiscard]] std::vector<PointPair> pair_points() const;
  [[nodiscard]] std::vector<PointTriple> triple_points() const;
};

/// Deterministic: identical configs give identical samples on every platform
/// (64-bit Mersenne Twister with explicit real and index conversions).
Sample sample(const SampleConfig& config);

enum class CheckStatus { Pass, Fail, Errored };

struct Witness {
  std::vector<Point> points;
  double excess;
  std::string detail;
};

using NamedValues = std::vector<std::pair<std::string, double>>;

struct CheckRecord {
  std::string name;
  std::string statement;
  NamedValues theoretical;
  NamedValues empirical;
  std::size_t samples_checked = 0;
  std::size_t violations = 0;
  std::optional<Witness> worst;
  CheckStatus status = CheckStatus::Pass;
  /// Informational records are reported but do not decide the overall verdict.
  bool informational = false;
  std::string error;

  [[nodiscard]] double theoretical_value(const std::string& key) const;
  [[nodiscard]] double empirical_value(const std::string& key) const;
};

struct VerificationReport {
  std::string scene_summary;
  SampleConfig config;
  double tol = kNumericTol;
  std::vector<CheckRecord> checks;
  /// Ambient pairs whose distance is within 1e-9 of r_x + r_y.
  std::size_t vicinity_boundary_pairs = 0;
  double wall_time_s = 0.0;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const CheckRecord& check(const std::string& name) const;
};

struct SuiteOptions {
  double tol = kNumericTol;
  /// Extra pairs checked alongside the sample (e.g. hand-computed cases).
  std::vector<PointPair> anchor_pairs;
  /// Optional user constants checked as an extra two-sided sandwich.
  std::optional<QiParams> extra_qi;
};

/// Runs every collapse check on a strip scene: semi-metric properties, ratio on
/// T, fiber shift, the upper bounds (far, near, all), the lower bound, the
/// whole-collapse sandwich (plus its literal-L variant, informational) and the
/// transferred relaxed triangle inequality on triples.
VerificationReport run_suite(const CollapsedSpace& space, const SampleConfig& config,
                             const SuiteOptions& options = {});

struct BallSuiteOptions {
  BcParams bc = BcParams(2.0, 0.0);
  double tol = kClosedFormTol;
  /// Triples checked in addition to the sample.
  std::vector<PointTriple> anchor_triples;
};

/// Semi-metric and (b, c) checks for the ball quotient distance.
VerificationReport run_ball_suite(const BallScene& ball, const SampleConfig& config,
                                  const BallSuiteOptions& options = {});

/// The three-point configuration witnessing that the ball quotient is not a
/// metric, scaled to the ball: center + radius * {(-1.1, 0), (1.1, 0), (1.1, 10)}.
PointTriple ball_anchor_triple(const BallScene& ball);

/// Checks that f is a quasi-isometry with constants qi on the sampled pairs, then
/// that d_image satisfies the transferred (b', c') inequality on image triples.
/// A failed precondition yields an Errored record naming the violating pair.
CheckRecord run_lemma11_check(const DistanceFunction& d, const PointMap& f,
                              const DistanceFunction& d_image, const BcParams& source,
                              const QiParams& qi, const SampleConfig& config,
                              double tol = kClosedFormTol);

}  // namespace bcmetric
