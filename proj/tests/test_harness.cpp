#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>
#include <set>

#include "bcmetric/constants.hpp"
#include "bcmetric/errors.hpp"
#include "bcmetric/harness.hpp"
#include "bcmetric/report_io.hpp"

using namespace bcmetric;

namespace {

const Box kBox({-30.0, -30.0}, {30.0, 30.0});
const CollapsedSpace kFlat(StripScene(Curve(ConstantCurve{}), 1.0, 1.0, kBox));
const CollapsedSpace kSine(StripScene(Curve(SinusoidCurve{}), 1.0, 1.0, kBox));
const BallScene kDisk(Point{0.0, 0.0}, 1.0, Box({-10.0, -10.0}, {10.0, 10.0}));

SampleConfig small(std::uint64_t seed, const Box& box = kBox) {
  return SampleConfig{.seed = seed, .n_points = 300, .n_pairs = 1500, .n_triples = 1500, .box = box};
}

void expect_status_matches_counts(const VerificationReport& r) {
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Errored) continue;
    EXPECT_EQ(c.status == CheckStatus::Pass, c.violations == 0) << c.name;
    if (c.violations > 0) EXPECT_TRUE(c.worst.has_value()) << c.name;
  }
}

}  // namespace

TEST(Sample, Deterministic) {
  const SampleConfig cfg{.seed = 42, .n_points = 3, .n_pairs = 4, .n_triples = 2,
                         .box = Box({0.0, 0.0}, {1.0, 1.0})};
  const Sample a = sample(cfg);
  const Sample b = sample(cfg);
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(a.triples, b.triples);
  ASSERT_EQ(a.points.size(), 3u);
  for (const auto& p : a.points) EXPECT_TRUE(cfg.box.contains(p));
}

TEST(Sample, SeedsDiffer) {
  SampleConfig cfg = small(42);
  const Point first42 = sample(cfg).points.front();
  cfg.seed = 43;
  EXPECT_NE(sample(cfg).points.front(), first42);
}

TEST(Sample, CountsAndDistinctIndices) {
  SampleConfig cfg = small(7);
  cfg.n_pairs = 0;
  const Sample s = sample(cfg);
  EXPECT_TRUE(s.pairs.empty());
  EXPECT_EQ(s.triples.size(), cfg.n_triples);
  for (const auto& t : s.triples) {
    EXPECT_EQ(std::set<std::size_t>(t.begin(), t.end()).size(), 3u);
    for (auto i : t) EXPECT_LT(i, s.points.size());
  }
  cfg.n_points = 2;
  EXPECT_THROW(sample(cfg), ArgumentError);
}

TEST(Sample, IndependentOfOtherCounts) {
  // Points do not depend on how many pairs are drawn afterwards.
  SampleConfig a = small(5);
  SampleConfig b = small(5);
  b.n_pairs = 10;
  EXPECT_EQ(sample(a).points, sample(b).points);
}

TEST(RunSuite, FlatStripWithHandPair) {
  SuiteOptions opts;
  opts.anchor_pairs = {{Point{0.0, 5.0}, Point{9.0, 5.0}}};
  const VerificationReport r = run_suite(kFlat, small(42), opts);
  EXPECT_TRUE(r.passed());
  const auto& t2 = r.check("theorem2");
  EXPECT_EQ(t2.status, CheckStatus::Pass);
  EXPECT_EQ(t2.theoretical_value("K"), 2.0);
  EXPECT_EQ(t2.theoretical_value("C"), 12.0);
  EXPECT_TRUE(r.check("theorem2_literal").informational);
  EXPECT_EQ(r.check("theorem2_literal").status, CheckStatus::Fail);
  expect_status_matches_counts(r);
}

TEST(RunSuite, SineStripSmallSample) {
  const VerificationReport r = run_suite(kSine, small(42));
  for (const auto& c : r.checks) {
    if (!c.informational) EXPECT_EQ(c.status, CheckStatus::Pass) << c.name << " " << c.error;
  }
  EXPECT_TRUE(r.passed());
  EXPECT_DOUBLE_EQ(r.check("ratio_on_T").theoretical_value("K_L"), std::sqrt(2.0));
  EXPECT_EQ(r.check("fiber_shift").theoretical_value("C"), 4.0);
  EXPECT_LE(r.check("ratio_on_T").empirical_value("ratio_max"), std::sqrt(2.0) + 1e-6);
  expect_status_matches_counts(r);
}

TEST(RunSuite, UserConstantsTooSmallFail) {
  SuiteOptions opts;
  opts.extra_qi = QiParams(1.0, 0.0);
  const VerificationReport r = run_suite(kSine, small(3), opts);
  EXPECT_EQ(r.check("user_qi").status, CheckStatus::Fail);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.check("user_qi").worst.has_value());
  EXPECT_GT(r.check("user_qi").worst->excess, 0.0);
}

TEST(RunSuite, WorstWitnessIsTheLargestExcess) {
  SuiteOptions opts;
  opts.extra_qi = QiParams(1.5, 0.5);
  const VerificationReport r = run_suite(kSine, small(8), opts);
  const auto& rec = r.check("user_qi");
  ASSERT_TRUE(rec.worst.has_value());
  const auto& w = *rec.worst;
  ASSERT_EQ(w.points.size(), 2u);
  const double rho = euclidean(w.points[0], w.points[1]);
  const double phi = collapsed_distance(kSine, w.points[0], w.points[1]).rho_phi;
  const double excess = std::max(phi - (1.5 * rho + 0.5), rho / 1.5 - 0.5 - phi);
  EXPECT_NEAR(w.excess, excess, 1e-9);
}

TEST(RunBallSuite, PaperTriple) {
  BallSuiteOptions opts;
  opts.anchor_triples = {ball_anchor_triple(kDisk)};
  const SampleConfig cfg = small(42, kDisk.domain());
  const VerificationReport two = run_ball_suite(kDisk, cfg, opts);
  EXPECT_TRUE(two.passed());
  opts.bc = BcParams(1.0, 0.0);
  const VerificationReport one = run_ball_suite(kDisk, cfg, opts);
  EXPECT_FALSE(one.passed());
  EXPECT_GE(one.check("bc_check").violations, 1u);
  expect_status_matches_counts(one);
}

TEST(TransferCheck, FloorMapTransfersToOneThree) {
  const SampleConfig cfg{.seed = 42, .n_points = 2000, .n_pairs = 10000, .n_triples = 10000,
                         .box = Box({-100.0}, {100.0})};
  const CheckRecord rec = run_lemma11_check(euclidean, floor_point, euclidean, BcParams(1.0, 0.0),
                                            QiParams(1.0, 1.0), cfg);
  EXPECT_EQ(rec.status, CheckStatus::Pass) << rec.error;
  EXPECT_EQ(rec.violations, 0u);
  EXPECT_EQ(rec.theoretical_value("b_prime"), 1.0);
  EXPECT_EQ(rec.theoretical_value("c_prime"), 3.0);
}

TEST(TransferCheck, IdentityKeepsOneZero) {
  const SampleConfig cfg = small(4);
  const PointMap id = [](const Point& p) { return p; };
  const CheckRecord rec =
      run_lemma11_check(euclidean, id, euclidean, BcParams(1.0, 0.0), QiParams(1.0, 0.0), cfg);
  EXPECT_EQ(rec.status, CheckStatus::Pass);
  EXPECT_EQ(rec.theoretical_value("c_prime"), 0.0);
}

TEST(TransferCheck, BrokenPreconditionIsErrored) {
  const SampleConfig cfg = small(4, Box({-100.0}, {100.0}));
  const CheckRecord rec = run_lemma11_check(euclidean, floor_point, euclidean, BcParams(1.0, 0.0),
                                            QiParams(1.0, 0.0), cfg);
  EXPECT_EQ(rec.status, CheckStatus::Errored);
  EXPECT_NE(rec.error.find("precondition"), std::string::npos);
}

TEST(TransferCheck, CollapseWithTheoremTwoConstants) {
  const SampleConfig cfg = small(6);
  const QiParams thm = theorem2_constants(BcParams(1.0, 0.0), kSine);
  const PointMap id = [](const Point& p) { return p; };
  const CheckRecord rec = run_lemma11_check(euclidean, id, cached_collapsed_metric(kSine),
                                            BcParams(1.0, 0.0), thm, cfg, 1e-6);
  EXPECT_EQ(rec.status, CheckStatus::Pass) << rec.error;
}

TEST(Report, JsonIsStableAndRounded) {
  const VerificationReport a = run_suite(kFlat, small(1));
  VerificationReport b = run_suite(kFlat, small(1));
  b.wall_time_s = a.wall_time_s + 100.0;
  EXPECT_EQ(report_to_json(a), report_to_json(b));
  const auto doc = nlohmann::json::parse(report_to_json(a));
  EXPECT_EQ(doc["passed"], a.passed());
  EXPECT_EQ(doc["checks"].size(), a.checks.size());
  EXPECT_FALSE(doc.contains("wall_time_s"));
  EXPECT_EQ(round12(1.0 / 3.0), 0.333333333333);
  EXPECT_EQ(round12(std::sqrt(2.0)), 1.41421356237);
}

TEST(Report, InformationalChecksDoNotDecide) {
  VerificationReport r;
  CheckRecord info;
  info.name = "x";
  info.status = CheckStatus::Fail;
  info.informational = true;
  r.checks.push_back(info);
  EXPECT_TRUE(r.passed());
  r.checks.back().informational = false;
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(static_cast<void>(r.check("missing")), ArgumentError);
}

TEST(EstimateQi, SineCollapseAtKTwoStaysUnderTheoremTwo) {
  const Sample s = sample({.seed = 42, .n_points = 1000, .n_pairs = 5000, .n_triples = 0,
                           .box = kBox});
  const PointMap id = [](const Point& p) { return p; };
  const auto est = estimate_qi(id, euclidean, cached_collapsed_metric(kSine), s.pair_points(),
                               std::vector<double>{2.0});
  const QiParams thm = theorem2_constants(BcParams(1.0, 0.0), kSine);
  EXPECT_LE(est.c_at(2.0), thm.c());
}
