#include "bcmetric/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "bcmetric/constants.hpp"
#include "bcmetric/errors.hpp"

namespace bcmetric {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  std::size_t index(std::size_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return static_cast<std::size_t>(v % n);
  }

 private:
  std::mt19937_64 gen_;
};

// Independent streams so that changing one count leaves the other draws intact.
constexpr std::uint64_t kPairStream = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kTripleStream = 0xC2B2AE3D27D4EB4FULL;

Witness make_witness(const PairViolation& v) {
  return {{v.x, v.y},
          v.excess,
          std::string(v.side == SandwichSide::Upper ? "upper" : "lower") +
              " side: rho = " + format_real(v.rho) + ", image = " + format_real(v.rho_image)};
}

Witness make_witness(const TripleViolation& v) {
  return {{v.x, v.y, v.z},
          v.deficit,
          "d(x,z) = " + format_real(v.lhs) + " > " + format_real(v.rhs)};
}

template <class V>
void absorb(CheckRecord& rec, const std::vector<V>& violations) {
  rec.violations += violations.size();
  for (const auto& v : violations) {
    Witness w = make_witness(v);
    if (!rec.worst || w.excess > rec.worst->excess) rec.worst = std::move(w);
  }
}

void finalize(CheckRecord& rec) {
  if (rec.status != CheckStatus::Errored) {
    rec.status = rec.violations == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  }
}

CheckRecord guarded(const std::string& name, const std::function<CheckRecord()>& body) {
  try {
    CheckRecord rec = body();
    finalize(rec);
    return rec;
  } catch (const std::exception& e) {
    CheckRecord rec;
    rec.name = name;
    rec.status = CheckStatus::Errored;
    rec.error = e.what();
    return rec;
  }
}

enum class Sides { Upper, Lower, Both };

const PointMap kIdentity = [](const Point& p) { return p; };

std::vector<PairSample> evaluate_pairs(const DistanceFunction& d_dom, const DistanceFunction& d_cod,
                                       const PointMap& f, std::span<const PointPair> pairs) {
  std::vector<PairSample> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.x == p.y) continue;
    out.push_back({evaluate(d_dom, p.x, p.y), evaluate(d_cod, f(p.x), f(p.y))});
  }
  return out;
}

/// Sandwich-type check: f maps the pairs, d_cod measures the images, and the
/// requested sides of rho/K - C <= image <= K rho + C are enforced.
CheckRecord sandwich_record(std::string name, std::string statement,
                            std::span<const PointPair> pairs, const PointMap& f,
                            const DistanceFunction& d_cod, const QiParams& qi, Sides sides,
                            double tol) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.statement = std::move(statement);
  rec.theoretical = {{"K", qi.k()}, {"C", qi.c()}};
  rec.samples_checked = pairs.size();

  const DistanceFunction d_dom = euclidean;
  auto violations = check_qi(f, d_dom, d_cod, qi, pairs, tol);
  if (sides != Sides::Both) {
    const SandwichSide keep = sides == Sides::Upper ? SandwichSide::Upper : SandwichSide::Lower;
    std::erase_if(violations, [keep](const PairViolation& v) { return v.side != keep; });
  }
  absorb(rec, violations);

  const auto samples = evaluate_pairs(d_dom, d_cod, f, pairs);
  if (samples.empty()) return rec;

  double ratio_max = 0.0;
  double ratio_min = std::numeric_limits<double>::infinity();
  double c_upper = 0.0;
  double c_lower = 0.0;
  for (const auto& s : samples) {
    if (s.rho > 0.0) {
      ratio_max = std::max(ratio_max, s.rho_image / s.rho);
      ratio_min = std::min(ratio_min, s.rho_image / s.rho);
    }
    c_upper = std::max(c_upper, s.rho_image - qi.k() * s.rho);
    c_lower = std::max(c_lower, s.rho / qi.k() - s.rho_image);
  }
  if (sides != Sides::Lower) {
    rec.empirical.emplace_back("ratio_max", ratio_max);
    rec.empirical.emplace_back("C_emp_upper_at_K", c_upper);
  }
  if (sides != Sides::Upper) {
    rec.empirical.emplace_back("ratio_min", ratio_min);
    rec.empirical.emplace_back("C_emp_lower_at_K", c_lower);
  }
  if (sides == Sides::Both) {
    std::vector<double> grid;
    constexpr int kSteps = 8;
    for (int i = 0; i <= kSteps; ++i) grid.push_back(1.0 + (qi.k() - 1.0) * i / kSteps);
    const QiEstimate est = estimate_qi(samples, grid, qi.c() + tol);
    rec.empirical.emplace_back("K_emp", est.k_emp.value_or(std::numeric_limits<double>::quiet_NaN()));
    rec.empirical.emplace_back("C_emp_at_K", est.c_emp_at_k);
  }
  return rec;
}

std::string fmt_qi(const QiParams& q) {
  return "K = " + format_real(q.k()) + ", C = " + format_real(q.c());
}

}  // namespace

std::vector<PointPair> Sample::pair_points() const {
  std::vector<PointPair> out;
  out.reserve(pairs.size());
  for (const auto& [i, j] : pairs) out.push_back({points[i], points[j]});
  return out;
}

std::vector<PointTriple> Sample::triple_points() const {
  std::vector<PointTriple> out;
  out.reserve(triples.size());
  for (const auto& [i, j, k] : triples) out.push_back({points[i], points[j], points[k]});
  return out;
}

Sample sample(const SampleConfig& config) {
  const Box& box = config.box;
  if (config.n_pairs > 0 && config.n_points < 2) {
    throw ArgumentError("pairs need a pool of at least 2 points");
  }
  if (config.n_triples > 0 && config.n_points < 3) {
    throw ArgumentError("triples need a pool of at least 3 points");
  }

  Sample s;
  Rng point_rng(config.seed);
  s.points.reserve(config.n_points);
  for (std::size_t i = 0; i < config.n_points; ++i) {
    std::vector<double> coords(box.dim());
    for (std::size_t a = 0; a < box.dim(); ++a) {
      coords[a] = box.lo()[a] + point_rng.unit() * (box.hi()[a] - box.lo()[a]);
    }
    s.points.emplace_back(std::move(coords));
  }

  const std::size_t n = config.n_points;
  Rng pair_rng(config.seed ^ kPairStream);
  s.pairs.reserve(config.n_pairs);
  for (std::size_t p = 0; p < config.n_pairs; ++p) {
    const std::size_t i = pair_rng.index(n);
    std::size_t j = pair_rng.index(n - 1);
    if (j >= i) ++j;
    s.pairs.push_back({i, j});
  }

  Rng triple_rng(config.seed ^ kTripleStream);
  s.triples.reserve(config.n_triples);
  for (std::size_t t = 0; t < config.n_triples; ++t) {
    const std::size_t i = triple_rng.index(n);
    std::size_t j = triple_rng.index(n - 1);
    if (j >= i) ++j;
    std::size_t k = triple_rng.index(n - 2);
    if (k >= std::min(i, j)) ++k;
    if (k >= std::max(i, j)) ++k;
    s.triples.push_back({i, j, k});
  }
  return s;
}

double CheckRecord::theoretical_value(const std::string& key) const {
  for (const auto& [k, v] : theoretical) {
    if (k == key) return v;
  }
  throw ArgumentError("check " + name + " has no theoretical value " + key);
}

double CheckRecord::empirical_value(const std::string& key) const {
  for (const auto& [k, v] : empirical) {
    if (k == key) return v;
  }
  throw ArgumentError("check " + name + " has no empirical value " + key);
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) {
    return c.informational || c.status == CheckStatus::Pass;
  });
}

const CheckRecord& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw ArgumentError("report has no check named " + name);
}

VerificationReport run_suite(const CollapsedSpace& space, const SampleConfig& config,
                             const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const StripScene& scene = space.scene();
  const BcParams& ambient = space.ambient();
  const double tol = options.tol;

  VerificationReport report{.scene_summary = describe(scene), .config = config, .tol = tol, .checks = {}};

  const Sample s = sample(config);
  std::vector<PointPair> pairs = s.pair_points();
  pairs.insert(pairs.end(), options.anchor_pairs.begin(), options.anchor_pairs.end());
  const std::vector<PointTriple> triples = s.triple_points();

  // Restrictions: T-points share the sample's abscissae; S-points map the
  // sample's height affinely onto the fiber through its abscissa.
  const double y_lo = config.box.lo()[1];
  const double y_span = config.box.hi()[1] - y_lo;
  const double f = space.f_max();
  std::vector<PointPair> t_pairs;
  std::vector<PointPair> s_pairs;
  std::vector<PointPair> same_fiber;
  const auto on_t = [&](const Point& p) { return Point{p[0], scene.center().value(p[0])}; };
  const auto into_s = [&](const Point& p, bool flip) {
    double u = (p[1] - y_lo) / y_span;
    if (flip) u = 1.0 - u;
    return Point{p[0], scene.lower(p[0]) + u * f};
  };
  const auto usable = [&](const Point& p) { return scene.domain().contains(p, 1e-9); };
  for (const auto& [i, j] : s.pairs) {
    const Point& x = s.points[i];
    const Point& y = s.points[j];
    Point tx = on_t(x), ty = on_t(y);
    if (usable(tx) && usable(ty)) t_pairs.push_back({std::move(tx), std::move(ty)});
    Point sx = into_s(x, false), sy = into_s(y, false);
    if (usable(sx) && usable(sy)) s_pairs.push_back({std::move(sx), std::move(sy)});
  }
  for (const auto& p : s.points) {
    Point a = into_s(p, false), b = into_s(p, true);
    if (usable(a) && usable(b)) same_fiber.push_back({std::move(a), std::move(b)});
  }

  const DistanceFunction rho_phi = cached_collapsed_metric(space);

  const LemmaConstants lc = lemma_constants(ambient, space);
  const QiParams thm2 = theorem2_constants(ambient, space);
  const QiParams thm2_literal = theorem2_constants_literal(ambient, space);

  // Semi-metric properties of rho_phi.
  report.checks.push_back(guarded("semi_metric", [&] {
    CheckRecord rec;
    rec.name = "semi_metric";
    rec.statement = "rho_phi >= 0, rho_phi(x,y) = rho_phi(y,x), rho_phi(x,x) = 0, and "
                    "rho_phi = 0 exactly between points of one class";
    rec.theoretical = {{"tol", tol}};
    double min_value = std::numeric_limits<double>::infinity();
    double max_asym = 0.0;
    const auto check_pair = [&](const PointPair& p) {
      const Point pts[] = {p.x, p.y};
      const auto v = check_semimetric(rho_phi, pts, tol);
      rec.violations += v.size();
      for (const auto& sv : v) {
        const double excess = sv.axiom == SemimetricAxiom::Symmetric ? std::abs(sv.d_xy - sv.d_yx)
                              : sv.axiom == SemimetricAxiom::NonNegative
                                  ? -std::min(sv.d_xy, sv.d_yx)
                                  : sv.d_xy;
        if (!rec.worst || excess > rec.worst->excess) {
          rec.worst = Witness{{sv.x, sv.y}, excess, "semi-metric axiom broken"};
        }
      }
      const double dxy = rho_phi(p.x, p.y);
      min_value = std::min(min_value, dxy);
      max_asym = std::max(max_asym, std::abs(dxy - rho_phi(p.y, p.x)));
      // Zero distance only between points of one class.
      if (dxy <= tol && euclidean(p.x, p.y) > tol) {
        const Point rx = collapse_representative(space, p.x);
        const Point ry = collapse_representative(space, p.y);
        const bool same_class = scene.contains(p.x) && scene.contains(p.y) && euclidean(rx, ry) <= tol;
        if (!same_class) {
          ++rec.violations;
          rec.worst = Witness{{p.x, p.y}, tol - dxy, "zero distance between distinct classes"};
        }
      }
    };
    for (const auto& p : pairs) check_pair(p);
    for (const auto& p : s_pairs) check_pair(p);
    double max_same_fiber = 0.0;
    for (const auto& p : same_fiber) {
      check_pair(p);
      const double d = rho_phi(p.x, p.y);
      max_same_fiber = std::max(max_same_fiber, d);
      if (d > tol) {
        ++rec.violations;
        if (!rec.worst || d > rec.worst->excess) {
          rec.worst = Witness{{p.x, p.y}, d, "points of one fiber at positive distance"};
        }
      }
    }
    rec.samples_checked = pairs.size() + s_pairs.size() + same_fiber.size();
    rec.empirical = {{"min_rho_phi", min_value},
                     {"max_asymmetry", max_asym},
                     {"max_same_fiber_rho_phi", max_same_fiber}};
    return rec;
  }));

  report.checks.push_back(guarded("ratio_on_T", [&] {
    auto rec = sandwich_record("ratio_on_T", "rho_phi(x,y) <= K_L rho(x,y) for x, y on T",
                               t_pairs, kIdentity, rho_phi, QiParams(lc.ratio, 0.0), Sides::Upper,
                               tol);
    rec.theoretical = {{"K_L", lc.ratio}};
    return rec;
  }));

  report.checks.push_back(guarded("fiber_shift", [&] {
    const PointMap project = [&scene](const Point& p) { return fiber_project(scene, p); };
    const DistanceFunction ambient_d = euclidean;
    auto rec = sandwich_record(
        "fiber_shift", "rho(x',y') <= b^2 rho(x,y) + ((b^2 + b) f + bc + c) for x, y in S", s_pairs,
        project, ambient_d, lc.fiber_metric_case, Sides::Upper, tol);
    rec.theoretical.emplace_back("C_stated", lc.fiber.c());
    return rec;
  }));

  report.checks.push_back(guarded("upper_far", [&] {
    return sandwich_record("upper_far", "rho_phi <= b^2 K_L rho + K_L (b^2 f + bc + c) on S",
                           s_pairs, kIdentity, rho_phi, lc.upper_far, Sides::Upper, tol);
  }));

  report.checks.push_back(guarded("upper_near", [&] {
    return sandwich_record("upper_near", "rho_phi <= b^2 K_L rho + K_L (3 b^2 f + bc + c) on S",
                           s_pairs, kIdentity, rho_phi, lc.upper_near, Sides::Upper, tol);
  }));

  report.checks.push_back(guarded("upper_all", [&] {
    auto rec = sandwich_record(
        "upper_all", "rho_phi <= (2 b^4 K_L + 1) rho + K_L ((b^2 + b) f + (b^3 + b^2 + b + 1) c)",
        pairs, kIdentity, rho_phi, lc.upper_all_derived, Sides::Upper, tol);
    rec.theoretical.emplace_back("K_stated", lc.upper_all.k());
    rec.theoretical.emplace_back("C_stated", lc.upper_all.c());
    return rec;
  }));

  report.checks.push_back(guarded("upper_all_stated", [&] {
    auto rec = sandwich_record("upper_all_stated",
                               "rho_phi <= (b^2 K_L + 1) rho + (b^2 f + bc + c)", pairs, kIdentity,
                               rho_phi, lc.upper_all, Sides::Upper, tol);
    rec.informational = true;
    return rec;
  }));

  report.checks.push_back(guarded("lower", [&] {
    return sandwich_record("lower", "rho / b^3 - (2(bMf + N) + (c(2b+1)+1)/b^2) <= rho_phi",
                           pairs, kIdentity, rho_phi, lc.lower, Sides::Lower, tol);
  }));

  report.checks.push_back(guarded("theorem2", [&] {
    return sandwich_record("theorem2",
                           "rho/K - C <= rho_phi <= K rho + C, K = b^3 max(K_L,1) + 1, "
                           "C = K (3 b^2 f + bc + c)",
                           pairs, kIdentity, rho_phi, thm2, Sides::Both, tol);
  }));

  report.checks.push_back(guarded("theorem2_literal", [&] {
    auto rec = sandwich_record("theorem2_literal",
                               "same sandwich with K = b^3 L + 1 (L = slope bound of the curve)",
                               pairs, kIdentity, rho_phi, thm2_literal, Sides::Both, tol);
    rec.informational = true;
    return rec;
  }));

  report.checks.push_back(guarded("corollary_bc", [&] {
    const BcParams transferred = transfer_bc(ambient, thm2);
    CheckRecord rec;
    rec.name = "corollary_bc";
    rec.statement = "rho_phi(x,z) <= b'(rho_phi(x,y) + rho_phi(y,z)) + c' with (b',c') "
                    "transferred from the ambient constants through (" + fmt_qi(thm2) + ")";
    rec.theoretical = {{"b_prime", transferred.b()}, {"c_prime", transferred.c()}};
    rec.samples_checked = triples.size();
    absorb(rec, verify_bc(rho_phi, transferred, triples, tol));
    if (!triples.empty()) {
      const double grid[] = {1.0, transferred.b()};
      const BcFrontier fr = estimate_bc(rho_phi, triples, grid);
      rec.empirical = {{"c_min_at_b1", fr.c_at(1.0)}, {"c_min_at_b_prime", fr.c_at(transferred.b())}};
    }
    return rec;
  }));

  if (options.extra_qi) {
    report.checks.push_back(guarded("user_qi", [&] {
      return sandwich_record("user_qi", "rho/K - C <= rho_phi <= K rho + C with user constants",
                             pairs, kIdentity, rho_phi, *options.extra_qi, Sides::Both, tol);
    }));
  }

  try {
    std::vector<double> radii;
    radii.reserve(s.points.size());
    for (const auto& p : s.points) radii.push_back(nearest_distance_to_set(space, p).r);
    for (const auto& [i, j] : s.pairs) {
      if (std::abs(euclidean(s.points[i], s.points[j]) - (radii[i] + radii[j])) < 1e-9) {
        ++report.vicinity_boundary_pairs;
      }
    }
  } catch (const std::exception&) {
    // Location failures are already recorded by the checks.
  }

  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

PointTriple ball_anchor_triple(const BallScene& ball) {
  const auto offset = [&ball](double dx, double dy) {
    std::vector<double> c(ball.center().coords().begin(), ball.center().coords().end());
    c[0] += ball.radius() * dx;
    if (c.size() > 1) c[1] += ball.radius() * dy;
    return Point(std::move(c));
  };
  return {offset(-1.1, 0.0), offset(1.1, 0.0), offset(1.1, 10.0)};
}

VerificationReport run_ball_suite(const BallScene& ball, const SampleConfig& config,
                                  const BallSuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const double tol = options.tol;
  VerificationReport report{.scene_summary = describe(ball), .config = config, .tol = tol, .checks = {}};

  const Sample s = sample(config);
  const auto pairs = s.pair_points();
  auto triples = s.triple_points();
  triples.insert(triples.end(), options.anchor_triples.begin(), options.anchor_triples.end());
  const DistanceFunction sigma = ball_metric(ball);

  report.checks.push_back(guarded("semi_metric", [&] {
    CheckRecord rec;
    rec.name = "semi_metric";
    rec.statement = "sigma >= 0, sigma(x,y) = sigma(y,x), sigma(x,x) = 0";
    rec.theoretical = {{"tol", tol}};
    rec.samples_checked = pairs.size();
    double max_asym = 0.0;
    for (const auto& p : pairs) {
      const Point pts[] = {p.x, p.y};
      const auto v = check_semimetric(sigma, pts, tol);
      rec.violations += v.size();
      if (!v.empty() && !rec.worst) rec.worst = Witness{{p.x, p.y}, 0.0, "semi-metric axiom broken"};
      max_asym = std::max(max_asym, std::abs(sigma(p.x, p.y) - sigma(p.y, p.x)));
    }
    rec.empirical = {{"max_asymmetry", max_asym}};
    return rec;
  }));

  report.checks.push_back(guarded("bc_check", [&] {
    CheckRecord rec;
    rec.name = "bc_check";
    rec.statement = "sigma(x,z) <= b(sigma(x,y) + sigma(y,z)) + c";
    rec.theoretical = {{"b", options.bc.b()}, {"c", options.bc.c()}};
    rec.samples_checked = triples.size();
    absorb(rec, verify_bc(sigma, options.bc, triples, tol));
    if (!triples.empty()) {
      const double grid[] = {1.0, options.bc.b()};
      const BcFrontier fr = estimate_bc(sigma, triples, grid);
      rec.empirical = {{"c_min_at_b1", fr.c_at(1.0)}, {"c_min_at_b", fr.c_at(options.bc.b())}};
    }
    return rec;
  }));

  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckRecord run_lemma11_check(const DistanceFunction& d, const PointMap& f,
                              const DistanceFunction& d_image, const BcParams& source,
                              const QiParams& qi, const SampleConfig& config, double tol) {
  return guarded("lemma11_transfer", [&] {
    CheckRecord rec;
    rec.name = "lemma11_transfer";
    const BcParams target = transfer_bc(source, qi);
    rec.statement = "image of a (b,c)-metric under a (" + fmt_qi(qi) +
                    ") quasi-isometry is a (b',c')-metric";
    rec.theoretical = {{"b", source.b()}, {"c", source.c()}, {"K", qi.k()},
                       {"C", qi.c()}, {"b_prime", target.b()}, {"c_prime", target.c()}};

    const Sample s = sample(config);
    const auto pairs = s.pair_points();
    const auto pre = check_qi(f, d, d_image, qi, pairs, tol);
    if (!pre.empty()) {
      rec.status = CheckStatus::Errored;
      rec.error = "precondition failed: map is not a (" + fmt_qi(qi) + ") quasi-isometry at " +
                  to_string(pre.front().x) + ", " + to_string(pre.front().y);
      rec.worst = make_witness(pre.front());
      return rec;
    }

    const auto triples = s.triple_points();
    if (!triples.empty()) {
      // The source inequality must hold on the domain triples for the transfer to apply.
      const auto source_viol = verify_bc(d, source, triples, tol);
      if (!source_viol.empty()) {
        rec.status = CheckStatus::Errored;
        rec.error = "precondition failed: domain triples break the source (b,c) inequality";
        rec.worst = make_witness(source_viol.front());
        return rec;
      }
    }
    std::vector<PointTriple> image;
    image.reserve(triples.size());
    for (const auto& t : triples) image.push_back({f(t.x), f(t.y), f(t.z)});
    rec.samples_checked = image.size();
    absorb(rec, verify_bc(d_image, target, image, tol));
    if (!image.empty()) {
      const double grid[] = {1.0, target.b()};
      const BcFrontier fr = estimate_bc(d_image, image, grid);
      rec.empirical = {{"c_min_at_b1", fr.c_at(1.0)}, {"c_min_at_b_prime", fr.c_at(target.b())}};
    }
    return rec;
  });
}

}  // namespace bcmetric
