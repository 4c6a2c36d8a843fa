#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcmetric/ball.hpp"
#include "bcmetric/collapse.hpp"
#include "bcmetric/constants.hpp"
#include "bcmetric/harness.hpp"
#include "bcmetric/report_io.hpp"
#include "bcmetric/scene_io.hpp"

namespace bcmetric::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string scene;
  std::uint64_t seed = 42;
  std::size_t points = 2000;
  std::size_t pairs = 10000;
  std::size_t triples = 10000;
  std::string out;
  std::optional<double> tol;
  std::string bc;
  std::string qi;
};

std::vector<double> parse_reals(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError(flag + ": '" + item + "' is not a real number");
    }
    values.push_back(v);
  }
  if (values.empty()) throw UsageError(flag + ": expected comma-separated reals");
  return values;
}

std::pair<double, double> parse_two(const std::string& text, const std::string& flag) {
  const auto v = parse_reals(text, flag);
  if (v.size() != 2) throw UsageError(flag + " takes two values, got " + std::to_string(v.size()));
  return {v[0], v[1]};
}

std::optional<BcParams> bc_flag(const Common& c) {
  if (c.bc.empty()) return std::nullopt;
  const auto [b, cc] = parse_two(c.bc, "--bc");
  return BcParams(b, cc);
}

std::optional<QiParams> qi_flag(const Common& c) {
  if (c.qi.empty()) return std::nullopt;
  const auto [k, cc] = parse_two(c.qi, "--qi");
  return QiParams(k, cc);
}

const Box& scene_box(const Scene& scene) {
  return std::visit([](const auto& s) -> const Box& { return s.domain(); }, scene);
}

SampleConfig sample_config(const Common& c, const Scene& scene) {
  return SampleConfig{
      .seed = c.seed, .n_points = c.points, .n_pairs = c.pairs, .n_triples = c.triples,
      .box = scene_box(scene)};
}

Point parse_point(const std::string& text, const std::string& flag, std::size_t dim) {
  auto v = parse_reals(text, flag);
  if (v.size() != dim) {
    throw UsageError(flag + " has " + std::to_string(v.size()) + " coordinates, scene dimension is " +
                     std::to_string(dim));
  }
  return Point(std::move(v));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SceneIoError("cannot open " + path + " for writing");
  f << content;
  if (!f) throw SceneIoError("write to " + path + " failed");
}

std::string fmt(double v) { return format_real(v); }

CollapsedSpace strip_space(const StripScene& strip, const Common& c) {
  return CollapsedSpace(strip, bc_flag(c).value_or(BcParams(1.0, 0.0)));
}

int cmd_verify(const Common& c, std::ostream& out) {
  const Scene scene = load_scene(c.scene);
  const SampleConfig config = sample_config(c, scene);
  VerificationReport report;
  if (const auto* strip = std::get_if<StripScene>(&scene)) {
    SuiteOptions opts;
    opts.tol = c.tol.value_or(kNumericTol);
    opts.extra_qi = qi_flag(c);
    report = run_suite(strip_space(*strip, c), config, opts);
  } else {
    const auto& ball = std::get<BallScene>(scene);
    if (!c.qi.empty()) throw UsageError("--qi applies to strip scenes only");
    BallSuiteOptions opts;
    if (auto bc = bc_flag(c)) opts.bc = *bc;
    opts.tol = c.tol.value_or(kClosedFormTol);
    opts.anchor_triples = {ball_anchor_triple(ball)};
    report = run_ball_suite(ball, config, opts);
  }
  write_report_text(out, report);
  if (!c.out.empty()) write_file(c.out, report_to_json(report));
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_estimate(const Common& c, const std::vector<double>& k_grid,
                 const std::vector<double>& b_grid, std::ostream& out) {
  const Scene scene = load_scene(c.scene);
  const Sample s = sample(sample_config(c, scene));
  const auto triples = s.triple_points();

  json doc;
  doc["seed"] = c.seed;
  DistanceFunction d;
  if (const auto* strip = std::get_if<StripScene>(&scene)) {
    const CollapsedSpace space = strip_space(*strip, c);
    d = cached_collapsed_metric(space);
    doc["scene"] = describe(*strip);

    std::vector<PairSample> samples;
    for (const auto& p : s.pair_points()) {
      if (p.x == p.y) continue;
      samples.push_back({euclidean(p.x, p.y), d(p.x, p.y)});
    }
    const QiEstimate qi = estimate_qi(samples, k_grid);
    const QiParams thm = theorem2_constants(space.ambient(), space);
    out << "quasi-isometry frontier (identity into rho_phi), " << samples.size() << " pairs\n";
    json frontier = json::array();
    for (const auto& e : qi.frontier) {
      out << "  K = " << fmt(e.k) << "  C_min = " << fmt(e.c) << "\n";
      frontier.push_back({{"k", round12(e.k)}, {"c", round12(e.c)}});
    }
    out << "  theoretical K = " << fmt(thm.k()) << "  C = " << fmt(thm.c()) << "\n";
    doc["qi_frontier"] = frontier;
    doc["theorem2"] = {{"k", round12(thm.k())}, {"c", round12(thm.c())}};

    std::vector<double> ts;
    ts.reserve(std::min<std::size_t>(s.points.size(), 200));
    for (std::size_t i = 0; i < s.points.size() && ts.size() < 200; ++i) ts.push_back(s.points[i][0]);
    if (ts.size() >= 2) {
      const LipschitzEstimate lip = lipschitz_estimates(space, ts);
      out << "slope bound L = " << fmt(space.curve_lipschitz()) << " (empirical " << fmt(lip.l_emp)
          << "), K_L = " << fmt(space.k_l()) << " (empirical " << fmt(lip.k_l_emp) << ")\n";
      doc["lipschitz"] = {{"l", round12(space.curve_lipschitz())},
                          {"l_emp", round12(lip.l_emp)},
                          {"k_l", round12(space.k_l())},
                          {"k_l_emp", round12(lip.k_l_emp)}};
    }
  } else {
    const auto& ball = std::get<BallScene>(scene);
    d = ball_metric(ball);
    doc["scene"] = describe(ball);
  }

  const BcFrontier bc = estimate_bc(d, triples, b_grid);
  out << "(b, c) frontier, " << triples.size() << " triples\n";
  json bc_json = json::array();
  for (const auto& e : bc.entries) {
    out << "  b = " << fmt(e.b) << "  c_min = " << fmt(e.c_min) << "\n";
    bc_json.push_back({{"b", round12(e.b)}, {"c_min", round12(e.c_min)}});
  }
  doc["bc_frontier"] = bc_json;
  if (!c.out.empty()) write_file(c.out, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_dist(const Common& c, const std::string& xs, const std::string& ys, std::ostream& out) {
  const Scene scene = load_scene(c.scene);
  const std::size_t dim = scene_box(scene).dim();
  const Point x = parse_point(xs, "--x", dim);
  const Point y = parse_point(ys, "--y", dim);
  if (const auto* strip = std::get_if<StripScene>(&scene)) {
    const auto b = collapsed_distance(strip_space(*strip, c), x, y);
    out << "rho         " << fmt(b.rho) << "\n"
        << "r_x         " << fmt(b.r_x) << "\n"
        << "r_y         " << fmt(b.r_y) << "\n"
        << "in_vicinity " << (b.in_vicinity ? "yes" : "no") << "\n"
        << "x'          " << to_string(b.x_prime) << "\n"
        << "y'          " << to_string(b.y_prime) << "\n";
    if (b.rho_p) out << "rho_p       " << fmt(*b.rho_p) << "\n";
    out << "rho_phi     " << fmt(b.rho_phi) << "\n";
  } else {
    const auto& ball = std::get<BallScene>(scene);
    const double chord = x == y ? 0.0 : chord_length(ball, x, y);
    out << "rho         " << fmt(euclidean(x, y)) << "\n"
        << "chord       " << fmt(chord) << "\n"
        << "sigma       " << fmt(ball_sigma(ball, x, y)) << "\n";
  }
  return kExitOk;
}

int cmd_plot_data(const Common& c, std::ostream& out) {
  const Scene scene = load_scene(c.scene);
  const Sample s = sample(sample_config(c, scene));
  std::string csv = "rho,rho_phi,in_vicinity,r_x,r_y\n";
  const auto row = [&csv](double rho, double rho_phi, bool vicinity, double r_x, double r_y) {
    csv += fmt(rho) + "," + fmt(rho_phi) + "," + (vicinity ? "1" : "0") + "," + fmt(r_x) + "," +
           fmt(r_y) + "\n";
  };

  std::optional<QiParams> sandwich;
  if (const auto* strip = std::get_if<StripScene>(&scene)) {
    const CollapsedSpace space = strip_space(*strip, c);
    std::vector<LocatedPoint> located;
    located.reserve(s.points.size());
    for (const auto& p : s.points) located.push_back(locate(space, p));
    for (const auto& [i, j] : s.pairs) {
      const auto b = collapsed_distance(space, located[i], located[j]);
      row(b.rho, b.rho_phi, b.in_vicinity, b.r_x, b.r_y);
    }
    sandwich = theorem2_constants(space.ambient(), space);
  } else {
    const auto& ball = std::get<BallScene>(scene);
    for (const auto& [i, j] : s.pairs) {
      const Point& x = s.points[i];
      const Point& y = s.points[j];
      const double chord = x == y ? 0.0 : chord_length(ball, x, y);
      row(euclidean(x, y), ball_sigma(ball, x, y), chord > 0.0,
          nearest_distance_to_set(ball, x).r, nearest_distance_to_set(ball, y).r);
    }
  }

  if (c.out.empty()) {
    out << csv;
    return kExitOk;
  }
  write_file(c.out, csv);
  out << "wrote " << s.pairs.size() << " rows to " << c.out << "\n";
  if (sandwich) {
    out << "sandwich: rho/" << fmt(sandwich->k()) << " - " << fmt(sandwich->c())
        << " <= rho_phi <= " << fmt(sandwich->k()) << " rho + " << fmt(sandwich->c()) << "\n";
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Common& c, bool sampling) {
  sub->add_option("--scene", c.scene, "scene file or builtin name")->required();
  sub->add_option("--bc", c.bc, "b,c: ambient constants (strip) or tested constants (ball)");
  if (!sampling) return;
  sub->add_option("--seed", c.seed, "sampling seed");
  sub->add_option("--points", c.points, "point pool size");
  sub->add_option("--pairs", c.pairs, "sampled pairs");
  sub->add_option("--triples", c.triples, "sampled triples");
  sub->add_option("--out", c.out, "machine output path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bcmetric: collapsed-distance toolkit"};
  app.require_subcommand(1);

  Common verify_opts, estimate_opts, dist_opts, plot_opts;
  double tol = 0.0;

  auto* verify = app.add_subcommand("verify", "run the verification suite on a scene");
  add_common(verify, verify_opts, true);
  verify->add_option("--tol", tol, "numeric slack");
  verify->add_option("--qi", verify_opts.qi, "K,C: extra sandwich constants to check");

  std::string k_grid = "1,1.25,1.5,2,3,4,6,8";
  std::string b_grid = "1,1.5,2,4";
  auto* estimate = app.add_subcommand("estimate", "empirical constants on a seeded sample");
  add_common(estimate, estimate_opts, true);
  estimate->add_option("--k-grid", k_grid, "multiplicative constants to probe");
  estimate->add_option("--b-grid", b_grid, "b values to probe");

  std::string xs, ys;
  auto* dist = app.add_subcommand("dist", "collapsed distance between two points");
  add_common(dist, dist_opts, false);
  dist->add_option("--x", xs, "comma-separated coordinates")->required();
  dist->add_option("--y", ys, "comma-separated coordinates")->required();

  auto* plot = app.add_subcommand("plot-data", "CSV of rho against rho_phi on sampled pairs");
  add_common(plot, plot_opts, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (verify->count("--tol") > 0) verify_opts.tol = tol;
      return cmd_verify(verify_opts, out);
    }
    if (estimate->parsed()) {
      return cmd_estimate(estimate_opts, parse_reals(k_grid, "--k-grid"),
                          parse_reals(b_grid, "--b-grid"), out);
    }
    if (dist->parsed()) return cmd_dist(dist_opts, xs, ys, out);
    return cmd_plot_data(plot_opts, out);
  } catch (const SceneFormatError& e) {
    err << "error: scene field '" << e.field() << "': " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace bcmetric::cli
