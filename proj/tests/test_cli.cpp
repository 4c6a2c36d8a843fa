#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcmetric/constants.hpp"
#include "bcmetric/scene_io.hpp"
#include "cli.hpp"

using namespace bcmetric;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bcmetric_cli_" + name);
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> r;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--scene", "missing.file"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--scene", "sine_strip", "--bc", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}

TEST(Cli, MalformedSceneNamesField) {
  const auto path = temp_path("bad_scene.json");
  std::ofstream(path) << R"({"type": "strip2d", "curve": {"kind": "wave"},
    "half_width_below": 1, "half_width_above": 1, "domain": {"x": [0, 1], "y": [0, 1]}})";
  const Result r = run_cli({"verify", "--scene", path.string()});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("curve.kind"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, VerifyBallExitCodes) {
  EXPECT_EQ(run_cli({"verify", "--scene", "ball"}).code, cli::kExitOk);
  const Result r = run_cli({"verify", "--scene", "ball", "--bc", "1,0"});
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  EXPECT_NE(r.out.find("bc_check"), std::string::npos);
}

TEST(Cli, VerifyFlatStripWritesReport) {
  const auto path = temp_path("flat.json");
  const Result r = run_cli({"verify", "--scene", "flat_strip", "--pairs", "500", "--triples",
                            "500", "--points", "200", "--out", path.string()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out << r.err;
  const std::string first = read_file(path);
  EXPECT_NE(first.find("\"passed\": true"), std::string::npos);
  run_cli({"verify", "--scene", "flat_strip", "--pairs", "500", "--triples", "500", "--points",
           "200", "--out", path.string()});
  EXPECT_EQ(read_file(path), first);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyUserConstants) {
  const Result r = run_cli({"verify", "--scene", "flat_strip", "--pairs", "300", "--triples", "300",
                            "--points", "100", "--qi", "1,0"});
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  EXPECT_EQ(run_cli({"verify", "--scene", "ball", "--qi", "1,0"}).code, cli::kExitUsage);
}

TEST(Cli, DistFlatStrip) {
  const Result r = run_cli({"dist", "--scene", "flat_strip", "--x", "0,5", "--y", "9,5"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("rho_phi     17\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("in_vicinity yes"), std::string::npos);
  const Result same = run_cli({"dist", "--scene", "sine_strip", "--x", "1,4", "--y", "1,4"});
  EXPECT_NE(same.out.find("rho_phi     0\n"), std::string::npos) << same.out;
  EXPECT_EQ(same.out.find("rho_p "), std::string::npos);
}

TEST(Cli, DistBall) {
  const Result r = run_cli({"dist", "--scene", "ball", "--x=-1.1,0", "--y=1.1,0"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("sigma       0.2\n"), std::string::npos) << r.out;
}

TEST(Cli, DistErrors) {
  EXPECT_EQ(run_cli({"dist", "--scene", "ball", "--x", "1,2,3", "--y", "0,0"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run_cli({"dist", "--scene", "ball", "--x", "a,b", "--y", "0,0"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run_cli({"dist", "--scene", "sine_strip", "--x", "100,0", "--y", "0,0"}).code,
            cli::kExitUsage);
}

TEST(Cli, PlotDataRowsAndBranches) {
  const auto path = temp_path("plot.csv");
  const Result r = run_cli({"plot-data", "--scene", "sine_strip", "--pairs", "1000", "--out",
                            path.string()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const std::string text = read_file(path);
  EXPECT_EQ(text.substr(0, text.find('\n')), "rho,rho_phi,in_vicinity,r_x,r_y");
  const auto rows = csv_rows(text);
  ASSERT_EQ(rows.size(), 1000u);
  const auto& sine = std::get<StripScene>(*builtin_scene("sine_strip"));
  const QiParams thm = theorem2_constants(BcParams(1.0, 0.0), CollapsedSpace(sine));
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 5u);
    if (row[2] == 0.0) EXPECT_EQ(row[0], row[1]);
    EXPECT_LE(row[1], thm.k() * row[0] + thm.c() + 1e-6);
  }
  std::filesystem::remove(path);
}

TEST(Cli, PlotDataToStdoutIsDeterministic) {
  const Result a = run_cli({"plot-data", "--scene", "ball", "--pairs", "50"});
  const Result b = run_cli({"plot-data", "--scene", "ball", "--pairs", "50"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(csv_rows(a.out).size(), 50u);
}

TEST(Cli, PlotDataUnwritableOutput) {
  EXPECT_EQ(run_cli({"plot-data", "--scene", "ball", "--pairs", "5", "--out",
                     "/nonexistent/dir/out.csv"})
                .code,
            cli::kExitUsage);
}

TEST(Cli, Estimate) {
  const auto path = temp_path("estimate.json");
  const Result r = run_cli({"estimate", "--scene", "flat_strip", "--pairs", "400", "--triples",
                            "400", "--points", "150", "--out", path.string()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(read_file(path).find("qi_frontier"), std::string::npos);
  const Result ball = run_cli({"estimate", "--scene", "ball", "--b-grid", "1,2"});
  EXPECT_EQ(ball.code, cli::kExitOk);
  EXPECT_NE(ball.out.find("b = 2  c_min = 0"), std::string::npos) << ball.out;
  std::filesystem::remove(path);
}
