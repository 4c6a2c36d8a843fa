#include "bcmetric/report_io.hpp"

#include <cmath>
#include <cstdlib>
#include <json.hpp>

namespace bcmetric {

using json = nlohmann::ordered_json;

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_real(v).c_str(), nullptr);
}

std::string status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Errored:
      return "errored";
  }
  return "unknown";
}

namespace {

json point_json(const Point& p) {
  json arr = json::array();
  for (double c : p.coords()) arr.push_back(round12(c));
  return arr;
}

json values_json(const NamedValues& values) {
  json obj = json::object();
  for (const auto& [k, v] : values) {
    obj[k] = std::isfinite(v) ? json(round12(v)) : json(nullptr);
  }
  return obj;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  json box_lo = json::array();
  json box_hi = json::array();
  for (double v : report.config.box.lo()) box_lo.push_back(round12(v));
  for (double v : report.config.box.hi()) box_hi.push_back(round12(v));

  json doc;
  doc["scene"] = report.scene_summary;
  doc["sample"] = {{"seed", report.config.seed},
                   {"n_points", report.config.n_points},
                   {"n_pairs", report.config.n_pairs},
                   {"n_triples", report.config.n_triples},
                   {"box", {{"lo", box_lo}, {"hi", box_hi}}}};
  doc["tol"] = round12(report.tol);
  doc["passed"] = report.passed();
  doc["vicinity_boundary_pairs"] = report.vicinity_boundary_pairs;

  json checks = json::array();
  for (const auto& c : report.checks) {
    json rec;
    rec["name"] = c.name;
    rec["status"] = status_name(c.status);
    rec["informational"] = c.informational;
    rec["statement"] = c.statement;
    rec["theoretical"] = values_json(c.theoretical);
    rec["empirical"] = values_json(c.empirical);
    rec["samples_checked"] = c.samples_checked;
    rec["violations"] = c.violations;
    if (c.worst) {
      json pts = json::array();
      for (const auto& p : c.worst->points) pts.push_back(point_json(p));
      rec["worst"] = {{"points", pts},
                      {"excess", round12(c.worst->excess)},
                      {"detail", c.worst->detail}};
    } else {
      rec["worst"] = nullptr;
    }
    if (!c.error.empty()) rec["error"] = c.error;
    checks.push_back(std::move(rec));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

void write_report_text(std::ostream& out, const VerificationReport& report) {
  out << "scene: " << report.scene_summary << "\n";
  out << "sample: seed " << report.config.seed << ", " << report.config.n_points << " points, "
      << report.config.n_pairs << " pairs, " << report.config.n_triples << " triples, tol "
      << format_real(report.tol) << "\n";
  for (const auto& c : report.checks) {
    out << "  [" << status_name(c.status) << (c.informational ? ", info" : "") << "] " << c.name
        << ": " << c.violations << "/" << c.samples_checked << " violations";
    for (const auto& [k, v] : c.theoretical) out << "  " << k << "=" << format_real(v);
    if (!c.empirical.empty()) out << "  |";
    for (const auto& [k, v] : c.empirical) out << "  " << k << "=" << format_real(v);
    out << "\n";
    if (c.worst) {
      out << "      worst:";
      for (const auto& p : c.worst->points) out << " " << to_string(p);
      out << " excess " << format_real(c.worst->excess) << " (" << c.worst->detail << ")\n";
    }
    if (!c.error.empty()) out << "      error: " << c.error << "\n";
  }
  if (report.vicinity_boundary_pairs > 0) {
    out << "  pairs on the vicinity boundary: " << report.vicinity_boundary_pairs << "\n";
  }
  out << (report.passed() ? "PASS" : "FAIL") << " (" << format_real(report.wall_time_s) << " s)\n";
}

}  // namespace bcmetric
