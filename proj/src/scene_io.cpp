#include "bcmetric/scene_io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <set>
#include <sstream>

namespace bcmetric {

using json = nlohmann::ordered_json;

SceneFormatError::SceneFormatError(std::string field, const std::string& message)
    : ArgumentError("scene field '" + field + "': " + message), field_(std::move(field)) {}

namespace {

void reject_unknown(const json& obj, const std::string& path, std::set<std::string> allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) {
      throw SceneFormatError(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  const std::string field = path.empty() ? key : path + "." + key;
  if (!obj.contains(key)) throw SceneFormatError(field, "missing");
  return obj.at(key);
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw SceneFormatError(field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SceneFormatError(field, "must be finite");
  return d;
}

double number_or(const json& obj, const std::string& key, const std::string& path, double fallback) {
  if (!obj.contains(key)) return fallback;
  return number(obj.at(key), path + "." + key);
}

std::vector<double> numbers(const json& v, const std::string& field) {
  if (!v.is_array()) throw SceneFormatError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::pair<double, double> interval(const json& v, const std::string& field) {
  const auto vals = numbers(v, field);
  if (vals.size() != 2) throw SceneFormatError(field, "expected [lo, hi]");
  if (!(vals[0] < vals[1])) throw SceneFormatError(field, "expected lo < hi");
  return {vals[0], vals[1]};
}

Curve parse_curve(const json& obj, double x_lo, double x_hi) {
  if (!obj.is_object()) throw SceneFormatError("curve", "expected an object");
  reject_unknown(obj, "curve",
                 {"kind", "amplitude", "frequency", "phase", "offset", "level", "coefficients"});
  const json& kind = require(obj, "kind", "curve");
  if (!kind.is_string()) throw SceneFormatError("curve.kind", "expected a string");
  const auto name = kind.get<std::string>();
  if (name == "constant") {
    return Curve(ConstantCurve{number_or(obj, "level", "curve", 0.0)});
  }
  if (name == "sinusoid") {
    return Curve(SinusoidCurve{number_or(obj, "amplitude", "curve", 1.0),
                               number_or(obj, "frequency", "curve", 1.0),
                               number_or(obj, "phase", "curve", 0.0),
                               number_or(obj, "offset", "curve", 0.0)});
  }
  if (name == "polynomial") {
    auto coeffs = numbers(require(obj, "coefficients", "curve"), "curve.coefficients");
    if (coeffs.empty()) throw SceneFormatError("curve.coefficients", "must not be empty");
    return Curve(PolynomialCurve{std::move(coeffs), x_lo, x_hi});
  }
  throw SceneFormatError("curve.kind", "expected constant, sinusoid or polynomial, got '" + name + "'");
}

Scene parse_strip(const json& doc) {
  reject_unknown(doc, "", {"type", "curve", "half_width_below", "half_width_above", "domain"});
  const json& domain = require(doc, "domain", "");
  if (!domain.is_object()) throw SceneFormatError("domain", "expected an object");
  reject_unknown(domain, "domain", {"x", "y"});
  const auto [x_lo, x_hi] = interval(require(domain, "x", "domain"), "domain.x");
  const auto [y_lo, y_hi] = interval(require(domain, "y", "domain"), "domain.y");

  Curve curve = parse_curve(require(doc, "curve", ""), x_lo, x_hi);
  const double below = number(require(doc, "half_width_below", ""), "half_width_below");
  const double above = number(require(doc, "half_width_above", ""), "half_width_above");
  if (!(below > 0.0)) throw SceneFormatError("half_width_below", "must be positive");
  if (!(above > 0.0)) throw SceneFormatError("half_width_above", "must be positive");
  return StripScene(std::move(curve), below, above, Box({x_lo, y_lo}, {x_hi, y_hi}));
}

Scene parse_ball(const json& doc) {
  reject_unknown(doc, "", {"type", "dim", "center", "radius", "domain"});
  const json& dim_v = require(doc, "dim", "");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() < 1) {
    throw SceneFormatError("dim", "expected a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_v.get<long long>());
  auto center = numbers(require(doc, "center", ""), "center");
  if (center.size() != dim) throw SceneFormatError("center", "expected " + std::to_string(dim) + " coordinates");
  const double radius = number(require(doc, "radius", ""), "radius");
  if (!(radius > 0.0)) throw SceneFormatError("radius", "must be positive");

  const json& domain = require(doc, "domain", "");
  if (!domain.is_object()) throw SceneFormatError("domain", "expected an object");
  reject_unknown(domain, "domain", {"lo", "hi"});
  auto lo = numbers(require(domain, "lo", "domain"), "domain.lo");
  auto hi = numbers(require(domain, "hi", "domain"), "domain.hi");
  if (lo.size() != dim) throw SceneFormatError("domain.lo", "expected " + std::to_string(dim) + " bounds");
  if (hi.size() != dim) throw SceneFormatError("domain.hi", "expected " + std::to_string(dim) + " bounds");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(lo[i] < hi[i])) throw SceneFormatError("domain", "expected lo < hi on every axis");
  }
  return BallScene(Point(std::move(center)), radius, Box(std::move(lo), std::move(hi)));
}

json curve_json(const Curve& curve) {
  json out;
  out["kind"] = curve.kind_name();
  if (const auto* c = std::get_if<ConstantCurve>(&curve.spec())) {
    out["level"] = c->level;
  } else if (const auto* s = std::get_if<SinusoidCurve>(&curve.spec())) {
    out["amplitude"] = s->amplitude;
    out["frequency"] = s->frequency;
    out["phase"] = s->phase;
    out["offset"] = s->offset;
  } else if (const auto* p = std::get_if<PolynomialCurve>(&curve.spec())) {
    out["coefficients"] = p->coefficients;
  }
  return out;
}

Box square(double half) { return Box({-half, -half}, {half, half}); }

}  // namespace

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneFormatError("<document>", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SceneFormatError("<document>", "expected an object");
  const json& type = require(doc, "type", "");
  if (!type.is_string()) throw SceneFormatError("type", "expected a string");
  const auto name = type.get<std::string>();
  if (name == "strip2d") return parse_strip(doc);
  if (name == "ball") return parse_ball(doc);
  throw SceneFormatError("type", "expected strip2d or ball, got '" + name + "'");
}

std::string scene_to_json(const Scene& scene) {
  json doc;
  if (const auto* strip = std::get_if<StripScene>(&scene)) {
    doc["type"] = "strip2d";
    doc["curve"] = curve_json(strip->center());
    doc["half_width_below"] = strip->half_width_below();
    doc["half_width_above"] = strip->half_width_above();
    const Box& box = strip->domain();
    doc["domain"] = {{"x", {box.lo()[0], box.hi()[0]}}, {"y", {box.lo()[1], box.hi()[1]}}};
  } else {
    const auto& ball = std::get<BallScene>(scene);
    doc["type"] = "ball";
    doc["dim"] = ball.dim();
    doc["center"] = std::vector<double>(ball.center().coords().begin(), ball.center().coords().end());
    doc["radius"] = ball.radius();
    doc["domain"] = {{"lo", ball.domain().lo()}, {"hi", ball.domain().hi()}};
  }
  return doc.dump(2) + "\n";
}

std::vector<std::string> builtin_scene_names() {
  return {"sine_strip", "flat_strip", "cos2x_strip", "unit_ball"};
}

std::optional<Scene> builtin_scene(const std::string& name) {
  if (name == "sine_strip") {
    return StripScene(Curve(SinusoidCurve{1.0, 1.0, 0.0, 0.0}), 1.0, 1.0, square(30.0));
  }
  if (name == "flat_strip") {
    return StripScene(Curve(ConstantCurve{0.0}), 1.0, 1.0, square(30.0));
  }
  if (name == "cos2x_strip") {
    // cos(2t) = sin(2t + pi/2)
    return StripScene(Curve(SinusoidCurve{1.0, 2.0, std::numbers::pi / 2.0, 0.0}), 1.0, 1.0,
                      square(30.0));
  }
  if (name == "unit_ball" || name == "ball") {
    return BallScene(Point{0.0, 0.0}, 1.0, square(10.0));
  }
  return std::nullopt;
}

Scene load_scene(const std::string& name_or_path) {
  if (auto builtin = builtin_scene(name_or_path)) return std::move(*builtin);
  std::ifstream in(name_or_path);
  if (!in) throw SceneIoError("cannot read scene file '" + name_or_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

}  // namespace bcmetric
