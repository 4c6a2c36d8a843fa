#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bcmetric/errors.hpp"
#include "bcmetric/scene.hpp"

namespace bcmetric {

using Scene = std::variant<StripScene, BallScene>;

/// Malformed scene document. `field` is the dotted path of the offending field.
class SceneFormatError : public ArgumentError {
 public:
  SceneFormatError(std::string field, const std::string& message);
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Unreadable scene file.
class SceneIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a JSON scene document:
///
///   {"type": "strip2d",
///    "curve": {"kind": "constant" | "sinusoid" | "polynomial",
///              "level", "amplitude", "frequency", "phase", "offset", "coefficients"},
///    "half_width_below": 1, "half_width_above": 1,
///    "domain": {"x": [lo, hi], "y": [lo, hi]}}
///
///   {"type": "ball", "dim": 2, "center": [0, 0], "radius": 1,
///    "domain": {"lo": [...], "hi": [...]}}
///
/// Polynomials are clipped to the domain's x range. Unknown keys are rejected.
Scene parse_scene(const std::string& text);

/// Serializes a scene in the format parse_scene reads.
std::string scene_to_json(const Scene& scene);

/// sine_strip, flat_strip, cos2x_strip, unit_ball (alias: ball).
std::optional<Scene> builtin_scene(const std::string& name);
std::vector<std::string> builtin_scene_names();

/// A builtin name, or else a path to a scene file.
Scene load_scene(const std::string& name_or_path);

}  // namespace bcmetric
