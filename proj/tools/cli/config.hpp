#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetakit/numerics.hpp"
#include "thetakit/synthesis.hpp"
#include "thetakit/vec.hpp"

namespace thetakit::cli {

enum class CurveKind { Parametric, CurvatureS, Builtin };

struct CurveSpec {
  CurveKind kind = CurveKind::Builtin;
  std::string name;      // builtin
  BuiltinParams params;  // builtin
  std::string x;         // parametric
  std::string y;         // parametric
  std::string kappa;     // curvature_s
  std::string variable;  // parametric: "t", curvature_s: "s" by default
  std::optional<Interval> domain;
  std::optional<double> base_c;
  Vec2 start_point;
  double start_angle = 0.0;
  Vec2 offset;
};

struct SurfaceSpec {
  bool enabled = false;
  int u_count = 64;
  bool include_faces = false;
  bool flip_orientation = false;
};

enum class OutputFormat { Svg, Csv, Obj, Report, ThetaSvg };

struct OutputSpec {
  OutputFormat format = OutputFormat::Svg;
  std::string path;
  std::optional<int> segment;  // theta_svg: which profile segment to plot
};

struct RunConfig {
  std::string title;
  CurveSpec curve;
  double theta_step = 0.1;
  std::optional<double> marker_radius;
  bool highlight_vertices = false;
  SurfaceSpec surface;
  ToleranceConfig tolerances;
  std::uint64_t seed = 42;
  int samples = 50;
  std::vector<OutputSpec> outputs;
};

/// Raised for malformed configuration; `key` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

std::string_view to_string(OutputFormat f) noexcept;

}  // namespace thetakit::cli
