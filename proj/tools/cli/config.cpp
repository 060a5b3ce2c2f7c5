#include "cli/config.hpp"

#include <fstream>
#include <sstream>

#include "cli/io.hpp"

namespace thetakit::cli {

using nlohmann::json;

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::Svg: return "svg";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Obj: return "obj";
    case OutputFormat::Report: return "report";
    case OutputFormat::ThetaSvg: return "theta_svg";
  }
  return "?";
}

namespace {

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  return v.get<double>();
}

std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

bool boolean(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw ConfigError(key, "expected true or false");
  return v.get<bool>();
}

int integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  return v.get<int>();
}

Vec2 pair(const json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2) throw ConfigError(key, "expected [x, y]");
  return {number(v[0], key + "[0]"), number(v[1], key + "[1]")};
}

CurveSpec parse_curve(const json& c) {
  if (!c.is_object()) throw ConfigError("curve", "expected an object");
  CurveSpec spec;
  const json* kind = find(c, "kind");
  if (!kind) throw ConfigError("curve.kind", "missing");
  const std::string k = text(*kind, "curve.kind");
  if (k == "parametric") {
    spec.kind = CurveKind::Parametric;
    spec.variable = "t";
  } else if (k == "curvature_s") {
    spec.kind = CurveKind::CurvatureS;
    spec.variable = "s";
  } else if (k == "builtin") {
    spec.kind = CurveKind::Builtin;
  } else {
    throw ConfigError("curve.kind", "must be parametric, curvature_s or builtin");
  }

  for (const auto& [key, value] : c.items()) {
    const std::string where = "curve." + key;
    if (key == "kind") continue;
    if (key == "name") {
      spec.name = text(value, where);
    } else if (key == "params") {
      if (!value.is_object()) throw ConfigError(where, "expected an object");
      for (const auto& [pk, pv] : value.items()) spec.params[pk] = number(pv, where + "." + pk);
    } else if (key == "x") {
      spec.x = text(value, where);
    } else if (key == "y") {
      spec.y = text(value, where);
    } else if (key == "kappa") {
      spec.kappa = text(value, where);
    } else if (key == "variable") {
      spec.variable = text(value, where);
    } else if (key == "domain") {
      const Vec2 d = pair(value, where);
      if (!(d.x < d.y)) throw ConfigError(where, "domain must satisfy a < b");
      spec.domain = Interval{d.x, d.y};
    } else if (key == "base_c") {
      if (!value.is_null()) spec.base_c = number(value, where);
    } else if (key == "start_point") {
      spec.start_point = pair(value, where);
    } else if (key == "start_angle") {
      spec.start_angle = number(value, where);
    } else if (key == "offset") {
      spec.offset = pair(value, where);
    } else {
      throw ConfigError(where, "unknown key");
    }
  }

  switch (spec.kind) {
    case CurveKind::Parametric:
      if (spec.x.empty()) throw ConfigError("curve.x", "missing");
      if (spec.y.empty()) throw ConfigError("curve.y", "missing");
      if (!spec.domain) throw ConfigError("curve.domain", "missing");
      break;
    case CurveKind::CurvatureS:
      if (spec.kappa.empty()) throw ConfigError("curve.kappa", "missing");
      if (!spec.domain) throw ConfigError("curve.domain", "missing");
      break;
    case CurveKind::Builtin:
      if (spec.name.empty()) throw ConfigError("curve.name", "missing");
      break;
  }
  return spec;
}

OutputFormat parse_format(const std::string& s, const std::string& key) {
  if (s == "svg") return OutputFormat::Svg;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "obj") return OutputFormat::Obj;
  if (s == "report") return OutputFormat::Report;
  if (s == "theta_svg") return OutputFormat::ThetaSvg;
  throw ConfigError(key, "unknown format '" + s + "'");
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "expected a JSON object");
  RunConfig cfg;
  bool have_curve = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "title") {
      cfg.title = text(value, key);
    } else if (key == "curve") {
      cfg.curve = parse_curve(value);
      have_curve = true;
    } else if (key == "theta_step") {
      cfg.theta_step = number(value, key);
    } else if (key == "markers") {
      if (!value.is_object()) throw ConfigError(key, "expected an object");
      for (const auto& [mk, mv] : value.items()) {
        if (mk == "radius") {
          if (!mv.is_null()) cfg.marker_radius = number(mv, "markers.radius");
        } else if (mk == "highlight_vertices") {
          cfg.highlight_vertices = boolean(mv, "markers.highlight_vertices");
        } else {
          throw ConfigError("markers." + mk, "unknown key");
        }
      }
    } else if (key == "surface") {
      if (!value.is_object()) throw ConfigError(key, "expected an object");
      for (const auto& [sk, sv] : value.items()) {
        const std::string where = "surface." + sk;
        if (sk == "enabled") {
          cfg.surface.enabled = boolean(sv, where);
        } else if (sk == "u_count") {
          cfg.surface.u_count = integer(sv, where);
        } else if (sk == "include_faces") {
          cfg.surface.include_faces = boolean(sv, where);
        } else if (sk == "flip_orientation") {
          cfg.surface.flip_orientation = boolean(sv, where);
        } else {
          throw ConfigError(where, "unknown key");
        }
      }
    } else if (key == "tolerances") {
      if (!value.is_object()) throw ConfigError(key, "expected an object");
      for (const auto& [tk, tv] : value.items()) {
        const std::string where = "tolerances." + tk;
        if (tk == "quad_tol") {
          cfg.tolerances.quad_tol = number(tv, where);
        } else if (tk == "root_tol") {
          cfg.tolerances.root_tol = number(tv, where);
        } else if (tk == "grid_n") {
          cfg.tolerances.grid_n = integer(tv, where);
        } else if (tk == "max_depth") {
          cfg.tolerances.max_depth = integer(tv, where);
        } else {
          throw ConfigError(where, "unknown key");
        }
      }
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ConfigError(key, "expected a non-negative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "samples") {
      cfg.samples = integer(value, key);
    } else if (key == "outputs") {
      if (!value.is_array()) throw ConfigError(key, "expected an array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string where = "outputs[" + std::to_string(i) + "]";
        const json& o = value[i];
        if (!o.is_object()) throw ConfigError(where, "expected an object");
        OutputSpec out;
        const json* fmt = find(o, "format");
        const json* path = find(o, "path");
        if (!fmt) throw ConfigError(where + ".format", "missing");
        if (!path) throw ConfigError(where + ".path", "missing");
        out.format = parse_format(text(*fmt, where + ".format"), where + ".format");
        out.path = text(*path, where + ".path");
        if (out.path.empty()) throw ConfigError(where + ".path", "empty");
        if (const json* seg = find(o, "segment")) out.segment = integer(*seg, where + ".segment");
        cfg.outputs.push_back(std::move(out));
      }
    } else {
      throw ConfigError(key, "unknown key");
    }
  }

  if (!have_curve) throw ConfigError("curve", "missing");
  if (!(cfg.theta_step > 0.0)) throw ConfigError("theta_step", "must be positive");
  if (cfg.outputs.empty()) throw ConfigError("outputs", "at least one output is required");
  if (cfg.surface.u_count < 3) throw ConfigError("surface.u_count", "must be at least 3");
  if (cfg.samples < 1) throw ConfigError("samples", "must be positive");
  try {
    cfg.tolerances.validate();
  } catch (const std::exception& e) {
    throw ConfigError("tolerances", e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("<json>", e.what());
  }
  return parse_config(doc);
}

}  // namespace thetakit::cli
