#include "cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "cli/gallery.hpp"
#include "cli/io.hpp"
#include "thetakit/curve_models.hpp"
#include "thetakit/error.hpp"
#include "thetakit/expr.hpp"
#include "thetakit/render.hpp"
#include "thetakit/synthesis.hpp"

namespace thetakit::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kResidualTol = 1e-6;
constexpr double kFdStep = 1e-4;
constexpr int kThetaPlotSamples = 512;

// Portable uniform [0, 1): the top 53 bits of the engine output.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Interior theta: the central 80% of the range, away from the 1/kappa blow-up.
double interior_theta(const Interval& range, double u) {
  const double w = range.length();
  return range.lo + 0.1 * w + 0.8 * w * u;
}

std::vector<MarkerSet> markers_for(const std::vector<CurveSegment>& segments, double step) {
  std::vector<MarkerSet> out;
  bool any = false;
  for (const CurveSegment& seg : segments) {
    try {
      out.push_back(equal_theta_markers(seg, step));
      any = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StepTooLarge) throw;
      out.push_back(MarkerSet{step, {}});
    }
  }
  if (!any) throw Error(ErrorCode::StepTooLarge, "no segment admits a marker at this theta step");
  return out;
}

std::string resolve(const std::string& out_dir, const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute() || out_dir.empty()) return path;
  return (std::filesystem::path(out_dir) / p).string();
}

ordered_json station_list(const std::vector<FeatureStation>& stations) {
  ordered_json arr = ordered_json::array();
  for (const FeatureStation& st : stations) {
    ordered_json causes = ordered_json::array();
    for (FeatureCause c : st.causes) causes.push_back(std::string(to_string(c)));
    arr.push_back({{"s", st.s}, {"causes", causes}});
  }
  return arr;
}

}  // namespace

PlaneCurve build_curve(const RunConfig& cfg) {
  const CurveSpec& c = cfg.curve;
  const ToleranceConfig& tol = cfg.tolerances;
  std::optional<PlaneCurve> curve;
  switch (c.kind) {
    case CurveKind::Builtin: {
      BuiltinParams params = c.params;
      if (c.domain) {
        params["lo"] = c.domain->lo;
        params["hi"] = c.domain->hi;
      }
      curve.emplace(builtin_curve(c.name, params, tol));
      break;
    }
    case CurveKind::Parametric: {
      Expression x = Expression::parse(c.x, c.variable);
      Expression y = Expression::parse(c.y, c.variable);
      const std::string desc = "(" + x.serialize() + ", " + y.serialize() + ")";
      curve.emplace(std::make_shared<ParametricModel>(std::move(x), std::move(y), *c.domain, desc),
                    tol);
      break;
    }
    case CurveKind::CurvatureS: {
      const Expression kappa = Expression::parse(c.kappa, c.variable);
      curve.emplace(
          curve_from_curvature_arclength(kappa, *c.domain, c.start_point, c.start_angle, tol));
      break;
    }
  }
  if (c.offset.x != 0.0 || c.offset.y != 0.0) {
    curve.emplace(std::make_shared<TranslatedModel>(curve->model_ptr(), c.offset), tol);
  }
  return *curve;
}

SurfaceOfRevolution build_surface(const RunConfig& cfg, PlaneCurve profile) {
  SurfaceOptions opts;
  opts.flip_orientation = cfg.surface.flip_orientation;
  opts.segments.base_s = cfg.curve.base_c;
  opts.tolerances = cfg.tolerances;
  return revolve(std::move(profile), opts);
}

ordered_json verify(const RunConfig& cfg, int n_samples) {
  const PlaneCurve curve = build_curve(cfg);
  const ToleranceConfig& tol = cfg.tolerances;
  const std::vector<CurveSegment> segments = stratify(curve, tol, {cfg.curve.base_c});
  std::mt19937_64 gen(cfg.seed);
  bool all_pass = true;

  ordered_json report;
  report["curve"] = curve.description();
  report["seed"] = cfg.seed;
  report["samples"] = n_samples;
  report["fd_step"] = kFdStep;
  report["tolerance"] = "residual <= 1e-6 * (1 + |rhs|)";

  const Interval sr = curve.s_range();
  report["inflections"] =
      find_roots([&](double s) { return curve.kappa_at_s(s); }, sr.lo, sr.hi, tol);

  ordered_json segs = ordered_json::array();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const CurveSegment& seg = segments[i];
    const Interval range = seg.theta_range();
    double max_res = 0.0, sum_res = 0.0, max_ratio = 0.0, max_roundtrip = 0.0;
    for (int k = 0; k < n_samples; ++k) {
      const double theta = interior_theta(range, uniform01(gen));
      const Residual r = theorem_residual(seg, theta, kFdStep);
      max_res = std::max(max_res, r.residual);
      sum_res += r.residual;
      max_ratio = std::max(max_ratio, r.residual / (1.0 + std::fabs(r.rhs)));
      max_roundtrip =
          std::max(max_roundtrip, std::fabs(seg.theta_of_s(seg.s_of_theta(theta)) - theta));
    }
    const bool pass = max_ratio <= kResidualTol;
    all_pass = all_pass && pass;

    const VertexReport vr = detect_vertices(seg, tol);
    ordered_json vertices = ordered_json::array();
    for (const FrameSample& v : vr.vertices) vertices.push_back(v.s);

    ordered_json js;
    js["id"] = i;
    js["s_range"] = {seg.s_range().lo, seg.s_range().hi};
    js["sign"] = seg.sign();
    js["base"] = seg.base();
    js["theta_range"] = {range.lo, range.hi};
    js["theorem"] = {{"max_residual", max_res},
                     {"mean_residual", sum_res / n_samples},
                     {"max_normalized", max_ratio},
                     {"pass", pass}};
    js["chart_roundtrip_max"] = max_roundtrip;
    js["vertex_status"] =
        vr.status == VertexStatus::Found ? "found" : "degenerate_all_vertices";
    js["vertices"] = vertices;
    segs.push_back(std::move(js));
  }
  report["segments"] = std::move(segs);

  if (cfg.surface.enabled) {
    const SurfaceOfRevolution surface = build_surface(cfg, curve);
    const FeatureCircles fc = feature_circles(surface, tol);
    ordered_json sj;
    sj["orientation"] = surface.orientation();
    sj["parabolic"] = station_list(fc.parabolic);
    sj["ridge"] = station_list(fc.ridge);
    sj["ridge_degenerate"] = fc.ridge_degenerate;
    ordered_json cor = ordered_json::array();
    for (std::size_t i = 0; i < surface.segments().size(); ++i) {
      const Interval range = surface.segments()[i].theta_range();
      double max_res = 0.0, sum_res = 0.0, max_ratio = 0.0;
      for (int k = 0; k < n_samples; ++k) {
        const double theta = interior_theta(range, uniform01(gen));
        const Residual r = corollary_residual(surface, theta, static_cast<int>(i), kFdStep);
        max_res = std::max(max_res, r.residual);
        sum_res += r.residual;
        max_ratio = std::max(max_ratio, r.residual / (1.0 + std::fabs(r.rhs)));
      }
      const bool pass = max_ratio <= kResidualTol;
      all_pass = all_pass && pass;
      cor.push_back({{"segment", i},
                     {"max_residual", max_res},
                     {"mean_residual", sum_res / n_samples},
                     {"max_normalized", max_ratio},
                     {"pass", pass}});
    }
    sj["corollary"] = std::move(cor);
    report["surface"] = std::move(sj);
  }
  report["pass"] = all_pass;
  return report;
}

void execute(Command command, const RunConfig& cfg, const std::string& out_dir, std::ostream& out) {
  const bool want_surface = command == Command::Surface;
  if (command == Command::Curve) {
    for (std::size_t i = 0; i < cfg.outputs.size(); ++i) {
      if (cfg.outputs[i].format == OutputFormat::Obj) {
        throw ConfigError("outputs[" + std::to_string(i) + "].format",
                          "obj output requires the surface subcommand");
      }
    }
  }

  const auto emit = [&](const OutputSpec& o, const std::string& content) {
    const std::string path = resolve(out_dir, o.path);
    write_atomic(path, content);
    out << "wrote " << to_string(o.format) << ' ' << path << " (" << content.size()
        << " bytes)\n";
  };

  if (command == Command::Verify) {
    RunConfig vcfg = cfg;
    const std::string text = verify(vcfg, cfg.samples).dump(2) + "\n";
    bool written = false;
    for (const OutputSpec& o : cfg.outputs) {
      if (o.format != OutputFormat::Report) continue;
      emit(o, text);
      written = true;
    }
    if (!written) out << text;
    return;
  }

  const PlaneCurve curve = build_curve(cfg);
  std::optional<SurfaceOfRevolution> surface;
  std::vector<CurveSegment> segments;
  if (want_surface) {
    surface.emplace(build_surface(cfg, curve));
    segments = surface->segments();
  } else {
    segments = stratify(curve, cfg.tolerances, {cfg.curve.base_c});
  }
  const std::vector<MarkerSet> markers = markers_for(segments, cfg.theta_step);

  for (const OutputSpec& o : cfg.outputs) {
    switch (o.format) {
      case OutputFormat::Svg: {
        SvgOptions opts;
        opts.marker_radius = cfg.marker_radius;
        opts.title = cfg.title;
        if (cfg.highlight_vertices) {
          for (const CurveSegment& seg : segments) {
            for (const FrameSample& v : detect_vertices(seg, cfg.tolerances).vertices) {
              opts.highlights.push_back(v.position);
            }
          }
        }
        emit(o, emit_svg_curve(segments, markers, opts));
        break;
      }
      case OutputFormat::Csv:
        emit(o, emit_csv_markers(markers));
        break;
      case OutputFormat::ThetaSvg: {
        const int idx = o.segment.value_or(0);
        if (idx < 0 || static_cast<std::size_t>(idx) >= segments.size()) {
          throw ConfigError("outputs.segment", "no segment " + std::to_string(idx) + " (curve has " +
                                                   std::to_string(segments.size()) + ")");
        }
        emit(o, emit_svg_theta_plot(segments[static_cast<std::size_t>(idx)], kThetaPlotSamples,
                                    cfg.theta_step));
        break;
      }
      case OutputFormat::Obj: {
        const std::vector<RingStation> rings = equal_theta_rings(*surface, cfg.theta_step);
        const RevolutionMesh mesh =
            build_mesh(*surface, rings, cfg.surface.u_count, cfg.surface.include_faces);
        emit(o, emit_obj_mesh(mesh, cfg.surface.include_faces));
        break;
      }
      case OutputFormat::Report:
        emit(o, verify(cfg, cfg.samples).dump(2) + "\n");
        break;
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"thetakit: equal-angle charts on plane curves and surfaces of revolution",
               "thetakit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::string gallery_name;

  const auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", config_path, "JSON run configuration");
    if (needs_config) opt->required();
    sub->add_option("--out-dir", out_dir, "Directory for relative output paths");
    sub->add_option("--samples", samples, "Random theta samples per segment in reports")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Seed for report sampling");
  };
  CLI::App* curve_cmd = app.add_subcommand("curve", "Stratify a curve and place equal-theta markers");
  CLI::App* surface_cmd = app.add_subcommand("surface", "Revolve a profile and mesh it");
  CLI::App* verify_cmd = app.add_subcommand("verify", "Write a JSON verification report");
  CLI::App* gallery_cmd = app.add_subcommand("gallery", "Reproduce a named figure");
  add_common(curve_cmd, true);
  add_common(surface_cmd, true);
  add_common(verify_cmd, true);
  add_common(gallery_cmd, false);
  gallery_cmd->add_option("name", gallery_name, "Figure name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  const auto apply_overrides = [&](RunConfig& cfg) {
    if (samples) cfg.samples = *samples;
    if (seed) cfg.seed = *seed;
  };

  try {
    if (gallery_cmd->parsed()) {
      const std::vector<GalleryConfig> entries = gallery_configs(gallery_name);
      for (const GalleryConfig& entry : entries) {
        RunConfig cfg = parse_config(nlohmann::json::parse(entry.json));
        apply_overrides(cfg);
        execute(cfg.surface.enabled ? Command::Surface : Command::Curve, cfg, out_dir, out);
      }
      return kExitOk;
    }
    RunConfig cfg = load_config(config_path);
    apply_overrides(cfg);
    Command cmd = Command::Curve;
    if (surface_cmd->parsed()) {
      cmd = Command::Surface;
      cfg.surface.enabled = true;
    } else if (verify_cmd->parsed()) {
      cmd = Command::Verify;
    }
    execute(cmd, cfg, out_dir, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_input_error() ? kExitInput : kExitNumeric;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace thetakit::cli
