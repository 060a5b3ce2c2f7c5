#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"
#include "thetakit/segment.hpp"
#include "thetakit/surface.hpp"

namespace thetakit::cli {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitNumeric = 2, kExitIo = 3 };

enum class Command { Curve, Surface, Verify };

PlaneCurve build_curve(const RunConfig& cfg);
SurfaceOfRevolution build_surface(const RunConfig& cfg, PlaneCurve profile);

/// Per segment: theorem residual statistics over `n_samples` seeded interior
/// theta values, chart round-trip error and vertex stations; curve
/// inflections; for surfaces, corollary residuals and feature circles.
nlohmann::ordered_json verify(const RunConfig& cfg, int n_samples);

/// Runs one configuration. Relative output paths resolve against `out_dir`.
/// Prints one summary line per written file to `out`. Library and config
/// errors propagate.
void execute(Command command, const RunConfig& cfg, const std::string& out_dir, std::ostream& out);

/// Full command line (without the program name). Maps failures onto the
/// exit codes and prints them to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetakit::cli
