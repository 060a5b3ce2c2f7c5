#pragma once

// Text emitters: SVG 1.1 for curves and theta plots, CSV for markers and
// Wavefront OBJ for revolution meshes. All output is byte-stable for equal
// inputs.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thetakit/segment.hpp"
#include "thetakit/surface.hpp"

namespace thetakit {

namespace palette {
inline constexpr const char* kPositive = "#E69F00";   // orange: kappa > 0 / elliptic
inline constexpr const char* kPositiveAlt = "#F0C05A";
inline constexpr const char* kNegative = "#0072B2";   // blue: kappa < 0 / hyperbolic
inline constexpr const char* kNegativeAlt = "#56B4E9";
inline constexpr const char* kRidge = "#009E73";      // green: vertices / ridges
inline constexpr const char* kMarker = "#222222";
}  // namespace palette

struct SvgOptions {
  /// Marker circle radius in curve units; 0.8% of the viewBox diagonal when
  /// absent.
  std::optional<double> marker_radius;
  /// Points drawn as larger green dots (typically vertices).
  std::vector<Vec2> highlights;
  std::string title;
  int polyline_samples = 512;
  double pixel_width = 800.0;
};

/// One path per segment, coloured by the sign of kappa (alternating shade
/// between consecutive same-sign segments), one circle per marker. The
/// y-axis is flipped by a single group transform. Throws Error{EmptyInput}
/// when there is no segment.
std::string emit_svg_curve(std::span<const CurveSegment> segments,
                           std::span<const MarkerSet> markers, const SvgOptions& options = {});

/// Plot of theta(s) against s with axes, ticks and horizontal grid lines at
/// the marker values k * delta_theta. Throws Error{EmptyInput} if
/// n_samples < 2.
std::string emit_svg_theta_plot(const CurveSegment& segment, int n_samples,
                                 std::optional<double> delta_theta = std::nullopt);

/// Header `k,theta,s,x,y,kappa,dkappa_ds`, one row per marker, 12 significant
/// digits, `\n` line endings.
std::string emit_csv_markers(const MarkerSet& markers);
/// Several sets under one header, rows in s order.
std::string emit_csv_markers(std::span<const MarkerSet> sets);

/// `v` records (6 decimals), a commented closed `l` loop per ring, an open
/// `l` polyline per meridian and optional `f` quads; 1-based indices.
/// Throws Error{EmptyInput} for a mesh without vertices.
std::string emit_obj_mesh(const RevolutionMesh& mesh, bool include_faces);

}  // namespace thetakit
