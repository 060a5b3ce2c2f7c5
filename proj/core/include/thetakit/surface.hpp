#pragma once

// Surfaces of revolution f(s, u) = (g1(s) cos u, g1(s) sin u, g2(s)) generated
// by a profile curve g = (g1, g2) in the xz-plane, with s the profile arc
// length. Meridians (u fixed) and parallels (s fixed) are curvature lines.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thetakit/curve.hpp"
#include "thetakit/segment.hpp"

namespace thetakit {

enum class Region { Elliptic, Hyperbolic, Parabolic };
std::string_view to_string(Region r) noexcept;

/// |K| below this is parabolic.
inline constexpr double kParabolicK = 1e-9;
/// Minimum distance from the rotation axis.
inline constexpr double kMinRadius = 1e-6;

struct SurfaceOptions {
  /// Flips the unit normal, negating both principal curvatures.
  bool flip_orientation = false;
  SegmentOptions segments;
  ToleranceConfig tolerances;
};

struct SurfacePointSample {
  double s = 0.0;
  double u = 0.0;
  Vec3 position;
  Vec3 normal;
  double kappa1 = 0.0;  ///< meridian (profile) principal curvature
  double kappa2 = 0.0;  ///< parallel principal curvature
  double gaussian = 0.0;
  Region region = Region::Elliptic;
};

class SurfaceOfRevolution {
 public:
  const PlaneCurve& profile() const { return profile_; }
  const std::vector<CurveSegment>& segments() const { return segments_; }
  const SurfaceOptions& options() const { return options_; }
  double orientation() const { return options_.flip_orientation ? -1.0 : 1.0; }

  Vec3 point(double s, double u) const;
  SurfacePointSample sample(double s, double u = 0.0) const;

 private:
  friend SurfaceOfRevolution revolve(PlaneCurve profile, const SurfaceOptions& options);
  SurfaceOfRevolution(PlaneCurve profile, std::vector<CurveSegment> segments,
                      SurfaceOptions options)
      : profile_(std::move(profile)), segments_(std::move(segments)), options_(options) {}

  PlaneCurve profile_;
  std::vector<CurveSegment> segments_;
  SurfaceOptions options_;
};

/// Revolves the profile (x = radius, y = height) about the z-axis and
/// stratifies it. Throws Error{AxisContact} if the radius drops to
/// kMinRadius anywhere on the sampled domain.
SurfaceOfRevolution revolve(PlaneCurve profile, const SurfaceOptions& options = {});

struct PrincipalCurvatures {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

/// kappa1 = profile curvature, kappa2 = g2'(s) / g1(s), signed with the
/// normal (-g2' cos u, -g2' sin u, g1'). Throws RangeError{OutOfDomain}.
PrincipalCurvatures principal_curvatures(const SurfaceOfRevolution& surface, double s);
double gaussian_curvature(const SurfaceOfRevolution& surface, double s);
Region region_classification(const SurfaceOfRevolution& surface, double s);

enum class FeatureCause : std::uint8_t {
  ProfileInflection = 1,  ///< kappa1 = 0
  ParallelFlat = 2,       ///< kappa2 = 0 (horizontal profile tangent)
  ProfileVertex = 4,      ///< dkappa1/ds = 0
};
std::string_view to_string(FeatureCause c) noexcept;

struct FeatureStation {
  double s = 0.0;
  std::vector<FeatureCause> causes;

  bool has(FeatureCause c) const;
};

struct FeatureCircles {
  std::vector<FeatureStation> parabolic;  ///< sorted by s
  std::vector<FeatureStation> ridge;      ///< sorted by s
  /// dkappa1/ds vanishes identically (circular profile arcs).
  bool ridge_degenerate = false;
};

/// Parabolic circles through profile inflections and horizontal tangents,
/// ridge circles through profile vertices. Stations closer than
/// 10 * root_tol are merged and keep every cause.
FeatureCircles feature_circles(const SurfaceOfRevolution& surface,
                               const ToleranceConfig& cfg = {});

struct RingStation {
  double s = 0.0;
  std::optional<double> theta;
  std::optional<int> segment;
};

/// Parallel circles at theta = k * delta_theta on every profile segment,
/// sorted by s. Throws Error{StepTooLarge} when no segment gets a ring.
std::vector<RingStation> equal_theta_rings(const SurfaceOfRevolution& surface,
                                           double delta_theta);

/// lhs: central difference in theta of |df/dtheta|^2 along the meridian at
/// angle u; rhs: -2 kappa1^-4 dkappa1/ds. Both use the profile's own
/// curvature sign, so the identity does not depend on the normal orientation.
Residual corollary_residual(const SurfaceOfRevolution& surface, double theta, int segment_id,
                            double h = 1e-4, double u = 0.0);

enum FeatureTag : std::uint8_t { kFeatureNone = 0, kFeatureParabolic = 1, kFeatureRidge = 2 };

struct MeshRing {
  double s = 0.0;
  std::optional<double> theta;
  std::optional<int> segment;
  double radius = 0.0;
  double height = 0.0;
  Region region = Region::Elliptic;
  std::uint8_t feature = kFeatureNone;
  std::vector<std::size_t> vertices;  ///< closed loop, 0-based
};

struct RevolutionMesh {
  std::vector<Vec3> vertices;
  std::vector<Region> vertex_regions;
  std::vector<MeshRing> rings;                           ///< sorted by s
  std::vector<std::vector<std::size_t>> meridians;       ///< one per u index
  std::vector<std::array<std::size_t, 4>> faces;         ///< empty unless requested
  std::size_t u_count = 0;

  std::vector<std::size_t> feature_rings() const;
};

/// Vertices at (station s, u_j = 2 pi j / u_count). Parabolic and ridge
/// stations are inserted as extra rings, or tag an existing ring within
/// 1e-9. Throws Error{InvalidArgument} if u_count < 3 or fewer than two
/// stations are given.
RevolutionMesh build_mesh(const SurfaceOfRevolution& surface, std::span<const RingStation> rings,
                          int u_count, bool include_faces);

}  // namespace thetakit
