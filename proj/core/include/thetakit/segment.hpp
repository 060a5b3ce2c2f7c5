#pragma once

// Tangential-angle charts on inflection-free pieces of a plane curve.

#include <optional>
#include <vector>

#include "thetakit/curve.hpp"

namespace thetakit {

struct SegmentOptions {
  /// Arc length of the base point c where theta = 0. Clamped into each
  /// segment's closed s-range; the segment midpoint when absent.
  std::optional<double> base_s;
};

/// Maximal open arc-length interval with kappa != 0, carrying its
/// tangential-angle chart theta(s) = integral of kappa from c to s.
class CurveSegment {
 public:
  CurveSegment(PlaneCurve curve, Interval s_range, double base_s, int sign);

  const PlaneCurve& curve() const { return curve_; }
  Interval s_range() const { return s_range_; }
  double base() const { return base_; }
  int sign() const { return sign_; }

  /// theta at the two ends of the s-range, in s order (decreasing when
  /// sign < 0).
  double theta_at_lo() const { return theta_lo_; }
  double theta_at_hi() const { return theta_hi_; }
  /// theta range as an ordered interval.
  Interval theta_range() const;

  /// Throws RangeError{OutOfSegment}.
  double theta_of_s(double s) const;
  /// Throws RangeError{OutOfRange} carrying the attainable theta interval.
  double s_of_theta(double theta) const;

  /// Frame at arc length s with theta populated.
  FrameSample frame_at_s(double s) const;

 private:
  PlaneCurve curve_;
  Interval s_range_;
  Interval t_range_;
  double base_;
  int sign_;
  double turn_at_base_;
  double theta_lo_;
  double theta_hi_;
};

/// Splits the curve at the roots of kappa(s). Segments shorter than
/// 100 * root_tol are dropped. Throws Error{EverywhereFlat} when
/// |kappa| < 1e-12 on the whole sampling grid.
std::vector<CurveSegment> stratify(const PlaneCurve& curve, const ToleranceConfig& cfg = {},
                                   const SegmentOptions& options = {});

struct Marker {
  long k = 0;  ///< theta = k * delta_theta
  FrameSample frame;
};

struct MarkerSet {
  double delta_theta = 0.0;
  std::vector<Marker> markers;  ///< ordered by s
};

/// Markers keep this distance from the ends of the theta range, where 1/kappa
/// blows up.
inline constexpr double kThetaEndMargin = 1e-6;

/// Markers at every theta = k * delta_theta strictly inside the segment's
/// theta range shrunk by kThetaEndMargin. Throws Error{StepTooLarge} when
/// there are none.
MarkerSet equal_theta_markers(const CurveSegment& segment, double delta_theta);

enum class VertexStatus { Found, DegenerateAllVertices };

struct VertexReport {
  VertexStatus status = VertexStatus::Found;
  std::vector<FrameSample> vertices;
};

/// Roots of dkappa/ds inside the segment. Constant-curvature segments report
/// DegenerateAllVertices with an empty list.
VertexReport detect_vertices(const CurveSegment& segment, const ToleranceConfig& cfg = {});

/// |d gamma / d theta|^2 = 1 / kappa(s(theta))^2.
double speed_squared_wrt_theta(const CurveSegment& segment, double theta);

struct Residual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// lhs: central difference in theta of |d gamma/d theta|^2 with step h;
/// rhs: -2 kappa^-4 dkappa/ds at s(theta).
Residual theorem_residual(const CurveSegment& segment, double theta, double h = 1e-4);

}  // namespace thetakit
