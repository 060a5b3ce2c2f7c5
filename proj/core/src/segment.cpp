#include "thetakit/segment.hpp"

#include <algorithm>
#include <cmath>

#include "thetakit/error.hpp"

namespace thetakit {

namespace {

constexpr double kFlatKappa = 1e-12;
constexpr double kGridZero = 1e-14;

}  // namespace

CurveSegment::CurveSegment(PlaneCurve curve, Interval s_range, double base_s, int sign)
    : curve_(std::move(curve)),
      s_range_(s_range),
      base_(s_range.clamp(base_s)),
      sign_(sign >= 0 ? 1 : -1) {
  t_range_ = {curve_.t_of_s(s_range_.lo), curve_.t_of_s(s_range_.hi)};
  turn_at_base_ = curve_.turning_at_t(curve_.t_of_s(base_));
  theta_lo_ = curve_.turning_at_t(t_range_.lo) - turn_at_base_;
  theta_hi_ = curve_.turning_at_t(t_range_.hi) - turn_at_base_;
}

Interval CurveSegment::theta_range() const {
  return {std::min(theta_lo_, theta_hi_), std::max(theta_lo_, theta_hi_)};
}

double CurveSegment::theta_of_s(double s) const {
  if (!s_range_.contains(s)) {
    throw RangeError(ErrorCode::OutOfSegment, s, s_range_.lo, s_range_.hi, "arc length");
  }
  if (s == base_) return 0.0;
  return curve_.turning_at_t(curve_.t_of_s(s)) - turn_at_base_;
}

double CurveSegment::s_of_theta(double theta) const {
  const Interval range = theta_range();
  if (!range.contains(theta)) {
    throw RangeError(ErrorCode::OutOfRange, theta, range.lo, range.hi, "theta");
  }
  if (theta == 0.0) return base_;
  const double t = curve_.t_for_turning(theta + turn_at_base_, t_range_.lo, t_range_.hi);
  return s_range_.clamp(curve_.s_of_t(t));
}

FrameSample CurveSegment::frame_at_s(double s) const {
  FrameSample f = curve_.frame_at_s(s);
  f.theta = theta_of_s(s);
  return f;
}

std::vector<CurveSegment> stratify(const PlaneCurve& curve, const ToleranceConfig& cfg,
                                   const SegmentOptions& options) {
  cfg.validate();
  const Interval sr = curve.s_range();
  const auto kappa = [&](double s) { return curve.kappa_at_s(s); };

  bool flat = true;
  for (int i = 0; i <= cfg.grid_n && flat; ++i) {
    const double s = i == cfg.grid_n ? sr.hi : sr.lo + sr.length() * i / cfg.grid_n;
    if (std::fabs(kappa(s)) >= kFlatKappa) flat = false;
  }
  if (flat) {
    throw Error(ErrorCode::EverywhereFlat,
                "curvature vanishes on the whole domain of " + curve.description());
  }

  std::vector<double> cuts{sr.lo};
  for (double r : find_roots(kappa, sr.lo, sr.hi, cfg)) {
    if (r > sr.lo && r < sr.hi) cuts.push_back(r);
  }
  cuts.push_back(sr.hi);

  std::vector<CurveSegment> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Interval piece{cuts[i], cuts[i + 1]};
    if (piece.length() < 100.0 * cfg.root_tol) continue;
    const double k_mid = kappa(piece.mid());
    if (std::fabs(k_mid) < kFlatKappa) continue;
    const double base = options.base_s.value_or(piece.mid());
    segments.emplace_back(curve, piece, base, k_mid > 0.0 ? 1 : -1);
  }
  return segments;
}

MarkerSet equal_theta_markers(const CurveSegment& segment, double delta_theta) {
  if (!(delta_theta > 0.0) || !std::isfinite(delta_theta)) {
    throw Error(ErrorCode::InvalidArgument, "delta_theta must be positive");
  }
  const Interval range = segment.theta_range();
  const double lo = range.lo + kThetaEndMargin;
  const double hi = range.hi - kThetaEndMargin;

  MarkerSet set;
  set.delta_theta = delta_theta;
  if (lo < hi) {
    long k = static_cast<long>(std::floor(lo / delta_theta));
    for (; static_cast<double>(k) * delta_theta < hi; ++k) {
      const double theta = static_cast<double>(k) * delta_theta;
      if (!(theta > lo)) continue;
      Marker m;
      m.k = k;
      m.frame = segment.frame_at_s(segment.s_of_theta(theta));
      m.frame.theta = theta;
      set.markers.push_back(m);
    }
  }
  if (set.markers.empty()) {
    throw Error(ErrorCode::StepTooLarge, "no multiple of delta_theta inside the theta range");
  }
  std::sort(set.markers.begin(), set.markers.end(),
            [](const Marker& a, const Marker& b) { return a.frame.s < b.frame.s; });
  return set;
}

VertexReport detect_vertices(const CurveSegment& segment, const ToleranceConfig& cfg) {
  const PlaneCurve& curve = segment.curve();
  const Interval sr = segment.s_range();
  const auto dkappa = [&](double s) { return curve.dkappa_ds_at_s(s); };

  VertexReport report;
  bool all_zero = true;
  for (int i = 0; i <= cfg.grid_n && all_zero; ++i) {
    const double s = i == cfg.grid_n ? sr.hi : sr.lo + sr.length() * i / cfg.grid_n;
    if (std::fabs(dkappa(s)) >= kGridZero) all_zero = false;
  }
  if (all_zero) {
    report.status = VertexStatus::DegenerateAllVertices;
    return report;
  }
  for (double r : find_roots(dkappa, sr.lo, sr.hi, cfg)) {
    if (r > sr.lo && r < sr.hi) report.vertices.push_back(segment.frame_at_s(r));
  }
  return report;
}

double speed_squared_wrt_theta(const CurveSegment& segment, double theta) {
  const double kappa = segment.curve().kappa_at_s(segment.s_of_theta(theta));
  return 1.0 / (kappa * kappa);
}

Residual theorem_residual(const CurveSegment& segment, double theta, double h) {
  const Interval range = segment.theta_range();
  if (!(h > 0.0) || theta - h < range.lo || theta + h > range.hi) {
    throw RangeError(ErrorCode::OutOfRange, theta, range.lo + h, range.hi - h,
                     "theta (with step)");
  }
  Residual r;
  r.lhs = (speed_squared_wrt_theta(segment, theta + h) -
           speed_squared_wrt_theta(segment, theta - h)) /
          (2.0 * h);
  const FrameSample f = segment.curve().frame_at_s(segment.s_of_theta(theta));
  const double k2 = f.kappa * f.kappa;
  r.rhs = -2.0 / (k2 * k2) * f.dkappa_ds;
  r.residual = std::fabs(r.lhs - r.rhs);
  return r;
}

}  // namespace thetakit
