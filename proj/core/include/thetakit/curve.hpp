#pragma once

// Smooth non-singular plane curves with a cached arc-length table.
//
// A PlaneCurve wraps a CurveModel (the native parametrization t) and owns
// two monotone tables sampled on the same t-grid: arc length s(t) and the
// cumulative turning angle, i.e. the integral of kappa ds. All chart and
// segment math works in s; the tables only make s <-> t and the integrals
// cheap.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetakit/numerics.hpp"
#include "thetakit/vec.hpp"

namespace thetakit {

/// First three derivatives of the position with respect to the native
/// parameter.
struct CurveDerivatives {
  Vec2 d1;
  Vec2 d2;
  Vec2 d3;
};

class CurveModel {
 public:
  virtual ~CurveModel() = default;

  virtual Interval domain() const = 0;
  virtual Vec2 position(double t) const = 0;
  virtual CurveDerivatives derivatives(double t) const = 0;
  virtual std::string description() const = 0;

  /// True when t is already the arc-length parameter (s == t).
  virtual bool is_arc_length() const { return false; }

  /// Signed curvature and its derivative with respect to t.
  virtual std::pair<double, double> curvature(double t) const;
  /// |d gamma / dt|.
  virtual double speed(double t) const;
  /// kappa * |d gamma / dt|, the integrand of the turning angle in t.
  virtual double turning_rate(double t) const;
};

struct FrameSample {
  double s = 0.0;
  double t = 0.0;
  Vec2 position;
  Vec2 tangent;  ///< unit tangent e
  Vec2 normal;   ///< e rotated by +90 degrees
  double kappa = 0.0;
  double dkappa_ds = 0.0;
  std::optional<double> theta;
};

class PlaneCurve {
 public:
  static constexpr int kTableSamples = 2048;
  static constexpr double kMinSpeed = 1e-12;

  /// Builds the arc-length and turning tables eagerly. Throws
  /// Error{SingularPoint} if |d gamma/dt| < 1e-12 at a table sample.
  explicit PlaneCurve(std::shared_ptr<const CurveModel> model, ToleranceConfig cfg = {});

  const CurveModel& model() const { return *impl_->model; }
  std::shared_ptr<const CurveModel> model_ptr() const { return impl_->model; }
  const ToleranceConfig& tolerances() const { return impl_->cfg; }
  std::string description() const { return impl_->model->description(); }

  Interval domain() const { return impl_->domain; }
  /// Arc-length range; s = 0 at t = 0 when 0 lies in the domain, else at the
  /// domain start. Arc-length models keep s == t.
  Interval s_range() const { return {impl_->s_nodes.front(), impl_->s_nodes.back()}; }

  double s_of_t(double t) const;
  double t_of_s(double s) const;

  /// Integral of |d gamma/dt| over [t0, t1] by adaptive quadrature.
  double arc_length(double t0, double t1) const;

  Vec2 position(double t) const { return impl_->model->position(t); }

  /// Throws Error{SingularPoint} when |d gamma/dt| < 1e-12.
  FrameSample frame_at(double t) const;
  FrameSample frame_at_s(double s) const;

  double kappa_at_s(double s) const;
  double dkappa_ds_at_s(double s) const;

  /// Cumulative turning angle (integral of kappa ds) from the domain start to
  /// native parameter t.
  double turning_at_t(double t) const;

  /// Native parameter t in [t_lo, t_hi] whose cumulative turning equals
  /// `target`. Requires kappa of constant sign on [t_lo, t_hi].
  double t_for_turning(double target, double t_lo, double t_hi) const;

  std::size_t table_size() const { return impl_->t_nodes.size(); }

 private:
  struct Impl {
    std::shared_ptr<const CurveModel> model;
    ToleranceConfig cfg;
    Interval domain;
    std::vector<double> t_nodes;
    std::vector<double> s_nodes;
    std::vector<double> turn_nodes;
  };

  std::size_t node_interval(double t) const;
  void check_t(double t) const;

  std::shared_ptr<const Impl> impl_;
};

}  // namespace thetakit
