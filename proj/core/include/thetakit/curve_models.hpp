#pragma once

// Concrete CurveModel implementations.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "thetakit/curve.hpp"
#include "thetakit/expr.hpp"

namespace thetakit {

/// F(t) = integral of g from `origin` to t, tabulated on a uniform node grid
/// so that evaluation costs one short quadrature.
class Antiderivative {
 public:
  static constexpr int kNodes = 2048;

  Antiderivative(Expression integrand, Interval domain, double origin,
                 ToleranceConfig cfg = {});

  double value(double t) const;
  /// (F, g, g', g'') at t.
  Jet jet(double t) const;
  const Expression& integrand() const { return integrand_; }

 private:
  Expression integrand_;
  Interval domain_;
  ToleranceConfig cfg_;
  std::vector<double> nodes_;
  std::vector<double> values_;
};

/// One coordinate function of a parametric curve.
using Component = std::variant<Expression, std::shared_ptr<const Antiderivative>>;

class ParametricModel final : public CurveModel {
 public:
  ParametricModel(Component x, Component y, Interval domain, std::string description);

  Interval domain() const override { return domain_; }
  Vec2 position(double t) const override;
  CurveDerivatives derivatives(double t) const override;
  std::string description() const override { return description_; }

 private:
  Component x_;
  Component y_;
  Interval domain_;
  std::string description_;
};

/// Curve given by its curvature as a function of arc length:
/// gamma(s) = start + R(start_angle) * integral (cos phi, sin phi) ds with
/// phi(s) = integral of kappa from the anchor. The anchor is s = 0 when the
/// domain contains it, else the domain start.
///
/// Positions integrate a cubic Hermite interpolant of the cumulative angle
/// table (nodes carry phi and phi' = kappa), so each evaluation is a short
/// quadrature rather than a nested one.
class ArcLengthModel final : public CurveModel {
 public:
  static constexpr int kNodes = 2048;

  ArcLengthModel(Expression kappa, Interval domain, Vec2 start_point, double start_angle,
                 ToleranceConfig cfg = {});

  Interval domain() const override { return domain_; }
  Vec2 position(double s) const override;
  CurveDerivatives derivatives(double s) const override;
  std::string description() const override;

  bool is_arc_length() const override { return true; }
  std::pair<double, double> curvature(double s) const override;
  double speed(double) const override { return 1.0; }
  double turning_rate(double s) const override { return kappa_.evaluate(s); }

  double anchor() const { return anchor_; }
  /// Tangent angle relative to start_angle, from the node table plus a short
  /// quadrature.
  double angle(double s) const;
  /// Same angle from the cubic Hermite interpolant used by position().
  double interpolated_angle(double s) const;
  const Expression& kappa() const { return kappa_; }

 private:
  std::size_t node_interval(double s) const;
  Vec2 canonical_position(double s) const;

  Expression kappa_;
  Interval domain_;
  Vec2 start_point_;
  double start_angle_;
  ToleranceConfig cfg_;
  double anchor_;
  std::vector<double> nodes_;
  std::vector<double> phi_;
  std::vector<double> kappa_nodes_;
  std::vector<Vec2> pos_;
};

/// Rigid translation of another model.
class TranslatedModel final : public CurveModel {
 public:
  TranslatedModel(std::shared_ptr<const CurveModel> inner, Vec2 offset)
      : inner_(std::move(inner)), offset_(offset) {}

  Interval domain() const override { return inner_->domain(); }
  Vec2 position(double t) const override { return inner_->position(t) + offset_; }
  CurveDerivatives derivatives(double t) const override { return inner_->derivatives(t); }
  std::string description() const override;
  bool is_arc_length() const override { return inner_->is_arc_length(); }
  std::pair<double, double> curvature(double t) const override { return inner_->curvature(t); }
  double speed(double t) const override { return inner_->speed(t); }
  double turning_rate(double t) const override { return inner_->turning_rate(t); }

 private:
  std::shared_ptr<const CurveModel> inner_;
  Vec2 offset_;
};

}  // namespace thetakit
