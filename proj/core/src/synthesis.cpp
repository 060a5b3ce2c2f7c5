#include "thetakit/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "thetakit/curve_models.hpp"
#include "thetakit/error.hpp"

namespace thetakit {

PlaneCurve curve_from_curvature_arclength(const Expression& kappa, Interval domain,
                                          Vec2 start_point, double start_angle,
                                          const ToleranceConfig& cfg) {
  auto model = std::make_shared<ArcLengthModel>(kappa, domain, start_point, start_angle, cfg);
  return PlaneCurve(std::move(model), cfg);
}

PlaneCurve curve_from_curvature_theta(const Expression& kappa_of_theta, Interval theta_domain,
                                      double base_c, const ToleranceConfig& cfg) {
  if (!(theta_domain.lo < theta_domain.hi)) {
    throw Error(ErrorCode::InvalidArgument, "theta domain must satisfy lo < hi");
  }
  // A sign change between grid points also means a zero in between.
  constexpr int kGrid = 2048;
  const double first = kappa_of_theta.evaluate(theta_domain.lo);
  for (int i = 0; i < kGrid; ++i) {
    const double th = theta_domain.lo + theta_domain.length() * i / (kGrid - 1);
    const double k = kappa_of_theta.evaluate(th);
    if (std::fabs(k) < 1e-9 || (k > 0.0) != (first > 0.0)) {
      throw Error(ErrorCode::VanishingCurvature,
                  "kappa(theta) vanishes near theta = " + std::to_string(th));
    }
  }

  const std::string var =
      kappa_of_theta.variable().empty() ? std::string("theta") : kappa_of_theta.variable();
  const std::string k = kappa_of_theta.serialize();
  const Expression gx = Expression::parse("cos(" + var + ") / " + k, var);
  const Expression gy = Expression::parse("sin(" + var + ") / " + k, var);
  auto ax = std::make_shared<const Antiderivative>(gx, theta_domain, base_c, cfg);
  auto ay = std::make_shared<const Antiderivative>(gy, theta_domain, base_c, cfg);

  std::ostringstream desc;
  desc << "integral of (cos, sin)/kappa with kappa(" << var << ") = " << k;
  auto model = std::make_shared<ParametricModel>(ax, ay, theta_domain, desc.str());
  return PlaneCurve(std::move(model), cfg);
}

namespace {

double param(const BuiltinParams& params, std::string_view key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Interval domain_from(const BuiltinParams& params, Interval fallback) {
  return {param(params, "lo", fallback.lo), param(params, "hi", fallback.hi)};
}

}  // namespace

PlaneCurve builtin_curve(std::string_view name, const BuiltinParams& params,
                         const ToleranceConfig& cfg) {
  if (name == "circle") {
    const double r = param(params, "radius", 1.0);
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "circle radius must be positive");
    std::ostringstream num;
    num.precision(17);
    num << r;
    const Interval dom = domain_from(params, {0.0, 2.0 * std::numbers::pi});
    auto model = std::make_shared<ParametricModel>(
        Expression::parse(num.str() + " * cos(t)", "t"),
        Expression::parse(num.str() + " * sin(t)", "t"), dom, "circle of radius " + num.str());
    return PlaneCurve(std::move(model), cfg);
  }
  if (name == "elastica") {
    Interval dom = domain_from(params, {-kElasticaLimit, kElasticaLimit});
    dom.lo = std::max(dom.lo, -kElasticaLimit);
    dom.hi = std::min(dom.hi, kElasticaLimit);
    auto y = std::make_shared<const Antiderivative>(
        Expression::parse("x^2 / sqrt(1 - x^4)", "x"), dom, 0.0, cfg);
    auto model = std::make_shared<ParametricModel>(Expression::parse("x", "x"), y, dom,
                                                   "elastica (x, int x^2/sqrt(1-x^4))");
    return PlaneCurve(std::move(model), cfg);
  }
  if (name == "euler_spiral") {
    const Interval dom = domain_from(params, {-3.0, 3.0});
    auto x = std::make_shared<const Antiderivative>(Expression::parse("cos(t^2/2)", "t"), dom,
                                                    0.0, cfg);
    auto y = std::make_shared<const Antiderivative>(Expression::parse("sin(t^2/2)", "t"), dom,
                                                    0.0, cfg);
    auto model = std::make_shared<ParametricModel>(x, y, dom, "Euler spiral (Fresnel integrals)");
    return PlaneCurve(std::move(model), cfg);
  }
  if (name == "kappa_1_plus_s2") {
    const Interval dom = domain_from(params, {-2.0, 2.0});
    return curve_from_curvature_arclength(Expression::parse("1 + s^2", "s"), dom, {}, 0.0, cfg);
  }
  throw Error(ErrorCode::UnknownBuiltin, "'" + std::string(name) + "'");
}

}  // namespace thetakit
