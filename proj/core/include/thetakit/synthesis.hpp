#pragma once

// Curves reconstructed from prescribed curvature, and the built-in gallery.

#include <map>
#include <string>
#include <string_view>

#include "thetakit/curve.hpp"
#include "thetakit/expr.hpp"

namespace thetakit {

/// gamma(s) = start_point + integral (cos theta(s), sin theta(s)) ds with
/// theta(s) = start_angle + integral of kappa. The start pose is attached at
/// s = 0 when the domain contains it, else at the domain start.
PlaneCurve curve_from_curvature_arclength(const Expression& kappa, Interval domain,
                                          Vec2 start_point = {}, double start_angle = 0.0,
                                          const ToleranceConfig& cfg = {});

/// gamma(theta) = integral from base_c to theta of (1/kappa)(cos, sin),
/// parametrized by theta; gamma(base_c) is the origin. Throws
/// Error{VanishingCurvature} if |kappa| < 1e-9 or kappa changes sign on the
/// sampling grid.
PlaneCurve curve_from_curvature_theta(const Expression& kappa_of_theta, Interval theta_domain,
                                      double base_c = 0.0, const ToleranceConfig& cfg = {});

using BuiltinParams = std::map<std::string, double, std::less<>>;

/// Gallery curves:
///   circle           radius (1), domain [0, 2 pi] by default
///   elastica         x -> (x, integral x^2 / sqrt(1 - x^4)) on |x| <= 1 - 1e-6
///   euler_spiral     Fresnel integrals, kappa(s) = s; domain [-3, 3] by default
///   kappa_1_plus_s2  built from kappa(s) = 1 + s^2; domain [-2, 2] by default
/// Optional parameters: lo, hi (domain), radius (circle).
/// Throws Error{UnknownBuiltin}.
PlaneCurve builtin_curve(std::string_view name, const BuiltinParams& params = {},
                         const ToleranceConfig& cfg = {});

/// Usable half-width of the elastica domain.
inline constexpr double kElasticaLimit = 1.0 - 1e-6;

}  // namespace thetakit
