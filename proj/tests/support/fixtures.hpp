#pragma once

// Gallery objects shared by the unit and acceptance tests.

#include <cmath>
#include <memory>
#include <numbers>

#include "thetakit/thetakit.hpp"

namespace fixtures {

using namespace thetakit;

inline PlaneCurve euler_spiral(double lo = -3.0, double hi = 3.0) {
  return builtin_curve("euler_spiral", {{"lo", lo}, {"hi", hi}});
}
inline PlaneCurve elastica() { return builtin_curve("elastica"); }
inline PlaneCurve vertex_curve(double lo = -2.0, double hi = 2.0) {
  return builtin_curve("kappa_1_plus_s2", {{"lo", lo}, {"hi", hi}});
}
inline PlaneCurve unit_circle() { return builtin_curve("circle"); }

/// Segments with the base point pinned at s = 0 (the inflection or vertex).
inline std::vector<CurveSegment> segments_based_at_zero(const PlaneCurve& c) {
  return stratify(c, {}, {0.0});
}

inline PlaneCurve parametric(const char* x, const char* y, Interval dom, const char* var = "t") {
  return PlaneCurve(std::make_shared<ParametricModel>(Expression::parse(x, var),
                                                      Expression::parse(y, var), dom,
                                                      std::string(x) + "," + y));
}

inline PlaneCurve translated(const PlaneCurve& c, Vec2 offset) {
  return PlaneCurve(std::make_shared<TranslatedModel>(c.model_ptr(), offset), c.tolerances());
}

inline SurfaceOfRevolution euler_surface() {
  SurfaceOptions o;
  o.segments.base_s = 0.0;
  return revolve(translated(euler_spiral(-2.4, 2.4), {2.0, 0.0}), o);
}

inline SurfaceOfRevolution vertex_surface() {
  SurfaceOptions o;
  o.segments.base_s = 0.0;
  return revolve(curve_from_curvature_arclength(Expression::parse("1 + s^2", "s"), {-1.5, 1.5},
                                                {2.0, 0.0}, std::numbers::pi / 2),
                 o);
}

/// Unit sphere: meridian semicircle (cos v, sin v), v in (-pi/2, pi/2)
/// trimmed away from the poles.
inline SurfaceOfRevolution unit_sphere() {
  const double lim = std::numbers::pi / 2 - 1e-3;
  return revolve(parametric("cos(v)", "sin(v)", {-lim, lim}, "v"));
}

/// Torus with tube radius r = 1 at distance R = 3; v = 0 is the outermost
/// circle.
inline SurfaceOfRevolution torus() {
  return revolve(parametric("3 + cos(v)", "sin(v)", {-std::numbers::pi, std::numbers::pi}, "v"));
}

// Real root of s^3/3 + s = theta (Cardano), written in the expression grammar.
inline constexpr const char* kSOfTheta =
    "(2^(1/3) / (sqrt(9*theta^2 + 4) - 3*theta)^(1/3) - "
    "(sqrt(9*theta^2 + 4) - 3*theta)^(1/3) / 2^(1/3))";

inline double cardano(double theta) {
  const double a = std::sqrt(9 * theta * theta + 4) - 3 * theta;
  return std::cbrt(2.0) / std::cbrt(a) - std::cbrt(a) / std::cbrt(2.0);
}

// Signed curvature from positions only: five-point stencils in s.
inline double fd_curvature(const PlaneCurve& c, double s, double h = 1e-3) {
  const auto p = [&](double u) { return c.frame_at_s(u).position; };
  const Vec2 pm2 = p(s - 2 * h), pm1 = p(s - h), p0 = p(s), pp1 = p(s + h), pp2 = p(s + 2 * h);
  const Vec2 d1 = (pm2 - pp2 + 8.0 * (pp1 - pm1)) * (1.0 / (12 * h));
  const Vec2 d2 = (-1.0 * pm2 + 16.0 * pm1 - 30.0 * p0 + 16.0 * pp1 - pp2) * (1.0 / (12 * h * h));
  return cross(d1, d2) / std::pow(norm(d1), 3);
}

}  // namespace fixtures
