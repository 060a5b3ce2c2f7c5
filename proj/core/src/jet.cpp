#include "thetakit/jet.hpp"

#include <cmath>
#include <limits>

namespace thetakit {

Jet Jet::compose(const std::array<double, 4>& phi) const {
  // Faa di Bruno up to third order.
  const double f1 = d[1], f2 = d[2], f3 = d[3];
  return {phi[0],
          phi[1] * f1,
          phi[2] * f1 * f1 + phi[1] * f2,
          phi[3] * f1 * f1 * f1 + 3.0 * phi[2] * f1 * f2 + phi[1] * f3};
}

Jet operator-(const Jet& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

Jet operator+(const Jet& a, const Jet& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Jet operator-(const Jet& a, const Jet& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Jet operator*(const Jet& a, const Jet& b) {
  return {a[0] * b[0],
          a[1] * b[0] + a[0] * b[1],
          a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2],
          a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3]};
}

Jet operator*(double k, const Jet& a) { return {k * a[0], k * a[1], k * a[2], k * a[3]}; }

Jet operator/(const Jet& a, const Jet& b) {
  // Solve q * b = a term by term.
  Jet q;
  q[0] = a[0] / b[0];
  q[1] = (a[1] - q[0] * b[1]) / b[0];
  q[2] = (a[2] - 2.0 * q[1] * b[1] - q[0] * b[2]) / b[0];
  q[3] = (a[3] - 3.0 * q[2] * b[1] - 3.0 * q[1] * b[2] - q[0] * b[3]) / b[0];
  return q;
}

namespace {

// k-th derivative of x^p at x, skipping the power when the falling factorial
// is zero (so 0^negative never appears for polynomial terms).
double power_derivative(double x, double p, int k) {
  double coeff = 1.0;
  for (int i = 0; i < k; ++i) coeff *= (p - i);
  if (coeff == 0.0) return 0.0;
  return coeff * std::pow(x, p - k);
}

}  // namespace

Jet pow_int(const Jet& a, int n) {
  const double x = a[0];
  const double p = static_cast<double>(n);
  return a.compose({std::pow(x, p), power_derivative(x, p, 1), power_derivative(x, p, 2),
                    power_derivative(x, p, 3)});
}

Jet pow_real(const Jet& a, double p) {
  const double x = a[0];
  if (x < 0.0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, nan, nan};
  }
  return a.compose({std::pow(x, p), power_derivative(x, p, 1), power_derivative(x, p, 2),
                    power_derivative(x, p, 3)});
}

Jet pow_jet(const Jet& a, const Jet& b) {
  Jet r = exp(b * log(a));
  r[0] = std::pow(a[0], b[0]);
  return r;
}

Jet sin(const Jet& a) {
  const double s = std::sin(a[0]), c = std::cos(a[0]);
  return a.compose({s, c, -s, -c});
}

Jet cos(const Jet& a) {
  const double s = std::sin(a[0]), c = std::cos(a[0]);
  return a.compose({c, -s, -c, s});
}

Jet tan(const Jet& a) {
  const double t = std::tan(a[0]);
  const double sec2 = 1.0 + t * t;
  return a.compose({t, sec2, 2.0 * t * sec2, sec2 * (2.0 + 6.0 * t * t)});
}

Jet asin(const Jet& a) {
  const double x = a[0];
  const double w = 1.0 - x * x;
  const double r = 1.0 / std::sqrt(w);
  return a.compose({std::asin(x), r, x * r * r * r, (1.0 + 2.0 * x * x) * r * r * r * r * r});
}

Jet acos(const Jet& a) {
  const double x = a[0];
  const double w = 1.0 - x * x;
  const double r = 1.0 / std::sqrt(w);
  return a.compose(
      {std::acos(x), -r, -x * r * r * r, -(1.0 + 2.0 * x * x) * r * r * r * r * r});
}

Jet atan(const Jet& a) {
  const double x = a[0];
  const double w = 1.0 / (1.0 + x * x);
  return a.compose({std::atan(x), w, -2.0 * x * w * w, (6.0 * x * x - 2.0) * w * w * w});
}

Jet sqrt(const Jet& a) {
  const double r = std::sqrt(a[0]);
  return a.compose({r, 0.5 / r, -0.25 / (r * r * r), 0.375 / (r * r * r * r * r)});
}

Jet exp(const Jet& a) {
  const double e = std::exp(a[0]);
  return a.compose({e, e, e, e});
}

Jet log(const Jet& a) {
  const double x = a[0];
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (x <= 0.0) return {nan, nan, nan, nan};
  return a.compose({std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)});
}

Jet abs(const Jet& a) {
  const double x = a[0];
  if (x == 0.0) {
    // The kink: value is fine, every derivative is undefined.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {0.0, nan, nan, nan};
  }
  const double sign = x > 0.0 ? 1.0 : -1.0;
  return a.compose({std::fabs(x), sign, 0.0, 0.0});
}

Jet sinh(const Jet& a) {
  const double s = std::sinh(a[0]), c = std::cosh(a[0]);
  return a.compose({s, c, s, c});
}

Jet cosh(const Jet& a) {
  const double s = std::sinh(a[0]), c = std::cosh(a[0]);
  return a.compose({c, s, c, s});
}

Jet tanh(const Jet& a) {
  const double t = std::tanh(a[0]);
  const double w = 1.0 - t * t;
  return a.compose({t, w, -2.0 * t * w, (6.0 * t * t - 2.0) * w});
}

}  // namespace thetakit
