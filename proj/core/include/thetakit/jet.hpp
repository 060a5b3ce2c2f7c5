#pragma once

#include <array>
#include <cstddef>

namespace thetakit {

/// Truncated Taylor expansion of a scalar function at a point, stored as
/// derivatives: d[0] is the value, d[k] the k-th derivative (k <= 3).
///
/// Arithmetic propagates the product, quotient and chain rules exactly up to
/// third order, so a jet seeded with `Jet::variable(x)` carries f(x), f'(x),
/// f''(x) and f'''(x) through any composition of the supported operations.
struct Jet {
  static constexpr std::size_t kOrder = 3;

  std::array<double, kOrder + 1> d{0.0, 0.0, 0.0, 0.0};

  constexpr Jet() = default;
  constexpr Jet(double v0, double v1, double v2, double v3) : d{v0, v1, v2, v3} {}

  static constexpr Jet constant(double value) { return {value, 0.0, 0.0, 0.0}; }
  static constexpr Jet variable(double at) { return {at, 1.0, 0.0, 0.0}; }

  constexpr double value() const { return d[0]; }
  constexpr double operator[](std::size_t k) const { return d[k]; }
  constexpr double& operator[](std::size_t k) { return d[k]; }

  /// Composes an outer scalar function with this jet. `phi` holds the outer
  /// function's value and first three derivatives evaluated at value().
  Jet compose(const std::array<double, 4>& phi) const;
};

Jet operator-(const Jet& a);
Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);

Jet operator*(double k, const Jet& a);

/// a^n for an integer exponent; valid for negative bases.
Jet pow_int(const Jet& a, int n);
/// a^p for a real constant exponent; a must be positive unless derivatives
/// stay finite.
Jet pow_real(const Jet& a, double p);
/// a^b with a non-constant exponent, via exp(b log a).
Jet pow_jet(const Jet& a, const Jet& b);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet tan(const Jet& a);
Jet asin(const Jet& a);
Jet acos(const Jet& a);
Jet atan(const Jet& a);
Jet sqrt(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet abs(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet tanh(const Jet& a);

}  // namespace thetakit
