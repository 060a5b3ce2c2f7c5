#pragma once

#include <functional>
#include <vector>

namespace thetakit {

struct ToleranceConfig {
  double quad_tol = 1e-10;  ///< mixed absolute/relative quadrature tolerance
  double root_tol = 1e-12;  ///< abscissa tolerance for root finding and inversion
  int grid_n = 512;         ///< sampling intervals used to bracket roots
  int max_depth = 40;       ///< quadrature recursion cap

  /// Throws Error{InvalidArgument} unless all tolerances are positive and
  /// grid_n >= 16.
  void validate() const;
};

using ScalarFn = std::function<double(double)>;

/// Adaptive Simpson quadrature with Richardson acceptance. The result is
/// antisymmetric in the limits. Throws Error{DepthExceeded} when the
/// recursion cap is hit and Error{DomainError} when f is not finite.
double integrate_adaptive(const ScalarFn& f, double a, double b,
                          const ToleranceConfig& cfg = {});

/// Roots of f on [a, b]: sign changes on a grid of cfg.grid_n intervals are
/// refined by bisection, and grid points with |f| < 1e-14 are reported as
/// they are. The result is strictly increasing.
std::vector<double> find_roots(const ScalarFn& f, double a, double b,
                               const ToleranceConfig& cfg = {});

/// x in [a, b] with F(x) = y for strictly monotone F, by secant steps
/// safeguarded with bisection. Throws RangeError{OutOfRange} carrying the
/// image interval when y is not attained.
double invert_monotone(const ScalarFn& F, double y, double a, double b,
                       const ToleranceConfig& cfg = {});

/// Same, with F(a) and F(b) already known.
double invert_monotone(const ScalarFn& F, double y, double a, double b, double fa, double fb,
                       const ToleranceConfig& cfg = {});

}  // namespace thetakit
