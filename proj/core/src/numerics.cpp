#include "thetakit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thetakit/error.hpp"

namespace thetakit {

void ToleranceConfig::validate() const {
  if (!(quad_tol > 0.0) || !(root_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  }
  if (grid_n < 16) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 16");
  if (max_depth < 1) throw Error(ErrorCode::InvalidArgument, "max_depth must be positive");
}

namespace {

constexpr int kMinDepth = 2;
constexpr double kGridZero = 1e-14;

double sample(const ScalarFn& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::DomainError, "integrand not finite at " + std::to_string(x));
  }
  return v;
}

struct Simpson {
  const ScalarFn& f;
  int max_depth;

  double recurse(double a, double fa, double m, double fm, double b, double fb, double whole,
                 double eps, int depth) const {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = sample(f, lm);
    const double frm = sample(f, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    const bool converged =
        std::fabs(delta) <= 15.0 * eps ||
        std::fabs(delta) <= 64.0 * std::numeric_limits<double>::epsilon() *
                                (std::fabs(left) + std::fabs(right));
    if (depth >= kMinDepth && converged) return left + right + delta / 15.0;
    if (depth >= max_depth) {
      throw Error(ErrorCode::DepthExceeded,
                  "quadrature did not converge near [" + std::to_string(a) + ", " +
                      std::to_string(b) + "]");
    }
    return recurse(a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1) +
           recurse(m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1);
  }
};

}  // namespace

double integrate_adaptive(const ScalarFn& f, double a, double b, const ToleranceConfig& cfg) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_adaptive(f, b, a, cfg);

  const double m = 0.5 * (a + b);
  const double fa = sample(f, a);
  const double fm = sample(f, m);
  const double fb = sample(f, b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double eps = cfg.quad_tol * (1.0 + std::fabs(whole));
  return Simpson{f, cfg.max_depth}.recurse(a, fa, m, fm, b, fb, whole, eps, 0);
}

std::vector<double> find_roots(const ScalarFn& f, double a, double b,
                               const ToleranceConfig& cfg) {
  if (a > b) std::swap(a, b);
  const int n = cfg.grid_n;
  std::vector<double> xs(static_cast<std::size_t>(n) + 1);
  std::vector<double> fs(xs.size());
  for (int i = 0; i <= n; ++i) {
    xs[i] = i == n ? b : a + (b - a) * static_cast<double>(i) / n;
    fs[i] = f(xs[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i <= n; ++i) {
    if (std::fabs(fs[i]) < kGridZero) {
      roots.push_back(xs[i]);
      continue;
    }
    if (i == n || std::fabs(fs[i + 1]) < kGridZero) continue;
    if ((fs[i] < 0.0) == (fs[i + 1] < 0.0)) continue;

    double lo = xs[i], hi = xs[i + 1];
    double flo = fs[i];
    while (hi - lo > cfg.root_tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fmid = f(mid);
      if (fmid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fmid < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || r - unique.back() > 10.0 * cfg.root_tol) unique.push_back(r);
  }
  return unique;
}

double invert_monotone(const ScalarFn& F, double y, double a, double b,
                       const ToleranceConfig& cfg) {
  return invert_monotone(F, y, a, b, F(a), F(b), cfg);
}

double invert_monotone(const ScalarFn& F, double y, double a, double b, double fa, double fb,
                       const ToleranceConfig& cfg) {
  const double lo_img = std::min(fa, fb);
  const double hi_img = std::max(fa, fb);
  if (!(y >= lo_img && y <= hi_img)) {
    throw RangeError(ErrorCode::OutOfRange, y, lo_img, hi_img, "target value");
  }
  if (y == fa) return a;
  if (y == fb) return b;

  // Bracket [lo, hi] with g = F - y changing sign; Illinois-modified secant
  // falls back to bisection whenever the secant step stalls or leaves the
  // bracket.
  double lo = a, hi = b;
  double glo = fa - y, ghi = fb - y;
  int side = 0;
  for (int iter = 0; iter < 200; ++iter) {
    if (hi - lo <= cfg.root_tol) break;
    double x = lo - glo * (hi - lo) / (ghi - glo);
    const double width = hi - lo;
    if (!(x > lo && x < hi) || iter % 4 == 3) x = 0.5 * (lo + hi);
    const double gx = F(x) - y;
    if (gx == 0.0) return x;
    if ((gx < 0.0) == (glo < 0.0)) {
      lo = x;
      glo = gx;
      if (side == -1) ghi *= 0.5;
      side = -1;
    } else {
      hi = x;
      ghi = gx;
      if (side == 1) glo *= 0.5;
      side = 1;
    }
    if (hi - lo > 0.5 * width && iter % 4 != 3) {
      // Secant made poor progress; force bisection next round.
      const double mid = 0.5 * (lo + hi);
      const double gm = F(mid) - y;
      if (gm == 0.0) return mid;
      if ((gm < 0.0) == (glo < 0.0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
        ghi = gm;
      }
      side = 0;
    }
  }
  // Return the endpoint with the smaller residual.
  return std::fabs(glo) <= std::fabs(ghi) ? lo : hi;
}

}  // namespace thetakit
