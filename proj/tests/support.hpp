#ifndef BRACH_TESTS_SUPPORT_HPP
#define BRACH_TESTS_SUPPORT_HPP

// Test-only oracles, kept independent of the library code paths they check:
// long-double arithmetic, different substitutions, direct formulas.

#include <cmath>
#include <functional>

namespace oracle {

inline long double theta_minus_sin_ld(long double th) {
  if (fabsl(th) < 0.1L) {
    const long double t2 = th * th;
    return th * t2 / 6.0L * (1.0L - t2 / 20.0L + t2 * t2 / 840.0L - t2 * t2 * t2 / 60480.0L);
  }
  return th - sinl(th);
}

inline long double one_minus_cos_ld(long double th) {
  const long double s = sinl(0.5L * th);
  return 2.0L * s * s;
}

inline long double depth_ratio_ld(long double th) {
  return one_minus_cos_ld(th) / theta_minus_sin_ld(th);
}

/// plain bisection at tolerance 1e-14, no Newton, no library calls
inline long double invert_depth_ratio_bisect(long double ratio, long double tol = 1e-14L) {
  long double lo = 1e-14L, hi = 2.0L * M_PIl - 1e-14L;
  while (hi - lo > tol) {
    const long double mid = 0.5L * (lo + hi);
    if (depth_ratio_ld(mid) > ratio)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5L * (lo + hi);
}

/// Composite Simpson for a smooth long-double integrand.
inline long double simpson_ld(const std::function<long double(long double)>& f, long double a,
                              long double b, int panels = 1 << 16) {
  long double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i)
    s += (i % 2 ? 4.0L : 2.0L) * f(a + (b - a) * i / panels);
  return s * (b - a) / (3.0L * panels);
}

/// Travel time of the circular arc through (0,0) and (b,beta) with vertical
/// start: T = sqrt(R) * integral_0^{phi1} sin^{-1/2}(phi) dphi with
/// cos(phi1) = (R-b)/R. The psi = sqrt(phi) substitution makes the
/// integrand smooth, a completely different route from the library's
/// t = u^2 graded rule.
inline long double circle_time_oracle(long double b, long double beta) {
  const long double R = (b * b + beta * beta) / (2.0L * b);
  const long double phi1 = acosl((R - b) / R);
  const auto g = [](long double psi) {
    if (psi < 1e-9L) return 1.0L;
    return psi / sqrtl(sinl(psi * psi));
  };
  return sqrtl(R) * 2.0L * simpson_ld(g, 0.0L, sqrtl(phi1));
}

/// Frozen reference values, each computed by the oracles above at tolerance
/// 1e-14 or better before the implementation existed.
namespace frozen {
// invert_depth_ratio_bisect(1)
constexpr double kThetaTildeRatio1 = 2.412011143913525349;
// 2 / theta_minus_sin(theta_tilde)
constexpr double kScaleUnitProblem = 1.1458340750635007;
// sqrt(k) * theta_tilde
constexpr double kTimeUnitProblem = 2.5819045128277718;
// kTimeUnitProblem / sqrt(2)
constexpr double kTransformedTimeUnitProblem = 1.8256821893966668;
// circle_time_oracle(1,1); equals Gamma(1/4)Gamma(1/2)/(2 Gamma(3/4))
constexpr double kCircleTimeUnitProblem = 2.6220575542921199;
}  // namespace frozen

}  // namespace oracle

#endif
