#ifndef BRACH_NUMERIC_HPP
#define BRACH_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace brach {

/// 2*sin^2(theta/2); equals 1-cos(theta) without cancellation near 0 and 2*pi.
inline double one_minus_cos(double theta) {
  const double s = std::sin(0.5 * theta);
  return 2.0 * s * s;
}

/// theta - sin(theta), series-evaluated for small theta where the direct
/// difference loses ~theta^2/6 of its digits.
inline double theta_minus_sin(double theta) {
  if (std::fabs(theta) < 0.1) {
    const double t2 = theta * theta;
    return theta * t2 / 6.0 *
           (1.0 - t2 / 20.0 + t2 * t2 / 840.0 - t2 * t2 * t2 / 60480.0);
  }
  return theta - std::sin(theta);
}

/// theta*sin(theta) - 2 + 2*cos(theta); series for small theta (leading
/// term -theta^4/12).
inline double theta_sin_minus_two_plus_two_cos(double theta) {
  if (std::fabs(theta) < 0.1) {
    const double t2 = theta * theta;
    return -t2 * t2 / 12.0 * (1.0 - t2 / 15.0 + t2 * t2 / 560.0);
  }
  return theta * std::sin(theta) - 2.0 + 2.0 * std::cos(theta);
}

/// Deterministic cross-platform RNG (splitmix64). std::uniform_* are
/// implementation-defined, so seeded reports would not reproduce across
/// standard libraries.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// uniform in [lo,hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

/// Second-order first-derivative stencil at node i of a non-uniform grid.
/// Interior nodes use the three-point central formula; the last node uses
/// the one-sided backward formula. Node 0 is not supported.
double nonuniform_derivative(const std::vector<double>& x, const std::vector<double>& f,
                             std::size_t i);

/// Compensated (Kahan) accumulator; keeps long objective/quadrature sums
/// near 1 ulp instead of O(n) ulp.
class KahanSum {
public:
  void add(double v) {
    const double y = v - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace brach

#endif
