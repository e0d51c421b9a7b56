#include "brach/perturbation.hpp"

#include <cmath>

#include "brach/errors.hpp"
#include "brach/numeric.hpp"

namespace brach {

double cubic_bspline(double u) {
  if (u <= 0.0 || u >= 4.0) return 0.0;
  if (u < 1.0) return u * u * u / 6.0;
  if (u < 2.0) return (-3.0 * u * u * u + 12.0 * u * u - 12.0 * u + 4.0) / 6.0;
  if (u < 3.0) return (3.0 * u * u * u - 24.0 * u * u + 60.0 * u - 44.0) / 6.0;
  const double w = 4.0 - u;
  return w * w * w / 6.0;
}

double cubic_bspline_derivative(double u) {
  if (u <= 0.0 || u >= 4.0) return 0.0;
  if (u < 1.0) return u * u / 2.0;
  if (u < 2.0) return (-9.0 * u * u + 24.0 * u - 12.0) / 6.0;
  if (u < 3.0) return (9.0 * u * u - 48.0 * u + 60.0) / 6.0;
  const double w = 4.0 - u;
  return -w * w / 2.0;
}

Perturbation make_admissible_perturbation(unsigned long long seed, double cutoff, double b,
                                          double amplitude, const Mesh& mesh) {
  if (!(cutoff > 0.0) || !(cutoff < b))
    throw ArgumentError("make_admissible_perturbation: need 0 < cutoff < b");
  if (amplitude < 0.0)
    throw ArgumentError("make_admissible_perturbation: amplitude must be >= 0");

  constexpr int kSegments = 12;  // knot intervals; kSegments-3 interior splines
  const double h = (b - cutoff) / kSegments;

  std::vector<double> coeff(kSegments - 3, 0.0);
  if (amplitude > 0.0) {
    SplitMix64 rng(seed);
    double max_abs = 0.0;
    for (double& c : coeff) {
      c = rng.uniform(-1.0, 1.0);
      max_abs = std::fmax(max_abs, std::fabs(c));
    }
    // partition of unity bounds sup|v| by max|coeff|
    if (max_abs > 0.0)
      for (double& c : coeff) c *= amplitude / max_abs;
  }

  Perturbation v;
  v.cutoff = cutoff;
  v.b = b;
  v.knots.resize(kSegments + 1);
  for (int j = 0; j <= kSegments; ++j) v.knots[static_cast<std::size_t>(j)] = cutoff + h * j;
  v.knots.back() = b;

  auto value = [cutoff, h, coeff](double t) {
    double s = 0.0;
    const double u = (t - cutoff) / h;
    for (std::size_t i = 0; i < coeff.size(); ++i)
      s += coeff[i] * cubic_bspline(u - static_cast<double>(i));
    return s;
  };
  auto slope = [cutoff, h, coeff](double t) {
    double s = 0.0;
    const double u = (t - cutoff) / h;
    for (std::size_t i = 0; i < coeff.size(); ++i)
      s += coeff[i] * cubic_bspline_derivative(u - static_cast<double>(i));
    return s / h;
  };
  v.value_fn = value;
  v.slope_fn = slope;

  v.node_values.resize(mesh.nodes.size());
  v.node_slopes.resize(mesh.nodes.size());
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    v.node_values[i] = value(mesh.nodes[i]);
    v.node_slopes[i] = slope(mesh.nodes[i]);
  }
  return v;
}

SampledCurve perturbed_curve(const SampledCurve& curve, const Perturbation& v, double h) {
  if (v.node_values.size() != curve.values.size())
    throw ArgumentError("perturbed_curve: perturbation was sampled on a different mesh");
  SampledCurve out = curve;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] += h * v.node_values[i];
    out.slopes[i] += h * v.node_slopes[i];
  }
  const auto base_v = [c = curve](double t) { return c.value(t); };
  const auto base_s = [c = curve](double t) { return c.slope(t); };
  out.value_fn = [base_v, v, h](double t) { return base_v(t) + h * v.value(t); };
  out.slope_fn = [base_s, v, h](double t) { return base_s(t) + h * v.slope(t); };
  return out;
}

}  // namespace brach
