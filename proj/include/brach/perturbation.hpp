#ifndef BRACH_PERTURBATION_HPP
#define BRACH_PERTURBATION_HPP

#include <functional>
#include <vector>

#include "brach/curve.hpp"
#include "brach/mesh.hpp"

namespace brach {

/// Admissible direction for the improper-integral functional: a C^1 (in
/// fact C^2) bump vanishing identically on [0, cutoff] and at b, built from
/// cubic B-splines on a uniform knot grid over [cutoff, b].
struct Perturbation {
  double cutoff = 0.0;
  double b = 0.0;
  std::vector<double> knots;        // piecewise-polynomial boundaries
  std::vector<double> node_values;  // v on the mesh
  std::vector<double> node_slopes;  // v' on the mesh
  std::function<double(double)> value_fn;
  std::function<double(double)> slope_fn;

  double value(double t) const { return value_fn(t); }
  double slope(double t) const { return slope_fn(t); }
};

/// Cardinal cubic B-spline on [0,4] (partition of unity) and its derivative.
double cubic_bspline(double u);
double cubic_bspline_derivative(double u);

/// Deterministic pseudo-random admissible bump with sup|v| <= amplitude.
/// Coefficients come from a seeded generator; amplitude 0 gives v = 0.
Perturbation make_admissible_perturbation(unsigned long long seed, double cutoff, double b,
                                          double amplitude, const Mesh& mesh);

/// Curve gamma + h*v with values, slopes and evaluators all shifted.
SampledCurve perturbed_curve(const SampledCurve& curve, const Perturbation& v, double h);

}  // namespace brach

#endif
