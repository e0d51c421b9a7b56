#ifndef BRACH_CURVE_HPP
#define BRACH_CURVE_HPP

#include <functional>
#include <string>
#include <vector>

#include "brach/mesh.hpp"

namespace brach {

enum class CandidateKind { Line, CircleArc, Cycloid, FromFile };

/// A curve on [0,b] with gamma(0) = 0, gamma(b) = beta and gamma > 0 on
/// (0,b]. Node values and slopes live on the mesh; slopes are undefined at
/// t = 0 (slopes[0] is NaN). Curves built from closed forms carry analytic
/// evaluators; otherwise off-node evaluation interpolates (cubic Hermite,
/// with a power-law model gamma ~ c*t^p on the first cell so the
/// singular-end behaviour survives interpolation).
struct SampledCurve {
  Mesh mesh;
  std::vector<double> values;
  std::vector<double> slopes;
  CandidateKind kind = CandidateKind::FromFile;

  std::function<double(double)> value_fn;  // optional analytic evaluators
  std::function<double(double)> slope_fn;

  double beta() const { return values.back(); }

  /// gamma(t) for t in [0, b]
  double value(double t) const;
  /// gamma'(t) for t in (0, b]
  double slope(double t) const;
};

/// Structural membership in the admissible set: boundary values and
/// interior positivity (tolerance 1e-9 on the endpoints). Throws
/// ArgumentError naming the first violated condition.
void check_membership(const SampledCurve& curve, double beta);
bool is_member(const SampledCurve& curve, double beta);

/// gamma(t) = (beta/b) t.
SampledCurve line_curve(double b, double beta, const Mesh& mesh);

/// Circular arc through (0,0) and (b,beta) with vertical tangent at the
/// origin: gamma(t) = sqrt(2Rt - t^2), R = (b^2+beta^2)/(2b).
SampledCurve circle_curve(double b, double beta, const Mesh& mesh);

/// Central-difference slopes on the curve's own mesh (interior 3-point
/// stencil, one-sided at t = b). Used for file curves and mapped-back
/// minimizer output.
std::vector<double> difference_slopes(const Mesh& mesh, const std::vector<double>& values);

/// Interpolated evaluation helpers shared with the transformed problem.
double interp_value(const Mesh& mesh, const std::vector<double>& values,
                    const std::vector<double>& slopes, double t);
double interp_slope(const Mesh& mesh, const std::vector<double>& values,
                    const std::vector<double>& slopes, double t);

}  // namespace brach

#endif
