#include "brach/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "brach/errors.hpp"
#include "brach/numeric.hpp"

namespace brach {

namespace {

constexpr double kBoundaryTol = 1e-9;

std::size_t cell_index(const std::vector<double>& nodes, double t) {
  // largest i with nodes[i] <= t, clamped to [0, n-1]
  auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
  std::size_t i = static_cast<std::size_t>(it - nodes.begin());
  if (i > 0) --i;
  if (i + 1 >= nodes.size()) i = nodes.size() - 2;
  return i;
}

double first_cell_exponent(const Mesh& mesh, const std::vector<double>& values,
                           const std::vector<double>& slopes) {
  const double t1 = mesh.nodes[1];
  const double v1 = values[1];
  if (!(v1 > 0.0)) return 1.0;
  const double p = t1 * slopes[1] / v1;
  return std::clamp(p, 0.05, 20.0);
}

}  // namespace

double interp_value(const Mesh& mesh, const std::vector<double>& values,
                    const std::vector<double>& slopes, double t) {
  const auto& nodes = mesh.nodes;
  if (t <= 0.0) return values[0];
  if (t >= mesh.b) return values.back();
  if (t <= nodes[1]) {
    const double p = first_cell_exponent(mesh, values, slopes);
    return values[1] * std::pow(t / nodes[1], p);
  }
  const std::size_t i = cell_index(nodes, t);
  const double h = nodes[i + 1] - nodes[i];
  const double x = (t - nodes[i]) / h;
  const double x2 = x * x, x3 = x2 * x;
  const double s0 = slopes[i] * h, s1 = slopes[i + 1] * h;
  return (2 * x3 - 3 * x2 + 1) * values[i] + (x3 - 2 * x2 + x) * s0 +
         (-2 * x3 + 3 * x2) * values[i + 1] + (x3 - x2) * s1;
}

double interp_slope(const Mesh& mesh, const std::vector<double>& values,
                    const std::vector<double>& slopes, double t) {
  const auto& nodes = mesh.nodes;
  if (t >= mesh.b) return slopes.back();
  if (t <= nodes[1]) {
    const double p = first_cell_exponent(mesh, values, slopes);
    const double tt = std::fmax(t, std::numeric_limits<double>::min());
    return p * values[1] / nodes[1] * std::pow(tt / nodes[1], p - 1.0);
  }
  const std::size_t i = cell_index(nodes, t);
  const double h = nodes[i + 1] - nodes[i];
  const double x = (t - nodes[i]) / h;
  const double x2 = x * x;
  const double s0 = slopes[i] * h, s1 = slopes[i + 1] * h;
  return ((6 * x2 - 6 * x) * values[i] + (3 * x2 - 4 * x + 1) * s0 +
          (-6 * x2 + 6 * x) * values[i + 1] + (3 * x2 - 2 * x) * s1) /
         h;
}

double SampledCurve::value(double t) const {
  if (value_fn) return value_fn(t);
  return interp_value(mesh, values, slopes, t);
}

double SampledCurve::slope(double t) const {
  if (slope_fn) return slope_fn(t);
  return interp_slope(mesh, values, slopes, t);
}

void check_membership(const SampledCurve& curve, double beta) {
  const double scale = std::fmax(1.0, std::fabs(beta));
  if (std::fabs(curve.values.front()) > kBoundaryTol * scale)
    throw ArgumentError("curve must start at gamma(0) = 0");
  if (std::fabs(curve.values.back() - beta) > kBoundaryTol * scale)
    throw ArgumentError("curve must end at gamma(b) = beta");
  for (std::size_t i = 1; i < curve.values.size(); ++i)
    if (!(curve.values[i] > 0.0))
      throw ArgumentError("curve must be strictly positive on (0,b], node " +
                          std::to_string(i));
  for (std::size_t i = 1; i < curve.slopes.size(); ++i)
    if (!std::isfinite(curve.slopes[i]))
      throw ArgumentError("curve slope not finite at node " + std::to_string(i));
}

bool is_member(const SampledCurve& curve, double beta) {
  try {
    check_membership(curve, beta);
    return true;
  } catch (const ArgumentError&) {
    return false;
  }
}

SampledCurve line_curve(double b, double beta, const Mesh& mesh) {
  if (!(b > 0.0) || !(beta > 0.0)) throw ArgumentError("line_curve: b, beta must be > 0");
  if (mesh.b != b) throw ArgumentError("line_curve: mesh endpoint differs from b");
  SampledCurve c;
  c.mesh = mesh;
  c.kind = CandidateKind::Line;
  const std::size_t np = mesh.nodes.size();
  c.values.resize(np);
  c.slopes.resize(np);
  const double m = beta / b;
  for (std::size_t i = 0; i < np; ++i) {
    c.values[i] = beta * (mesh.nodes[i] / b);  // exact beta at t_n
    c.slopes[i] = m;
  }
  c.slopes[0] = std::numeric_limits<double>::quiet_NaN();
  c.value_fn = [m](double t) { return m * t; };
  c.slope_fn = [m](double) { return m; };
  return c;
}

SampledCurve circle_curve(double b, double beta, const Mesh& mesh) {
  if (!(b > 0.0) || !(beta > 0.0)) throw ArgumentError("circle_curve: b, beta must be > 0");
  if (mesh.b != b) throw ArgumentError("circle_curve: mesh endpoint differs from b");
  const double R = (b * b + beta * beta) / (2.0 * b);
  SampledCurve c;
  c.mesh = mesh;
  c.kind = CandidateKind::CircleArc;
  const std::size_t np = mesh.nodes.size();
  c.values.resize(np);
  c.slopes.resize(np);
  for (std::size_t i = 0; i < np; ++i) {
    const double t = mesh.nodes[i];
    c.values[i] = std::sqrt(t * (2.0 * R - t));
    c.slopes[i] = i == 0 ? std::numeric_limits<double>::quiet_NaN()
                         : (R - t) / c.values[i];
  }
  c.values[np - 1] = beta;  // pin the endpoint; 2Rb - b^2 = beta^2 only up to rounding
  c.slopes[np - 1] = (R - b) / beta;
  c.value_fn = [R](double t) { return std::sqrt(t * (2.0 * R - t)); };
  c.slope_fn = [R](double t) { return (R - t) / std::sqrt(t * (2.0 * R - t)); };
  return c;
}

std::vector<double> difference_slopes(const Mesh& mesh, const std::vector<double>& values) {
  std::vector<double> s(values.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 1; i < values.size(); ++i)
    s[i] = nonuniform_derivative(mesh.nodes, values, i);
  return s;
}

}  // namespace brach
