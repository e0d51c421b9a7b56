#include "brach/cycloid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "brach/errors.hpp"
#include "brach/numeric.hpp"

namespace brach {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kClassTol = 1e-9;  // |theta_tilde - pi| below this is "at the endpoint"

void require_problem(const BrachProblem& p) {
  if (!(p.b > 0.0) || !(p.beta > 0.0))
    throw ArgumentError("brachistochrone problem needs b > 0 and beta > 0");
}

}  // namespace

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::StrictlyIncreasing: return "StrictlyIncreasing";
    case CurveClass::MaxAtEndpoint: return "MaxAtEndpoint";
    case CurveClass::RisesThenFalls: return "RisesThenFalls";
  }
  return "?";
}

double depth_ratio(double theta) {
  if (!(theta > 0.0) || !(theta < kTwoPi))
    throw ArgumentError("depth_ratio: theta must lie in (0, 2pi)");
  return one_minus_cos(theta) / theta_minus_sin(theta);
}

double depth_ratio_derivative(double theta) {
  if (!(theta > 0.0) || !(theta < kTwoPi))
    throw ArgumentError("depth_ratio_derivative: theta must lie in (0, 2pi)");
  const double d = theta_minus_sin(theta);
  return theta_sin_minus_two_plus_two_cos(theta) / (d * d);
}

double invert_depth_ratio(double ratio, double tol) {
  if (!(ratio > 0.0)) throw ArgumentError("invert_depth_ratio: ratio must be > 0");
  if (!(tol > 0.0)) throw ArgumentError("invert_depth_ratio: tol must be > 0");

  // depth_ratio ~ 3/theta near 0, so pull the lower bracket end below the
  // root for extreme ratios instead of hard-coding one epsilon
  double lo = std::fmin(1e-9, 1.0 / ratio);
  while (depth_ratio(lo) < ratio) lo *= 0.5;
  double hi = kTwoPi - 1e-12;
  if (depth_ratio(hi) > ratio) return hi;  // ratio below anything representable

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (depth_ratio(mid) > ratio)
      lo = mid;
    else
      hi = mid;
  }
  // Newton polish; the root stays bracketed by construction
  double theta = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double step = (depth_ratio(theta) - ratio) / depth_ratio_derivative(theta);
    const double next = theta - step;
    if (!(next > lo) || !(next < hi)) break;
    theta = next;
  }
  return theta;
}

BrachSolution solve(const BrachProblem& p) {
  require_problem(p);
  const double theta = invert_depth_ratio(p.beta / p.b);
  const double k_from_b = 2.0 * p.b / theta_minus_sin(theta);
  const double k_from_beta = 2.0 * p.beta / one_minus_cos(theta);
  if (std::fabs(k_from_b - k_from_beta) > 1e-9 * std::fmax(k_from_b, k_from_beta))
    throw InvariantError("solve: the two endpoint relations disagree on k");

  BrachSolution s;
  s.theta_tilde = theta;
  s.k = k_from_beta;
  s.beltrami_c = 1.0 / std::sqrt(s.k);
  if (std::fabs(theta - M_PI) <= kClassTol)
    s.curve_class = CurveClass::MaxAtEndpoint;
  else if (theta < M_PI)
    s.curve_class = CurveClass::StrictlyIncreasing;
  else
    s.curve_class = CurveClass::RisesThenFalls;
  return s;
}

double exact_travel_time(const BrachSolution& s) { return std::sqrt(s.k) * s.theta_tilde; }

CycloidPoint cycloid_point(double k, double theta) {
  if (!(k > 0.0)) throw ArgumentError("cycloid_point: k must be > 0");
  if (!(theta >= 0.0) || !(theta < kTwoPi))
    throw ArgumentError("cycloid_point: theta must lie in [0, 2pi)");
  CycloidPoint pt;
  pt.theta = theta;
  pt.t = 0.5 * k * theta_minus_sin(theta);
  pt.gamma = 0.5 * k * one_minus_cos(theta);
  if (theta == 0.0)
    pt.slope = std::numeric_limits<double>::infinity();
  else if (theta == M_PI)
    pt.slope = 0.0;
  else
    pt.slope = std::cos(0.5 * theta) / std::sin(0.5 * theta);
  return pt;
}

double theta_from_t(double k, double t, double tol) {
  if (!(k > 0.0)) throw ArgumentError("theta_from_t: k must be > 0");
  const double t_max = 0.5 * k * kTwoPi;
  if (!(t >= 0.0) || t > t_max * (1.0 + 1e-12))
    throw ArgumentError("theta_from_t: t outside [0, k*pi... the full arch]");
  if (t == 0.0) return 0.0;

  double lo = 0.0, hi = kTwoPi;
  double theta = std::cbrt(12.0 * t / k);  // inverts the small-theta series t ~ k theta^3/12
  theta = std::clamp(theta, 1e-300, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const double r = 0.5 * k * theta_minus_sin(theta) - t;
    if (std::fabs(r) <= tol * k) return theta;
    if (r > 0.0)
      hi = theta;
    else
      lo = theta;
    const double deriv = 0.5 * k * one_minus_cos(theta);
    double next = deriv > 0.0 ? theta - r / deriv : theta;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (next == theta) break;
    theta = next;
  }
  return theta;
}

double slope_angle(double slope) {
  if (slope > 0.0) return 2.0 * std::atan(1.0 / slope);
  if (slope == 0.0) return M_PI;
  return 2.0 * (M_PI + std::atan(1.0 / slope));
}

SampledCurve sample_solution(const BrachSolution& s, const Mesh& mesh) {
  const double b = 0.5 * s.k * theta_minus_sin(s.theta_tilde);
  if (std::fabs(mesh.b - b) > 1e-9 * std::fmax(1.0, b))
    throw ArgumentError("sample_solution: mesh endpoint differs from the problem's b");

  SampledCurve c;
  c.mesh = mesh;
  c.kind = CandidateKind::Cycloid;
  const std::size_t np = mesh.nodes.size();
  c.values.resize(np);
  c.slopes.resize(np);
  c.values[0] = 0.0;
  c.slopes[0] = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 1; i < np; ++i) {
    const CycloidPoint pt = cycloid_point(s.k, theta_from_t(s.k, mesh.nodes[i]));
    c.values[i] = pt.gamma;
    c.slopes[i] = pt.slope;
  }
  const double k = s.k;
  c.value_fn = [k](double t) {
    return t <= 0.0 ? 0.0 : 0.5 * k * one_minus_cos(theta_from_t(k, t));
  };
  c.slope_fn = [k](double t) {
    const double theta = theta_from_t(k, t);
    return std::cos(0.5 * theta) / std::sin(0.5 * theta);
  };
  return c;
}

std::optional<BrachProblem> same_cycloid_partner(const BrachProblem& p) {
  require_problem(p);
  const double theta = invert_depth_ratio(p.beta / p.b);
  if (std::fabs(theta - M_PI) <= kClassTol) return std::nullopt;
  const double partner_theta = kTwoPi - theta;
  return BrachProblem{p.beta / depth_ratio(partner_theta), p.beta};
}

}  // namespace brach
