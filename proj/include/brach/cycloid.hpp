#ifndef BRACH_CYCLOID_HPP
#define BRACH_CYCLOID_HPP

#include <optional>
#include <string>

#include "brach/curve.hpp"
#include "brach/mesh.hpp"

namespace brach {

/// Endpoint data of a descent problem: fall from (0,0) to (b,beta).
struct BrachProblem {
  double b;
  double beta;
};

enum class CurveClass { StrictlyIncreasing, MaxAtEndpoint, RisesThenFalls };

std::string to_string(CurveClass c);

/// Closed-form solution: the optimal curve is the cycloid arc
///   t = (k/2)(theta - sin theta), gamma = (k/2)(1 - cos theta)
/// cut at theta_tilde. beltrami_c is the conserved value
/// L - dL/dy * gamma' = 1/sqrt(k) along the arc.
struct BrachSolution {
  double theta_tilde;
  double k;
  double beltrami_c;
  CurveClass curve_class;
};

struct CycloidPoint {
  double theta;
  double t;
  double gamma;
  double slope;  // cot(theta/2); 0 at theta = pi, +inf at theta = 0
};

/// Terminal depth-to-width ratio of the cycloid arc cut at theta:
/// (1 - cos theta)/(theta - sin theta). Strictly decreasing on (0,2pi),
/// +inf at 0, 0 at 2pi. Safe against cancellation at both ends.
double depth_ratio(double theta);

/// d/dtheta of depth_ratio: (theta sin theta - 2 + 2cos theta)/(theta - sin theta)^2,
/// strictly negative on (0,2pi).
double depth_ratio_derivative(double theta);

/// Unique theta in (0,2pi) with depth_ratio(theta) = ratio. Bisection to
/// bracket width tol (default 1e-12), then Newton polish kept inside the
/// bracket.
double invert_depth_ratio(double ratio, double tol = 1e-12);

/// theta_tilde = invert_depth_ratio(beta/b); k from both endpoint
/// relations k = 2b/(theta-sin theta) and k = 2beta/(1-cos theta), which
/// must agree to 1e-9 relative (InvariantError otherwise).
BrachSolution solve(const BrachProblem& p);

/// Travel time of the solution arc: sqrt(k) * theta_tilde.
double exact_travel_time(const BrachSolution& s);

CycloidPoint cycloid_point(double k, double theta);

/// Inverts t = (k/2)(theta - sin theta) on [0, 2pi] (Kepler-type equation);
/// Newton from theta0 = (12t/k)^(1/3) with a bisection safeguard, stopping
/// at |t(theta) - t| <= tol*k.
double theta_from_t(double k, double t, double tol = 1e-14);

/// Rolling-circle parameter of a slope value: 2*atan(1/slope) continued
/// through slope = 0 -> pi into (pi, 2pi) for negative slopes. Inverse of
/// slope = cot(theta/2).
double slope_angle(double slope);

/// Samples the solution arc on a mesh (mesh.b must equal the problem's b to
/// 1e-9 relative). Node values/slopes are analytic via theta_from_t, and
/// the curve carries analytic evaluators for quadrature.
SampledCurve sample_solution(const BrachSolution& s, const Mesh& mesh);

/// The other problem with the same terminal depth whose solution lies on
/// the same cycloid (theta' = 2pi - theta_tilde); empty when theta_tilde is
/// pi (the arc is its own partner).
std::optional<BrachProblem> same_cycloid_partner(const BrachProblem& p);

}  // namespace brach

#endif
