#ifndef BRACH_MINIMIZE_HPP
#define BRACH_MINIMIZE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brach/curve.hpp"
#include "brach/cycloid.hpp"
#include "brach/mesh.hpp"
#include "brach/quadrature.hpp"

namespace brach {

/// Image of an admissible curve under delta = sqrt(2*gamma): delta(0) = 0,
/// delta(b) = sqrt(2*beta), positive in between. The transformed integrand
/// sqrt(x^-2 + y^2) is strictly convex, which is what makes direct
/// minimisation in these variables trustworthy.
struct TransformedCurve {
  Mesh mesh;
  std::vector<double> values;
  std::vector<double> slopes;
  std::function<double(double)> value_fn;
  std::function<double(double)> slope_fn;

  double terminal() const { return values.back(); }
  double value(double t) const;
  double slope(double t) const;
};

TransformedCurve transform(const SampledCurve& curve);

/// Inverse map gamma = delta^2/2 with central-difference slopes.
SampledCurve inverse_transform(const TransformedCurve& delta);

/// Functional of the transformed problem by the same improper-integral
/// quadrature; for corresponding curves, L-functional = sqrt(2) * this.
double transformed_time(const TransformedCurve& delta, const QuadratureConfig& cfg = {});

struct MinimizeConfig {
  long max_iterations = 5000;
  double tolerance = 1e-8;      // stop when sup|gradient| drops below this
  double positivity_floor = 1e-9;
  double backtrack_factor = 0.5;
  double sufficient_decrease = 1e-4;
};

struct MinimizeOutcome {
  TransformedCurve delta;
  SampledCurve curve;            // mapped back to gamma variables
  double objective = 0.0;        // discrete objective at the final iterate
  long iterations = 0;
  bool converged = false;
  double gradient_sup = 0.0;
  double max_abs_dMdy = 0.0;     // largest |dM/dy| seen at any visited point
  std::vector<double> objective_trace;  // accepted objective values, non-increasing
  double sup_distance = 0.0;     // to the closed-form solution at the nodes
};

/// Discrete objective: midpoint-value / forward-difference-slope rule, so
/// every cell evaluates the strictly convex integrand at one (value, slope)
/// pair and the objective is convex in the interior node values.
double discrete_objective(const Mesh& mesh, const std::vector<double>& delta);
void discrete_gradient(const Mesh& mesh, const std::vector<double>& delta,
                       std::vector<double>& grad, double* max_abs_dMdy = nullptr);

/// Projected gradient descent on the discretised transformed functional:
/// Barzilai-Borwein trial step, Armijo backtracking, projection onto the
/// positivity floor. Starts from the transform of the line curve unless an
/// initial iterate is supplied. Budget exhaustion reports converged=false,
/// never a silent wrong answer.
MinimizeOutcome minimize_direct(const BrachProblem& p, const Mesh& mesh,
                                const MinimizeConfig& cfg = {},
                                const std::optional<std::vector<double>>& initial = {});

/// Serialises the outcome: mapped-back curve as curve CSV plus a JSON
/// sidecar {objective, iterations, converged, sup_distance}.
void write_outcome(const MinimizeOutcome& outcome, const std::string& csv_path,
                   const std::string& json_path);

}  // namespace brach

#endif
