#ifndef BRACH_VARIATIONAL_HPP
#define BRACH_VARIATIONAL_HPP

#include <vector>

#include "brach/curve.hpp"
#include "brach/lagrangian.hpp"
#include "brach/perturbation.hpp"
#include "brach/quadrature.hpp"

namespace brach {

struct TravelTime {
  double value = 0.0;
  bool converged = true;
  int levels = 0;
  double last_delta = 0.0;
};

/// The functional: integral of L(gamma(t), gamma'(t)) over (0,b], an
/// improper integral handled by integrate_improper. Throws QuadratureError
/// (carrying the last two estimates) if the refinement does not settle —
/// the signal that the integral may not exist for this curve.
TravelTime travel_time(const SampledCurve& curve, const Lagrangian& lag,
                       const QuadratureConfig& cfg = {});

/// Directional derivative of the functional at `curve` along v:
/// integral over [cutoff,b] of dL/dx[gamma] v + dL/dy[gamma] v'.
double directional_derivative(const SampledCurve& curve, const Perturbation& v,
                              const Lagrangian& lag, const QuadratureConfig& cfg = {});

/// Node-wise diagnostics of stationarity. Strong residuals, Beltrami values
/// and weak-form residuals are filled by their respective operations; the
/// norms run over nodes with t_i >= cutoff (default b/10).
struct ResidualReport {
  double cutoff = 0.0;
  std::vector<double> t;         // nodes the entries below live on
  std::vector<double> strong;    // dL/dx[gamma] - d/dt dL/dy[gamma]
  double strong_sup = 0.0;
  double strong_rms = 0.0;
  std::vector<double> beltrami;  // L[gamma] - dL/dy[gamma] * gamma'
  double beltrami_median = 0.0;
  double beltrami_max_dev = 0.0;
  std::vector<double> k_values;  // gamma(1+gamma'^2), brachistochrone integrand only
  double k_median = 0.0;
  double k_max_dev = 0.0;
  std::vector<double> weak;      // one entry per test function
  double weak_sup = 0.0;
};

/// Strong Euler-Lagrange residual at interior nodes; the time derivative of
/// dL/dy[gamma(t)] is taken by central differences of the composed function
/// on the mesh, so no second derivatives of the data are estimated.
ResidualReport euler_lagrange_residual(const SampledCurve& curve, const Lagrangian& lag);

/// Beltrami first-integral values per node, their median and the maximum
/// deviation from it. For the brachistochrone integrand the equivalent
/// conserved quantity gamma(1+gamma'^2) is reported as well.
ResidualReport beltrami_residual(const SampledCurve& curve, const Lagrangian& lag);

/// Weak-form residuals against n_test C^1 bumps (quadratic B-splines with
/// unit peak) supported on successive subintervals of (cutoff, b).
ResidualReport weak_form_residual(const SampledCurve& curve, const Lagrangian& lag,
                                  int n_test, double cutoff,
                                  const QuadratureConfig& cfg = {});

/// Default cutoff below which the singular end is excluded from residual
/// norms and perturbation supports.
inline double default_cutoff(double b) { return 0.1 * b; }

}  // namespace brach

#endif
