#ifndef BRACH_QUADRATURE_HPP
#define BRACH_QUADRATURE_HPP

#include <functional>

namespace brach {

/// Controls for the improper-integral quadrature on (0,b].
struct QuadratureConfig {
  double abs_tol = 1e-8;   // accept when extrapolated refinements settle to this
  int max_levels = 14;     // panel count doubles per level
  double sub_exponent = 2.0;  // t = u^s substitution at the singular end, s >= 1

  // refinement-mesh shape; the grading is chosen so composite Simpson keeps
  // full order for integrands as singular as t^(-3/4)
  double grading = 10.0;
  int base_panels = 32;
};

struct QuadratureOutcome {
  double value = 0.0;
  bool converged = false;
  int levels = 0;
  double last_delta = 0.0;
  double previous_value = 0.0;
};

/// Integrates f over (0,b) where f may blow up at 0 like t^(-a), a < 1.
/// Substitutes t = u^s, then runs composite Simpson on graded meshes in u
/// (panel counts doubling per level) with Richardson extrapolation; the
/// first panel uses a 2-point Gauss rule so the integrand is never
/// evaluated at the singular endpoint. Converged once two consecutive
/// extrapolated refinements move less than abs_tol.
QuadratureOutcome integrate_improper(const std::function<double(double)>& f, double b,
                                     const QuadratureConfig& cfg);

/// Composite Simpson on [a,b] for a smooth integrand, refining until the
/// estimate settles to abs_tol.
double integrate_smooth(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-11, int base_panels = 8, int max_levels = 14);

}  // namespace brach

#endif
