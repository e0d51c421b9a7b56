#ifndef BRACH_LAGRANGIAN_HPP
#define BRACH_LAGRANGIAN_HPP

#include <functional>
#include <optional>
#include <string>

namespace brach {

/// Open rectangle I x J; edges at +-infinity allowed.
struct OpenRect {
  double x_lo, x_hi;
  double y_lo, y_hi;

  bool contains(double x, double y) const {
    return x > x_lo && x < x_hi && y > y_lo && y < y_hi;
  }
};

/// Axis-aligned closed rectangle used for sampling regions.
struct Rect {
  double x0, x1;
  double y0, y1;
};

/// Integrand L(x,y) with analytic first partials and (optionally) analytic
/// second partials. Evaluations outside the open domain throw DomainError.
class Lagrangian {
public:
  using Fn = std::function<double(double, double)>;

  Lagrangian(std::string name, OpenRect domain, Fn eval, Fn dx, Fn dy);

  /// Registers analytic second partials (dxy symmetric by construction).
  void set_second_partials(Fn dxx, Fn dxy, Fn dyy);

  double eval(double x, double y) const;
  double dx(double x, double y) const;
  double dy(double x, double y) const;

  bool has_second_partials() const { return static_cast<bool>(dxx_); }

  /// Second partials, analytic when registered, otherwise central
  /// differences of the first partials with step eps^(1/3)*max(1,|coord|).
  double dxx(double x, double y) const;
  double dxy(double x, double y) const;
  double dyy(double x, double y) const;

  const OpenRect& domain() const { return domain_; }
  const std::string& name() const { return name_; }

private:
  void require_inside(double x, double y) const;

  std::string name_;
  OpenRect domain_;
  Fn eval_, dx_, dy_;
  Fn dxx_, dxy_, dyy_;
};

/// sqrt((1+y^2)/x) on (0,inf) x R.
Lagrangian brachistochrone_lagrangian();

/// sqrt(x^-2 + y^2) on (0,inf) x R; |dM/dy| <= 1 everywhere.
Lagrangian transformed_lagrangian();

/// Symmetric 2x2 matrix of second partials.
struct Hessian2 {
  double dxx, dxy, dyy;

  double min_eigenvalue() const;
  double max_abs_entry() const;
  /// Both leading principal minors positive beyond a tolerance relative to
  /// the matrix norm.
  bool positive_definite(double rel_tol = 1e-12) const;
};

Hessian2 hessian(const Lagrangian& lag, double x, double y);

enum class ConvexityVerdict { PositiveDefiniteEverywhereSampled, WitnessFound };

struct ConvexityReport {
  Rect region;
  int n_samples = 0;
  unsigned long long seed = 0;
  ConvexityVerdict verdict = ConvexityVerdict::PositiveDefiniteEverywhereSampled;
  /// true iff the leading-minor test passed at every sample; a zero Hessian
  /// is not a witness but is not strictly positive definite either.
  bool strictly_positive_definite = false;
  double min_eigenvalue_seen = 0.0;
  std::optional<std::pair<double, double>> witness;  // most negative sample
  double witness_min_eigenvalue = 0.0;
};

/// Samples the Hessian at n_samples seeded-uniform points of the region.
/// The witness, when found, is the sample with the most negative eigenvalue
/// so it re-validates robustly.
ConvexityReport convexity_report(const Lagrangian& lag, const Rect& region, int n_samples,
                                 unsigned long long seed);

}  // namespace brach

#endif
