#include "brach/variational.hpp"

#include <algorithm>
#include <cmath>

#include "brach/errors.hpp"
#include "brach/numeric.hpp"

namespace brach {

namespace {

/// Quadratic B-spline bump on [lo, hi], C^1, zero value and slope at both
/// support ends, peak 1 at the centre.
struct Bump {
  double lo, hi;

  double value(double t) const {
    const double u = 3.0 * (t - lo) / (hi - lo);
    if (u <= 0.0 || u >= 3.0) return 0.0;
    double s;
    if (u < 1.0)
      s = 0.5 * u * u;
    else if (u < 2.0)
      s = 0.5 * (-2.0 * u * u + 6.0 * u - 3.0);
    else
      s = 0.5 * (3.0 - u) * (3.0 - u);
    return s * 4.0 / 3.0;  // normalise the 3/4 peak to 1
  }

  double slope(double t) const {
    const double w = 3.0 / (hi - lo);
    const double u = w * (t - lo);
    if (u <= 0.0 || u >= 3.0) return 0.0;
    double s;
    if (u < 1.0)
      s = u;
    else if (u < 2.0)
      s = -2.0 * u + 3.0;
    else
      s = u - 3.0;
    return s * w * 4.0 / 3.0;
  }
};

void fill_norms(const std::vector<double>& t, const std::vector<double>& r, double cutoff,
                double& sup, double& rms) {
  sup = 0.0;
  double sq = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (t[i] < cutoff) continue;
    sup = std::fmax(sup, std::fabs(r[i]));
    sq += r[i] * r[i];
    ++count;
  }
  rms = count ? std::sqrt(sq / static_cast<double>(count)) : 0.0;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<long>(mid), v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double upper = v[mid];
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<long>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

TravelTime travel_time(const SampledCurve& curve, const Lagrangian& lag,
                       const QuadratureConfig& cfg) {
  check_membership(curve, curve.beta());
  const auto integrand = [&](double t) { return lag.eval(curve.value(t), curve.slope(t)); };
  const QuadratureOutcome q = integrate_improper(integrand, curve.mesh.b, cfg);
  if (!q.converged)
    throw QuadratureError(
        "travel_time: quadrature did not settle; the functional may be undefined for this "
        "curve",
        q.value, q.previous_value);
  return TravelTime{q.value, true, q.levels, q.last_delta};
}

double directional_derivative(const SampledCurve& curve, const Perturbation& v,
                              const Lagrangian& lag, const QuadratureConfig& cfg) {
  if (!(v.cutoff > 0.0))
    throw ArgumentError("directional_derivative: perturbation cutoff must be > 0");
  const auto integrand = [&](double t) {
    const double x = curve.value(t);
    const double y = curve.slope(t);
    return lag.dx(x, y) * v.value(t) + lag.dy(x, y) * v.slope(t);
  };
  // v is piecewise-polynomial; integrating knot interval by knot interval
  // keeps composite Simpson at full order
  KahanSum total;
  const double tol = std::fmin(cfg.abs_tol, 1e-10) / static_cast<double>(v.knots.size());
  for (std::size_t j = 0; j + 1 < v.knots.size(); ++j)
    total.add(integrate_smooth(integrand, v.knots[j], v.knots[j + 1], tol));
  return total.value();
}

ResidualReport euler_lagrange_residual(const SampledCurve& curve, const Lagrangian& lag) {
  const auto& nodes = curve.mesh.nodes;
  const std::size_t np = nodes.size();
  if (np < 3) throw ArgumentError("euler_lagrange_residual: need at least 3 nodes");

  // dL/dy composed with the curve, then differentiated on the mesh
  std::vector<double> momentum(np, 0.0);
  for (std::size_t i = 1; i < np; ++i)
    momentum[i] = lag.dy(curve.values[i], curve.slopes[i]);

  ResidualReport rep;
  rep.cutoff = default_cutoff(curve.mesh.b);
  // node 1 is skipped: its central stencil would reach the t = 0 node where
  // the momentum is undefined
  for (std::size_t i = 2; i < np; ++i) {
    const double dm_dt = nonuniform_derivative(nodes, momentum, i);
    rep.t.push_back(nodes[i]);
    rep.strong.push_back(lag.dx(curve.values[i], curve.slopes[i]) - dm_dt);
  }
  fill_norms(rep.t, rep.strong, rep.cutoff, rep.strong_sup, rep.strong_rms);
  return rep;
}

ResidualReport beltrami_residual(const SampledCurve& curve, const Lagrangian& lag) {
  const auto& nodes = curve.mesh.nodes;
  ResidualReport rep;
  rep.cutoff = default_cutoff(curve.mesh.b);
  const bool report_k = lag.name() == "brach";
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double x = curve.values[i];
    const double y = curve.slopes[i];
    rep.t.push_back(nodes[i]);
    rep.beltrami.push_back(lag.eval(x, y) - lag.dy(x, y) * y);
    if (report_k) rep.k_values.push_back(x * (1.0 + y * y));
  }
  rep.beltrami_median = median_of(rep.beltrami);
  for (double bval : rep.beltrami)
    rep.beltrami_max_dev = std::fmax(rep.beltrami_max_dev, std::fabs(bval - rep.beltrami_median));
  if (report_k) {
    rep.k_median = median_of(rep.k_values);
    for (double kv : rep.k_values)
      rep.k_max_dev = std::fmax(rep.k_max_dev, std::fabs(kv - rep.k_median));
  }
  return rep;
}

ResidualReport weak_form_residual(const SampledCurve& curve, const Lagrangian& lag,
                                  int n_test, double cutoff, const QuadratureConfig& cfg) {
  const double b = curve.mesh.b;
  if (n_test < 1) throw ArgumentError("weak_form_residual: n_test must be >= 1");
  if (!(cutoff > 0.0) || !(cutoff < b))
    throw ArgumentError("weak_form_residual: cutoff must lie in (0,b)");

  ResidualReport rep;
  rep.cutoff = cutoff;
  const double width = (b - cutoff) / n_test;
  const double tol = std::fmin(cfg.abs_tol, 1e-10) / 3.0;
  for (int j = 0; j < n_test; ++j) {
    const Bump bump{cutoff + width * j, cutoff + width * (j + 1)};
    const auto integrand = [&](double t) {
      const double x = curve.value(t);
      const double y = curve.slope(t);
      return lag.dx(x, y) * bump.value(t) + lag.dy(x, y) * bump.slope(t);
    };
    KahanSum w;
    const double piece = (bump.hi - bump.lo) / 3.0;
    for (int piece_i = 0; piece_i < 3; ++piece_i)
      w.add(integrate_smooth(integrand, bump.lo + piece * piece_i,
                             bump.lo + piece * (piece_i + 1), tol));
    rep.weak.push_back(w.value());
    rep.weak_sup = std::fmax(rep.weak_sup, std::fabs(w.value()));
  }
  return rep;
}

}  // namespace brach
