#include "brach/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "brach/curve_io.hpp"
#include "brach/errors.hpp"
#include "brach/numeric.hpp"

namespace brach {

namespace {

double m_value(double x, double y) { return std::hypot(1.0 / x, y); }
double m_dx(double x, double y) { return -1.0 / (x * x * x * std::hypot(1.0 / x, y)); }
double m_dy(double x, double y) { return y / std::hypot(1.0 / x, y); }

}  // namespace

double TransformedCurve::value(double t) const {
  if (value_fn) return value_fn(t);
  return interp_value(mesh, values, slopes, t);
}

double TransformedCurve::slope(double t) const {
  if (slope_fn) return slope_fn(t);
  return interp_slope(mesh, values, slopes, t);
}

TransformedCurve transform(const SampledCurve& curve) {
  check_membership(curve, curve.beta());
  TransformedCurve d;
  d.mesh = curve.mesh;
  const std::size_t np = curve.values.size();
  d.values.resize(np);
  d.slopes.resize(np);
  d.values[0] = 0.0;
  d.slopes[0] = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 1; i < np; ++i) {
    d.values[i] = std::sqrt(2.0 * curve.values[i]);
    d.slopes[i] = curve.slopes[i] / d.values[i];
  }
  const SampledCurve base = curve;
  d.value_fn = [base](double t) { return std::sqrt(2.0 * base.value(t)); };
  d.slope_fn = [base](double t) { return base.slope(t) / std::sqrt(2.0 * base.value(t)); };
  return d;
}

SampledCurve inverse_transform(const TransformedCurve& delta) {
  SampledCurve c;
  c.mesh = delta.mesh;
  const std::size_t np = delta.values.size();
  c.values.resize(np);
  for (std::size_t i = 0; i < np; ++i) c.values[i] = 0.5 * delta.values[i] * delta.values[i];
  c.slopes = difference_slopes(c.mesh, c.values);
  c.kind = CandidateKind::FromFile;
  return c;
}

double transformed_time(const TransformedCurve& delta, const QuadratureConfig& cfg) {
  const auto integrand = [&](double t) { return m_value(delta.value(t), delta.slope(t)); };
  const QuadratureOutcome q = integrate_improper(integrand, delta.mesh.b, cfg);
  if (!q.converged)
    throw QuadratureError("transformed_time: quadrature did not settle", q.value,
                          q.previous_value);
  return q.value;
}

double discrete_objective(const Mesh& mesh, const std::vector<double>& delta) {
  KahanSum sum;
  for (std::size_t i = 0; i + 1 < delta.size(); ++i) {
    const double h = mesh.nodes[i + 1] - mesh.nodes[i];
    const double mid = 0.5 * (delta[i] + delta[i + 1]);
    const double slope = (delta[i + 1] - delta[i]) / h;
    sum.add(h * m_value(mid, slope));
  }
  return sum.value();
}

void discrete_gradient(const Mesh& mesh, const std::vector<double>& delta,
                       std::vector<double>& grad, double* max_abs_dMdy) {
  const std::size_t np = delta.size();
  grad.assign(np, 0.0);
  double worst_dy = 0.0;
  for (std::size_t i = 0; i + 1 < np; ++i) {
    const double h = mesh.nodes[i + 1] - mesh.nodes[i];
    const double mid = 0.5 * (delta[i] + delta[i + 1]);
    const double slope = (delta[i + 1] - delta[i]) / h;
    const double gx = m_dx(mid, slope);
    const double gy = m_dy(mid, slope);
    worst_dy = std::fmax(worst_dy, std::fabs(gy));
    if (i >= 1) grad[i] += 0.5 * h * gx - gy;
    if (i + 1 < np - 1) grad[i + 1] += 0.5 * h * gx + gy;
  }
  grad[0] = 0.0;
  grad[np - 1] = 0.0;
  if (max_abs_dMdy) *max_abs_dMdy = std::fmax(*max_abs_dMdy, worst_dy);
}

MinimizeOutcome minimize_direct(const BrachProblem& p, const Mesh& mesh,
                                const MinimizeConfig& cfg,
                                const std::optional<std::vector<double>>& initial) {
  if (!(p.b > 0.0) || !(p.beta > 0.0))
    throw ArgumentError("minimize_direct: b, beta must be > 0");
  if (mesh.b != p.b) throw ArgumentError("minimize_direct: mesh endpoint differs from b");

  const std::size_t np = mesh.nodes.size();
  const std::size_t n = np - 1;
  const double terminal = std::sqrt(2.0 * p.beta);

  std::vector<double> d;
  if (initial) {
    if (initial->size() != np)
      throw ArgumentError("minimize_direct: initial iterate has wrong node count");
    d = *initial;
    for (std::size_t i = 1; i < n; ++i) d[i] = std::fmax(d[i], cfg.positivity_floor);
  } else {
    d.resize(np);
    for (std::size_t i = 0; i < np; ++i)
      d[i] = std::sqrt(2.0 * p.beta * mesh.nodes[i] / p.b);
  }
  d[0] = 0.0;
  d[n] = terminal;

  MinimizeOutcome out;
  std::vector<double> g(np), g_prev(np), d_prev(np), trial(np);
  trial[0] = 0.0;
  trial[n] = terminal;

  double objective = discrete_objective(mesh, d);
  discrete_gradient(mesh, d, g, &out.max_abs_dMdy);
  out.objective_trace.push_back(objective);

  double step = 1e-3;
  long it = 0;
  bool converged = false;
  for (; it < cfg.max_iterations; ++it) {
    double gnorm = 0.0;
    for (std::size_t i = 1; i < n; ++i) gnorm = std::fmax(gnorm, std::fabs(g[i]));
    out.gradient_sup = gnorm;
    if (gnorm <= cfg.tolerance) {
      converged = true;
      break;
    }

    if (it > 0) {  // Barzilai-Borwein trial step from the last move
      double ss = 0.0, sy = 0.0;
      for (std::size_t i = 1; i < n; ++i) {
        const double si = d[i] - d_prev[i];
        const double yi = g[i] - g_prev[i];
        ss += si * si;
        sy += si * yi;
      }
      if (sy > 0.0) step = ss / sy;
    }
    step = std::clamp(step, 1e-14, 1e8);

    d_prev = d;
    g_prev = g;
    double trial_objective = objective;
    for (int bt = 0; bt < 80; ++bt) {
      double predicted = 0.0;
      for (std::size_t i = 1; i < n; ++i) {
        trial[i] = std::fmax(cfg.positivity_floor, d[i] - step * g[i]);
        predicted += g[i] * (trial[i] - d[i]);
      }
      trial_objective = discrete_objective(mesh, trial);
      if (trial_objective <= objective + cfg.sufficient_decrease * predicted) break;
      step *= cfg.backtrack_factor;
    }
    d.swap(trial);
    objective = trial_objective;
    out.objective_trace.push_back(objective);
    discrete_gradient(mesh, d, g, &out.max_abs_dMdy);
  }

  if (!converged) {  // measure the gradient left behind by the last accepted step
    double gnorm = 0.0;
    for (std::size_t i = 1; i < n; ++i) gnorm = std::fmax(gnorm, std::fabs(g[i]));
    out.gradient_sup = gnorm;
  }

  out.iterations = it;
  out.converged = converged;
  out.objective = objective;

  out.delta.mesh = mesh;
  out.delta.values = d;
  out.delta.slopes = difference_slopes(mesh, d);
  out.curve = inverse_transform(out.delta);
  out.curve.values[n] = p.beta;  // exact up to the floating square of sqrt(2 beta)

  const SampledCurve reference = sample_solution(solve(p), mesh);
  double sup = 0.0;
  for (std::size_t i = 0; i < np; ++i)
    sup = std::fmax(sup, std::fabs(out.curve.values[i] - reference.values[i]));
  out.sup_distance = sup;
  return out;
}

void write_outcome(const MinimizeOutcome& outcome, const std::string& csv_path,
                   const std::string& json_path) {
  save_curve_csv(outcome.curve, csv_path);
  std::ofstream out(json_path, std::ios::binary);
  if (!out) throw IoError("write_outcome: cannot open '" + json_path + "'");
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"objective\": %.17g, \"iterations\": %ld, \"converged\": %s, "
                "\"sup_distance\": %.17g}\n",
                outcome.objective, outcome.iterations, outcome.converged ? "true" : "false",
                outcome.sup_distance);
  out << buf;
}

}  // namespace brach
