#include "brach/lagrangian.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "brach/errors.hpp"
#include "brach/numeric.hpp"

namespace brach {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double fd_step(double coord) {
  static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  return h0 * std::fmax(1.0, std::fabs(coord));
}

}  // namespace

Lagrangian::Lagrangian(std::string name, OpenRect domain, Fn eval, Fn dx, Fn dy)
    : name_(std::move(name)),
      domain_(domain),
      eval_(std::move(eval)),
      dx_(std::move(dx)),
      dy_(std::move(dy)) {}

void Lagrangian::set_second_partials(Fn dxx, Fn dxy, Fn dyy) {
  dxx_ = std::move(dxx);
  dxy_ = std::move(dxy);
  dyy_ = std::move(dyy);
}

void Lagrangian::require_inside(double x, double y) const {
  if (!domain_.contains(x, y))
    throw DomainError("Lagrangian '" + name_ + "': point (" + std::to_string(x) + ", " +
                      std::to_string(y) + ") outside open domain");
}

double Lagrangian::eval(double x, double y) const {
  require_inside(x, y);
  return eval_(x, y);
}

double Lagrangian::dx(double x, double y) const {
  require_inside(x, y);
  return dx_(x, y);
}

double Lagrangian::dy(double x, double y) const {
  require_inside(x, y);
  return dy_(x, y);
}

double Lagrangian::dxx(double x, double y) const {
  require_inside(x, y);
  if (dxx_) return dxx_(x, y);
  const double h = fd_step(x);
  return (dx_(x + h, y) - dx_(x - h, y)) / (2.0 * h);
}

double Lagrangian::dxy(double x, double y) const {
  require_inside(x, y);
  if (dxy_) return dxy_(x, y);
  const double h = fd_step(y);
  return (dx_(x, y + h) - dx_(x, y - h)) / (2.0 * h);
}

double Lagrangian::dyy(double x, double y) const {
  require_inside(x, y);
  if (dyy_) return dyy_(x, y);
  const double h = fd_step(y);
  return (dy_(x, y + h) - dy_(x, y - h)) / (2.0 * h);
}

Lagrangian brachistochrone_lagrangian() {
  // hypot keeps 1+y^2 overflow-safe for the huge slopes near t = 0
  Lagrangian lag(
      "brach", OpenRect{0.0, kInf, -kInf, kInf},
      [](double x, double y) { return std::hypot(1.0, y) / std::sqrt(x); },
      [](double x, double y) { return -0.5 * std::hypot(1.0, y) / (x * std::sqrt(x)); },
      [](double x, double y) { return y / (std::sqrt(x) * std::hypot(1.0, y)); });
  lag.set_second_partials(
      [](double x, double y) { return 0.75 * std::hypot(1.0, y) / (x * x * std::sqrt(x)); },
      [](double x, double y) { return -0.5 * y / (x * std::sqrt(x) * std::hypot(1.0, y)); },
      [](double x, double y) {
        const double r = std::hypot(1.0, y);
        return 1.0 / (std::sqrt(x) * r * r * r);
      });
  return lag;
}

Lagrangian transformed_lagrangian() {
  Lagrangian lag(
      "transformed", OpenRect{0.0, kInf, -kInf, kInf},
      [](double x, double y) { return std::hypot(1.0 / x, y); },
      [](double x, double y) { return -1.0 / (x * x * x * std::hypot(1.0 / x, y)); },
      [](double x, double y) { return y / std::hypot(1.0 / x, y); });
  lag.set_second_partials(
      [](double x, double y) {
        const double r = std::hypot(1.0 / x, y);
        const double x2 = x * x;
        return (2.0 / (x2 * x2 * x2) + 3.0 * y * y / (x2 * x2)) / (r * r * r);
      },
      [](double x, double y) {
        const double r = std::hypot(1.0 / x, y);
        return y / (x * x * x * r * r * r);
      },
      [](double x, double y) {
        const double r = std::hypot(1.0 / x, y);
        return 1.0 / (x * x * r * r * r);
      });
  return lag;
}

double Hessian2::min_eigenvalue() const {
  const double mean = 0.5 * (dxx + dyy);
  const double half_gap = 0.5 * (dxx - dyy);
  return mean - std::hypot(half_gap, dxy);
}

double Hessian2::max_abs_entry() const {
  return std::fmax(std::fabs(dxx), std::fmax(std::fabs(dxy), std::fabs(dyy)));
}

bool Hessian2::positive_definite(double rel_tol) const {
  const double scale = max_abs_entry();
  if (scale == 0.0) return false;  // zero matrix is only semidefinite
  const double det = dxx * dyy - dxy * dxy;
  return dxx > rel_tol * scale && det > rel_tol * scale * scale;
}

Hessian2 hessian(const Lagrangian& lag, double x, double y) {
  return Hessian2{lag.dxx(x, y), lag.dxy(x, y), lag.dyy(x, y)};
}

ConvexityReport convexity_report(const Lagrangian& lag, const Rect& region, int n_samples,
                                 unsigned long long seed) {
  if (n_samples < 1) throw ArgumentError("convexity_report: n_samples must be >= 1");
  const OpenRect& dom = lag.domain();
  if (!(region.x0 > dom.x_lo && region.x1 < dom.x_hi && region.y0 > dom.y_lo &&
        region.y1 < dom.y_hi) ||
      !(region.x0 <= region.x1 && region.y0 <= region.y1))
    throw DomainError("convexity_report: region not inside the Lagrangian domain");

  ConvexityReport rep;
  rep.region = region;
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.strictly_positive_definite = true;
  rep.min_eigenvalue_seen = std::numeric_limits<double>::infinity();

  SplitMix64 rng(seed);
  double worst = 0.0;
  std::pair<double, double> worst_pt{0.0, 0.0};
  for (int i = 0; i < n_samples; ++i) {
    const double x = rng.uniform(region.x0, region.x1);
    const double y = rng.uniform(region.y0, region.y1);
    const Hessian2 h = hessian(lag, x, y);
    const double lam = h.min_eigenvalue();
    rep.min_eigenvalue_seen = std::fmin(rep.min_eigenvalue_seen, lam);
    if (!h.positive_definite()) rep.strictly_positive_definite = false;
    const double witness_tol = 1e-12 * h.max_abs_entry();
    if (lam < -witness_tol && lam < worst) {
      worst = lam;
      worst_pt = {x, y};
    }
  }
  if (worst < 0.0) {
    rep.verdict = ConvexityVerdict::WitnessFound;
    rep.witness = worst_pt;
    rep.witness_min_eigenvalue = worst;
  } else {
    rep.verdict = ConvexityVerdict::PositiveDefiniteEverywhereSampled;
  }
  return rep;
}

}  // namespace brach
