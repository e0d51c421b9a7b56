#include "brach/cli.hpp"

#include <cstdio>
#include <sstream>

#include <CLI11.hpp>

#include "brach/curve_io.hpp"
#include "brach/cycloid.hpp"
#include "brach/errors.hpp"
#include "brach/svg.hpp"
#include "brach/variational.hpp"

namespace brach::cli {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_array(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += num(v[i]);
  }
  return s + "]";
}

struct MeshFlags {
  int n = 512;
  double q = 3.0;
};

struct QuadFlags {
  double abs_tol = 1e-8;
  int max_levels = 14;
  double sub_exponent = 2.0;

  QuadratureConfig config() const {
    QuadratureConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.max_levels = max_levels;
    cfg.sub_exponent = sub_exponent;
    return cfg;
  }
};

void add_mesh_flags(CLI::App* cmd, MeshFlags& m) {
  cmd->add_option("--n", m.n, "mesh panels")->capture_default_str();
  cmd->add_option("--q", m.q, "mesh grading exponent")->capture_default_str();
}

void add_quad_flags(CLI::App* cmd, QuadFlags& q) {
  cmd->add_option("--abs-tol", q.abs_tol, "quadrature settle tolerance")->capture_default_str();
  cmd->add_option("--max-levels", q.max_levels, "quadrature refinement levels")
      ->capture_default_str();
  cmd->add_option("--sub-exp", q.sub_exponent, "t = u^s substitution exponent")
      ->capture_default_str();
}

SampledCurve make_curve(const std::string& kind, double b, double beta, const Mesh& mesh) {
  if (kind == "line") return line_curve(b, beta, mesh);
  if (kind == "circle") return circle_curve(b, beta, mesh);
  if (kind == "cycloid") return sample_solution(solve({b, beta}), mesh);
  if (kind.rfind("file=", 0) == 0) return load_curve_csv(kind.substr(5), b, beta);
  throw ArgumentError("unknown curve kind '" + kind +
                      "' (expected line, circle, cycloid or file=PATH)");
}

std::string solution_json(const BrachProblem& p, const BrachSolution& s) {
  std::ostringstream os;
  os << "{\"b\": " << num(p.b) << ", \"beta\": " << num(p.beta)
     << ", \"theta_tilde\": " << num(s.theta_tilde) << ", \"k\": " << num(s.k)
     << ", \"beltrami_c\": " << num(s.beltrami_c) << ", \"class\": \""
     << to_string(s.curve_class) << "\", \"time\": " << num(exact_travel_time(s)) << "}";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"brachistochrone toolkit: closed-form solve, quadrature, residuals, direct "
               "minimisation cross-checks"};
  app.require_subcommand(1);

  // solve
  double so_b = 0, so_beta = 0;
  auto* solve_cmd = app.add_subcommand("solve", "closed-form cycloid solution as JSON");
  solve_cmd->add_option("--b", so_b, "horizontal extent")->required();
  solve_cmd->add_option("--beta", so_beta, "terminal depth")->required();

  // time
  double ti_b = 0, ti_beta = 0;
  std::string ti_curve = "cycloid";
  MeshFlags ti_mesh;
  QuadFlags ti_quad;
  auto* time_cmd = app.add_subcommand("time", "travel time of a candidate curve");
  time_cmd->add_option("--b", ti_b)->required();
  time_cmd->add_option("--beta", ti_beta)->required();
  time_cmd->add_option("--curve", ti_curve, "line | circle | cycloid | file=PATH")
      ->capture_default_str();
  add_mesh_flags(time_cmd, ti_mesh);
  add_quad_flags(time_cmd, ti_quad);

  // compare
  double co_b = 0, co_beta = 0;
  std::string co_format = "json";
  MeshFlags co_mesh;
  QuadFlags co_quad;
  auto* compare_cmd = app.add_subcommand("compare", "line vs circle vs cycloid times");
  compare_cmd->add_option("--b", co_b)->required();
  compare_cmd->add_option("--beta", co_beta)->required();
  compare_cmd->add_option("--format", co_format, "json | csv")->capture_default_str();
  add_mesh_flags(compare_cmd, co_mesh);
  add_quad_flags(compare_cmd, co_quad);

  // residuals
  double re_b = 0, re_beta = 0, re_cutoff = 0;
  std::string re_curve = "cycloid";
  int re_ntest = 100;
  MeshFlags re_mesh;
  QuadFlags re_quad;
  auto* residuals_cmd =
      app.add_subcommand("residuals", "strong, weak and first-integral residual report");
  residuals_cmd->add_option("--b", re_b)->required();
  residuals_cmd->add_option("--beta", re_beta)->required();
  residuals_cmd->add_option("--curve", re_curve, "line | circle | cycloid | file=PATH")
      ->capture_default_str();
  residuals_cmd->add_option("--n-test", re_ntest, "weak-form test functions")
      ->capture_default_str();
  residuals_cmd->add_option("--cutoff", re_cutoff, "weak-form support starts here (default b/10)");
  add_mesh_flags(residuals_cmd, re_mesh);
  add_quad_flags(residuals_cmd, re_quad);

  // sweep
  double sw_from = 0, sw_to = 0;
  int sw_steps = 0;
  std::string sw_format = "csv";
  auto* sweep_cmd = app.add_subcommand("sweep", "solution family over a beta/b ratio range");
  sweep_cmd->add_option("--from", sw_from, "first ratio")->required();
  sweep_cmd->add_option("--to", sw_to, "last ratio")->required();
  sweep_cmd->add_option("--steps", sw_steps, "row count (>= 2)")->required();
  sweep_cmd->add_option("--format", sw_format, "csv | json")->capture_default_str();

  // plot
  double pl_b = 0, pl_beta = 0;
  std::string pl_curves = "line,circle,cycloid";
  std::string pl_out;
  MeshFlags pl_mesh;
  auto* plot_cmd = app.add_subcommand("plot", "render curves to SVG (depth axis down)");
  plot_cmd->add_option("--b", pl_b)->required();
  plot_cmd->add_option("--beta", pl_beta)->required();
  plot_cmd->add_option("--curves", pl_curves, "comma list of curve kinds")
      ->capture_default_str();
  plot_cmd->add_option("--out", pl_out, "output SVG path")->required();
  add_mesh_flags(plot_cmd, pl_mesh);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("brach");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (solve_cmd->parsed()) {
      const BrachProblem p{so_b, so_beta};
      out << solution_json(p, solve(p)) << "\n";
      return 0;
    }

    if (time_cmd->parsed()) {
      const Mesh mesh = make_mesh(ti_mesh.n, ti_b, ti_mesh.q);
      const SampledCurve curve = make_curve(ti_curve, ti_b, ti_beta, mesh);
      const TravelTime t = travel_time(curve, brachistochrone_lagrangian(), ti_quad.config());
      out << "{\"curve\": \"" << ti_curve << "\", \"b\": " << num(ti_b)
          << ", \"beta\": " << num(ti_beta) << ", \"time\": " << num(t.value)
          << ", \"converged\": " << (t.converged ? "true" : "false")
          << ", \"levels\": " << t.levels << "}\n";
      return 0;
    }

    if (compare_cmd->parsed()) {
      const Mesh mesh = make_mesh(co_mesh.n, co_b, co_mesh.q);
      const Lagrangian lag = brachistochrone_lagrangian();
      const QuadratureConfig qcfg = co_quad.config();
      const double t_line = travel_time(line_curve(co_b, co_beta, mesh), lag, qcfg).value;
      const double t_circle = travel_time(circle_curve(co_b, co_beta, mesh), lag, qcfg).value;
      const double t_cycloid =
          travel_time(sample_solution(solve({co_b, co_beta}), mesh), lag, qcfg).value;
      const double ex_line = (t_line - t_cycloid) / t_cycloid;
      const double ex_circle = (t_circle - t_cycloid) / t_cycloid;
      if (co_format == "csv") {
        out << "curve,time,relative_excess_vs_cycloid\n";
        out << "cycloid," << num(t_cycloid) << ",0\n";
        out << "circle," << num(t_circle) << ',' << num(ex_circle) << '\n';
        out << "line," << num(t_line) << ',' << num(ex_line) << '\n';
      } else {
        out << "{\"b\": " << num(co_b) << ", \"beta\": " << num(co_beta)
            << ", \"times\": {\"cycloid\": " << num(t_cycloid)
            << ", \"circle\": " << num(t_circle) << ", \"line\": " << num(t_line)
            << "}, \"relative_excess_vs_cycloid\": {\"circle\": " << num(ex_circle)
            << ", \"line\": " << num(ex_line) << "}}\n";
      }
      return 0;
    }

    if (residuals_cmd->parsed()) {
      const Mesh mesh = make_mesh(re_mesh.n, re_b, re_mesh.q);
      const SampledCurve curve = make_curve(re_curve, re_b, re_beta, mesh);
      const Lagrangian lag = brachistochrone_lagrangian();
      const double cutoff = re_cutoff > 0 ? re_cutoff : default_cutoff(re_b);
      const ResidualReport strong = euler_lagrange_residual(curve, lag);
      const ResidualReport beltrami = beltrami_residual(curve, lag);
      const ResidualReport weak =
          weak_form_residual(curve, lag, re_ntest, cutoff, re_quad.config());
      out << "{\"curve\": \"" << re_curve << "\", \"b\": " << num(re_b)
          << ", \"beta\": " << num(re_beta) << ", \"cutoff\": " << num(cutoff)
          << ",\n \"strong\": {\"sup\": " << num(strong.strong_sup)
          << ", \"rms\": " << num(strong.strong_rms) << ", \"t\": " << json_array(strong.t)
          << ", \"r\": " << json_array(strong.strong)
          << "},\n \"beltrami\": {\"median\": " << num(beltrami.beltrami_median)
          << ", \"max_dev\": " << num(beltrami.beltrami_max_dev)
          << ", \"k_median\": " << num(beltrami.k_median)
          << ", \"k_max_dev\": " << num(beltrami.k_max_dev)
          << "},\n \"weak\": {\"n_test\": " << re_ntest << ", \"sup\": " << num(weak.weak_sup)
          << ", \"w\": " << json_array(weak.weak) << "}}\n";
      return 0;
    }

    if (sweep_cmd->parsed()) {
      if (!(sw_from > 0) || !(sw_to > sw_from) || sw_steps < 2)
        throw ArgumentError("sweep: need 0 < from < to and steps >= 2");
      std::vector<std::string> rows;
      for (int i = 0; i < sw_steps; ++i) {
        const double ratio = sw_from + (sw_to - sw_from) * i / (sw_steps - 1);
        const BrachSolution s = solve({1.0, ratio});
        std::ostringstream row;
        if (sw_format == "json")
          row << "{\"ratio\": " << num(ratio) << ", \"theta_tilde\": " << num(s.theta_tilde)
              << ", \"k\": " << num(s.k) << ", \"class\": \"" << to_string(s.curve_class)
              << "\", \"exact_time\": " << num(exact_travel_time(s)) << "}";
        else
          row << num(ratio) << ',' << num(s.theta_tilde) << ',' << num(s.k) << ','
              << to_string(s.curve_class) << ',' << num(exact_travel_time(s));
        rows.push_back(row.str());
      }
      if (sw_format == "json") {
        out << "[";
        for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? ",\n " : "") << rows[i];
        out << "]\n";
      } else {
        out << "ratio,theta_tilde,k,class,exact_time\n";
        for (const auto& r : rows) out << r << '\n';
      }
      return 0;
    }

    if (plot_cmd->parsed()) {
      const Mesh mesh = make_mesh(pl_mesh.n, pl_b, pl_mesh.q);
      std::vector<std::pair<std::string, SampledCurve>> curves;
      std::stringstream ss(pl_curves);
      std::string kind;
      while (std::getline(ss, kind, ','))
        if (!kind.empty()) curves.emplace_back(kind, make_curve(kind, pl_b, pl_beta, mesh));
      if (curves.empty()) throw ArgumentError("plot: empty curve list");
      write_svg(curves, pl_out);
      out << "wrote " << pl_out << "\n";
      return 0;
    }
  } catch (const QuadratureError& e) {
    err << "numerical diagnostic: " << e.what() << " (last " << num(e.last_estimate())
        << ", previous " << num(e.previous_estimate()) << ")\n";
    return 3;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace brach::cli
