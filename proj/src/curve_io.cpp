#include "brach/curve_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "brach/errors.hpp"

namespace brach {

namespace {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool parse_double(const std::string& field, double& out) {
  const char* s = field.c_str();
  char* end = nullptr;
  out = std::strtod(s, &end);
  return end != s && *end == '\0';
}

}  // namespace

void save_curve_csv(const SampledCurve& curve, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("save_curve_csv: cannot open '" + path + "' for writing");
  out << "t,gamma\n";
  for (std::size_t i = 0; i < curve.values.size(); ++i)
    out << format_g17(curve.mesh.nodes[i]) << ',' << format_g17(curve.values[i]) << '\n';
  if (!out) throw IoError("save_curve_csv: write to '" + path + "' failed");
}

SampledCurve load_curve_csv(const std::string& path, double b, double beta) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_curve_csv: cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty file", 0);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,gamma") throw FormatError("expected header 't,gamma'", 0);

  std::vector<double> ts, gs;
  long row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("missing comma", row);
    double t, g;
    if (!parse_double(line.substr(0, comma), t) || !parse_double(line.substr(comma + 1), g))
      throw FormatError("unparseable number", row);
    if (!ts.empty() && !(t > ts.back())) throw FormatError("t not strictly increasing", row);
    ts.push_back(t);
    gs.push_back(g);
  }
  if (ts.size() < 9) throw FormatError("need at least 9 rows", row);

  const double tol = 1e-9 * std::fmax(1.0, std::fmax(std::fabs(b), std::fabs(beta)));
  if (std::fabs(ts.front()) > tol) throw FormatError("t must start at 0", 1);
  if (std::fabs(ts.back() - b) > tol) throw FormatError("t must end at b", row);
  if (std::fabs(gs.front()) > tol) throw FormatError("gamma(0) must be 0", 1);
  if (std::fabs(gs.back() - beta) > tol) throw FormatError("gamma(b) must be beta", row);
  for (std::size_t i = 1; i < gs.size(); ++i)
    if (!(gs[i] > 0.0)) throw FormatError("interior gamma must be > 0", static_cast<long>(i + 1));

  // snap the validated boundary values so membership is exact
  ts.front() = 0.0;
  ts.back() = b;
  gs.front() = 0.0;
  gs.back() = beta;

  SampledCurve c;
  c.mesh = Mesh::from_nodes(std::move(ts));
  c.values = std::move(gs);
  c.slopes = difference_slopes(c.mesh, c.values);
  c.kind = CandidateKind::FromFile;
  return c;
}

}  // namespace brach
