#include "brach/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "brach/errors.hpp"

namespace brach {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr double kMarginLeft = 60.0, kMarginRight = 40.0;
constexpr double kMarginTop = 40.0, kMarginBottom = 40.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_curves_svg(const std::vector<std::pair<std::string, SampledCurve>>& curves) {
  if (curves.empty()) throw ArgumentError("render_curves_svg: empty curve list");

  double t_max = 0.0, depth_max = 0.0;
  for (const auto& [name, c] : curves) {
    t_max = std::fmax(t_max, c.mesh.b);
    for (double v : c.values) depth_max = std::fmax(depth_max, v);
  }
  if (!(t_max > 0.0) || !(depth_max > 0.0))
    throw ArgumentError("render_curves_svg: degenerate extent");

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto map_x = [&](double t) { return kMarginLeft + plot_w * (t / t_max); };
  const auto map_y = [&](double depth) { return kMarginTop + plot_h * (depth / depth_max); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << kWidth
      << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  // axes: horizontal run at depth 0, vertical depth axis pointing down
  svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\""
      << fmt(kMarginLeft + plot_w) << "\" y2=\"" << fmt(kMarginTop)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\""
      << fmt(kMarginLeft) << "\" y2=\"" << fmt(kMarginTop + plot_h)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << fmt(kMarginLeft + plot_w - 4) << "\" y=\"" << fmt(kMarginTop - 8)
      << "\" font-size=\"12\" text-anchor=\"end\">t = " << fmt(t_max) << "</text>\n";
  svg << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(kMarginTop + plot_h)
      << "\" font-size=\"12\" text-anchor=\"end\">depth " << fmt(depth_max) << "</text>\n";

  std::size_t color = 0;
  for (const auto& [name, c] : curves) {
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[color % 6]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      if (i) svg << ' ';
      svg << fmt(map_x(c.mesh.nodes[i])) << ',' << fmt(map_y(c.values[i]));
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << fmt(kMarginLeft + plot_w - 120) << "\" y=\""
        << fmt(kMarginTop + 20 + 18 * static_cast<double>(color)) << "\" font-size=\"13\" fill=\""
        << kPalette[color % 6] << "\">" << name << "</text>\n";
    ++color;
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const std::vector<std::pair<std::string, SampledCurve>>& curves,
               const std::string& path) {
  const std::string body = render_curves_svg(curves);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_svg: cannot open '" + path + "'");
  out << body;
  if (!out) throw IoError("write_svg: write failed for '" + path + "'");
}

}  // namespace brach
