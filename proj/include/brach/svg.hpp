#ifndef BRACH_SVG_HPP
#define BRACH_SVG_HPP

#include <string>
#include <vector>

#include "brach/curve.hpp"

namespace brach {

/// One polyline per named curve, depth axis pointing down so the fall from
/// the origin reads the way the geometry does. Output is deterministic:
/// identical inputs give byte-identical files.
std::string render_curves_svg(const std::vector<std::pair<std::string, SampledCurve>>& curves);

void write_svg(const std::vector<std::pair<std::string, SampledCurve>>& curves,
               const std::string& path);

}  // namespace brach

#endif
