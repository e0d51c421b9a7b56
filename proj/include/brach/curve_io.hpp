#ifndef BRACH_CURVE_IO_HPP
#define BRACH_CURVE_IO_HPP

#include <string>

#include "brach/curve.hpp"

namespace brach {

/// Curve interchange format: header "t,gamma", one node per row, comma
/// separated, %.17g values, LF line endings.
void save_curve_csv(const SampledCurve& curve, const std::string& path);

/// Loads and validates a curve: strictly increasing t from 0 to b, boundary
/// values within 1e-9, positive interior values. Slopes are rebuilt by
/// central differences. Throws FormatError (carrying the row) on bad
/// content and ArgumentError on an unreadable file.
SampledCurve load_curve_csv(const std::string& path, double b, double beta);

}  // namespace brach

#endif
