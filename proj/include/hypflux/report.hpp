#pragma once

// Deterministic output formatting for experiment runs: fixed 17-digit
// scientific floats, RFC-4180 CSV quoting, and the JSON run record.

#include <string>
#include <vector>

namespace hypflux {

/// 17 significant digits, scientific notation; the same bits always
/// produce the same bytes.
std::string format_float(double v);

/// RFC-4180 field quoting: wrap in double quotes when the field contains
/// a comma, a quote, or a newline; embedded quotes are doubled.
std::string csv_quote(const std::string& field);

std::string csv_line(const std::vector<std::string>& fields);

} // namespace hypflux
