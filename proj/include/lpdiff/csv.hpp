#pragma once

#include <istream>
#include <string>
#include <vector>

namespace lpdiff::csv {

/// Real formatted with 17 significant digits; round-trips through strtod.
std::string format_real(double v);

struct Series {
    std::vector<double> t;
    std::vector<double> m;
};

/// Reads a `t,m` file: mandatory header, two numeric fields per row.
/// Throws InputError with a line number on malformed input.
Series read_series(std::istream& in);

/// Splits one line on commas (no quoting).
std::vector<std::string> split(const std::string& line);

/// Parses a whole field as a double; throws InputError otherwise.
double parse_real(const std::string& field, std::size_t line);

}  // namespace lpdiff::csv
