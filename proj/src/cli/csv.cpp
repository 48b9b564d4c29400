#include "lpdiff/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>

#include "lpdiff/params.hpp"

namespace lpdiff::csv {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_real(const std::string& field, std::size_t line) {
    const char* begin = field.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (field.empty() || end != begin + field.size() || errno == ERANGE)
        throw InputError("line " + std::to_string(line) + ": not a number: '" + field + "'");
    return v;
}

Series read_series(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next = [&]() {
        if (!std::getline(in, line)) return false;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };

    if (!next()) throw InputError("empty input: expected header 't,m'");
    if (line != "t,m") throw InputError("line 1: expected header 't,m', got '" + line + "'");

    Series s;
    while (next()) {
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 2)
            throw InputError("line " + std::to_string(lineno) + ": expected 2 fields, got " +
                             std::to_string(fields.size()));
        s.t.push_back(parse_real(fields[0], lineno));
        s.m.push_back(parse_real(fields[1], lineno));
    }
    return s;
}

}  // namespace lpdiff::csv
