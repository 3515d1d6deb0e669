#pragma once

#include <cstdio>
#include <string>

namespace algint {

// A real printed with 12 significant digits; integral values keep a trailing
// ".0" so that 3 prints as "3.0" and 0.5 as "0.5".
inline std::string format_real(double v) {
    v += 0.0;  // fold -0 into +0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

// Plain %.12g without the ".0" suffix, for CSV columns.
inline std::string format_csv_real(double v) {
    v += 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Shortest text that parses back to exactly `v`.
inline std::string format_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace algint
