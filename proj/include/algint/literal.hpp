#pragma once

// Interval literal syntax shared by the expression parser, the CLI and the
// matrix file reader:
//   [a,b]   endpoints as decimal reals
//   c±e     [c - e, c + e]
//   c       the degenerate interval [c, c]

#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

#include "error.hpp"
#include "interval.hpp"

namespace algint {

inline constexpr std::string_view kPlusMinus = "\xC2\xB1";  // U+00B1 in UTF-8

namespace detail {

inline void skip_space(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// Decimal real at `pos` (optionally signed); advances `pos` past it.
inline std::optional<double> scan_real(std::string_view s, std::size_t& pos, bool allow_sign) {
    std::size_t p = pos;
    if (allow_sign && p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    if (p >= s.size() || !(std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '.')) return std::nullopt;
    const char* first = s.data() + pos;
    // from_chars rejects a leading '+'.
    if (s[pos] == '+') ++first;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value, std::chars_format::general);
    if (ec != std::errc()) return std::nullopt;
    pos = static_cast<std::size_t>(ptr - s.data());
    return value;
}

// Parses a literal starting at `pos`. Returns nullopt if no literal starts
// there; throws ParseError on a malformed one.
inline std::optional<GeneralizedInterval> scan_interval_literal(std::string_view s, std::size_t& pos,
                                                                 bool allow_sign) {
    std::size_t p = pos;
    if (p < s.size() && s[p] == '[') {
        ++p;
        skip_space(s, p);
        auto lo = scan_real(s, p, true);
        if (!lo) throw ParseError(p + 1, "expected lower endpoint");
        skip_space(s, p);
        if (p >= s.size() || s[p] != ',') throw ParseError(p + 1, "expected ',' in interval literal");
        ++p;
        skip_space(s, p);
        auto hi = scan_real(s, p, true);
        if (!hi) throw ParseError(p + 1, "expected upper endpoint");
        skip_space(s, p);
        if (p >= s.size() || s[p] != ']') throw ParseError(p + 1, "expected ']' to close interval literal");
        ++p;
        pos = p;
        return GeneralizedInterval{*lo, *hi};
    }
    auto center = scan_real(s, p, allow_sign);
    if (!center) return std::nullopt;
    std::size_t q = p;
    skip_space(s, q);
    if (s.substr(q, kPlusMinus.size()) == kPlusMinus) {
        q += kPlusMinus.size();
        skip_space(s, q);
        auto eps = scan_real(s, q, false);
        if (!eps) throw ParseError(q + 1, "expected radius after '\xC2\xB1'");
        pos = q;
        return GeneralizedInterval{*center - *eps, *center + *eps};
    }
    pos = p;
    return GeneralizedInterval{*center, *center};
}

}  // namespace detail

// Parses a complete literal; the whole of `text` (modulo surrounding spaces)
// must be consumed.
inline GeneralizedInterval parse_interval_literal(std::string_view text) {
    std::size_t pos = 0;
    detail::skip_space(text, pos);
    auto value = detail::scan_interval_literal(text, pos, true);
    if (!value) throw ParseError(pos + 1, "expected an interval literal");
    detail::skip_space(text, pos);
    if (pos != text.size()) throw ParseError(pos + 1, "unexpected trailing text in interval literal");
    return *value;
}

}  // namespace algint
