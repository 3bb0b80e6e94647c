#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "nserlx/core/errors.hpp"

namespace nserlx {

/// Shortest decimal string that round-trips the double. Locale-independent.
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
    double x = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b < e && (*b == ' ' || *b == '\t')) ++b;
    auto res = std::from_chars(b, e, x);
    if (res.ec != std::errc()) throw ConfigError("not a number: '" + s + "'");
    for (const char* p = res.ptr; p < e; ++p)
        if (*p != ' ' && *p != '\t') throw ConfigError("trailing characters in number: '" + s + "'");
    return x;
}

inline long parse_int(const std::string& s) {
    long x = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b < e && (*b == ' ' || *b == '\t')) ++b;
    auto res = std::from_chars(b, e, x);
    if (res.ec != std::errc()) throw ConfigError("not an integer: '" + s + "'");
    for (const char* p = res.ptr; p < e; ++p)
        if (*p != ' ' && *p != '\t') throw ConfigError("trailing characters in integer: '" + s + "'");
    return x;
}

}  // namespace nserlx
