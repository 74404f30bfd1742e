#pragma once

#include <bit>
#include <charconv>
#include <cstdint>
#include <limits>
#include <string>

namespace relalt {

/// Distance between two finite doubles in units in the last place.
/// Sign-magnitude bit patterns are mapped onto a monotone integer scale,
/// so adjacent doubles are 1 apart and +0/-0 coincide.
inline std::uint64_t ulp_distance(double a, double b) {
    auto ordered = [](double x) -> std::int64_t {
        const auto bits = std::bit_cast<std::int64_t>(x);
        return bits >= 0 ? bits : std::numeric_limits<std::int64_t>::min() - bits;
    };
    const std::int64_t ka = ordered(a);
    const std::int64_t kb = ordered(b);
    return ka >= kb ? static_cast<std::uint64_t>(ka) - static_cast<std::uint64_t>(kb)
                    : static_cast<std::uint64_t>(kb) - static_cast<std::uint64_t>(ka);
}

/// Shortest decimal string that parses back to exactly `x` (std::to_chars).
/// Used for every number the CLI prints outside of JSON, so that parse ->
/// print round-trips are bit-identical.
inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

/// |a - b| <= tol * |ref|, with the convention that ref == 0 demands a == b.
inline bool within_rel(double a, double b, double tol, double ref) {
    const double diff = a > b ? a - b : b - a;
    if (ref == 0.0) return diff == 0.0;
    const double mag = ref > 0 ? ref : -ref;
    return diff <= tol * mag;
}

}  // namespace relalt
