#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "maxcurves/errors.hpp"

namespace maxcurves {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Decomposes n = p^e with p prime, e >= 1. Returns nothing if n is not a
/// prime power.
inline std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t m = n;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, e);
}

inline std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw InvalidArgumentError("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

/// Exact ceil(a/b) for b > 0, any sign of a.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return q + (r > 0 ? 1 : 0);
}

/// Exact floor(a/b) for b > 0, any sign of a.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return q - (r < 0 ? 1 : 0);
}

}  // namespace maxcurves
