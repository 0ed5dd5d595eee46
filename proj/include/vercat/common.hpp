#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vercat {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// The characteristic everything here works in: an odd prime >= 5.
inline bool is_valid_prime(i64 p) {
    if (p < 5 || p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline void require_valid_prime(i64 p) {
    if (!is_valid_prime(p))
        throw std::invalid_argument("p must be an odd prime >= 5, got " + std::to_string(p));
}

// Remainder normalized into [0, m).
inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace vercat
