#pragma once

#include <cstdint>
#include <numeric>

#include "sgpart/errors.hpp"

namespace sgpart {

// Generators, partition parts, counts and series coefficients are all exact
// 64-bit integers.  Arithmetic that could wrap goes through these helpers
// and fails hard instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer addition overflowed");
    return out;
}

inline Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer subtraction overflowed");
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer multiplication overflowed");
    return out;
}

// a, b >= 1
inline Int checked_lcm(Int a, Int b) {
    return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace sgpart
