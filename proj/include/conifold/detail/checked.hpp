#pragma once

#include "conifold/errors.hpp"

#include <cstdint>
#include <string>

namespace conifold::detail {

/// 64-bit addition that throws instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* where) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError(std::string(where) + ": 64-bit overflow");
    return out;
}

/// 64-bit multiplication that throws instead of wrapping.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* where) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError(std::string(where) + ": 64-bit overflow");
    return out;
}

/// Negation with the single overflowing case (INT64_MIN) checked.
inline std::int64_t checked_neg(std::int64_t a, const char* where) {
    return checked_mul(a, -1, where);
}

} // namespace conifold::detail
