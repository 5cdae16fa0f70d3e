#pragma once

#include <cstdint>
#include <string>

#include "wts/error.hpp"

namespace wts {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw Error(ErrorCode::Overflow, std::to_string(a) + " - " + std::to_string(b));
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
    return out;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

}  // namespace wts
