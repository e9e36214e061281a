#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

// Checked 64-bit integer arithmetic.  All counts and matrix entries in this
// project are desk-scale, but completion intermediates are not a priori
// bounded, so every arithmetic path goes through these helpers and raises
// overflow_error instead of wrapping.

namespace tfpm {

using Int = long long;

struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in mul");
    return r;
}

// a + b*c, the inner-loop op of all eliminations
inline Int checked_addmul(Int a, Int b, Int c) {
    return checked_add(a, checked_mul(b, c));
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// exact division; throws if b does not divide a
inline Int checked_div_exact(Int a, Int b) {
    if (b == 0 || a % b != 0) throw std::runtime_error("non-exact integer division");
    return a / b;
}

}  // namespace tfpm
