#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

// Exact integer arithmetic for the counting formulas. Everything is 64-bit
// with explicit overflow checks; a result that does not fit throws
// std::overflow_error instead of wrapping. Values up to binomial(40, 20)
// and well beyond are representable.

namespace dpf {

using Int = std::int64_t;

[[noreturn]] inline void throw_overflow(const std::string& what) {
    throw std::overflow_error("exact arithmetic overflow in " + what);
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
    return r;
}

// binomial(n, k), exact; 0 when k < 0 or k > n.
Int binomial(Int n, Int k);

// n! for small n; throws on overflow (n > 20).
Int factorial(Int n);

// multinomial(n; parts) with sum(parts) == n; parts may contain zeros.
Int multinomial(Int n, std::span<const Int> parts);

// base^exp with exp >= 0, checked.
Int ipow(Int base, Int exp);

}  // namespace dpf
