#include "dpf/exact.hpp"

#include <limits>

namespace dpf {

namespace {
constexpr unsigned __int128 kMax64 =
    static_cast<unsigned __int128>(std::numeric_limits<Int>::max());
}

Int binomial(Int n, Int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // r stays equal to binomial(n-k+i, i) after step i, so every division
    // below is exact. The transient product fits 128 bits because r is
    // checked against kMax64 each round.
    unsigned __int128 r = 1;
    for (Int i = 1; i <= k; ++i) {
        r *= static_cast<unsigned __int128>(n - k + i);
        r /= static_cast<unsigned __int128>(i);
        if (r > kMax64) throw_overflow("binomial");
    }
    return static_cast<Int>(r);
}

Int factorial(Int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (Int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

Int multinomial(Int n, std::span<const Int> parts) {
    Int sum = 0;
    for (Int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum = checked_add(sum, p);
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    Int r = 1;
    Int rem = n;
    for (Int p : parts) {
        r = checked_mul(r, binomial(rem, p));
        rem -= p;
    }
    return r;
}

Int ipow(Int base, Int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    Int r = 1;
    for (Int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace dpf
