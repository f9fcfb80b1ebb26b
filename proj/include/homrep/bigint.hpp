#pragma once

#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "homrep/errors.hpp"

namespace homrep {

using BigInt = boost::multiprecision::cpp_int;
using BigRatio = boost::multiprecision::cpp_rational;

inline double bigint_to_double(const BigInt& v) {
    return v.template convert_to<double>();
}

inline BigInt factorial(long long n) {
    if (n < 0) throw invalid_input_error("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient with the usual out-of-range convention:
// zero when b < 0 or b > a.  Exact for arbitrarily large a.
inline BigInt binomial(const BigInt& a, long long b) {
    if (b < 0 || a < b) return 0;
    // C(a, b) = C(a, a-b); pick the shorter product when a is small.
    if (a <= (std::numeric_limits<long long>::max)()) {
        long long aa = a.template convert_to<long long>();
        if (aa - b < b) b = aa - b;
    }
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - (i - 1);
        r /= i; // exact: r is C(a, i) after this step
    }
    return r;
}

inline BigInt binomial(long long a, long long b) {
    return binomial(BigInt(a), b);
}

// Product form of C(a, b) with early exit once the value exceeds `limit`.
// Used for term-cap tests where the true value may be astronomically large.
inline bool binomial_exceeds(long long a, long long b, const BigInt& limit) {
    if (b < 0 || b > a) return false;
    if (a - b < b) b = a - b;
    BigInt num = 1, den = 1;
    for (long long i = 1; i <= b; ++i) {
        num *= a - (i - 1);
        den *= i;
        if (num / den > limit) return true;
    }
    return num / den > limit;
}

} // namespace homrep
