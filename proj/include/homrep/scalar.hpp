#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "homrep/bigint.hpp"
#include "homrep/errors.hpp"
#include "homrep/rational.hpp"

namespace homrep {

// Default relative tolerance for approximate-mode comparisons.
inline constexpr double default_rel_tol = 1e-9;

// Glue between generic algorithms and a concrete scalar realization.
// The exact realization is Rational; the approximate one is binary64.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational from_bigint(const BigInt& v) { return Rational(v); }
    static Rational from_ratio(const BigInt& num, const BigInt& den) {
        return Rational(num, den);
    }
    static std::string repr(const Rational& v) { return v.str(); }
    static Rational parse(std::string_view text) { return Rational::parse(text); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double from_bigint(const BigInt& v) { return bigint_to_double(v); }
    static double from_ratio(const BigInt& num, const BigInt& den) {
        return BigRatio(num, den).template convert_to<double>();
    }
    static std::string repr(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }
    static double parse(std::string_view text) {
        try {
            size_t pos = 0;
            double v = std::stod(std::string(text), &pos);
            if (pos != text.size())
                throw invalid_input_error("trailing characters in number");
            return v;
        } catch (const invalid_input_error&) {
            throw;
        } catch (const std::exception&) {
            throw invalid_input_error("cannot parse '" + std::string(text) + "' as a number");
        }
    }
};

// Symmetric relative comparison used to validate approximate results.
inline bool approx_equal(double a, double b, double rel_tol = default_rel_tol) {
    if (a == b) return true;
    double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= rel_tol * scale;
}

// Integer power by repeated squaring.  Negative exponents invert the base;
// a zero base with a negative exponent is rejected by the scalar's division.
template <class S>
S pow_scalar(S base, long long e) {
    if (e < 0) {
        base = S(1) / base;
        e = -e;
    }
    S result(1);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

} // namespace homrep
