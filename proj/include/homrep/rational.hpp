#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "homrep/bigint.hpp"
#include "homrep/errors.hpp"

namespace homrep {

// Exact rational scalar.  Invariant after every operation: gcd(num, den) == 1
// and den > 0.  Prints as "p/q", or just "p" when the denominator is 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw invalid_input_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Accepts an optional sign, an integer part, and an optional "/q" suffix.
    static Rational parse(std::string_view text) {
        auto fail = [&] {
            throw invalid_input_error("Rational: cannot parse '" + std::string(text) + "'");
        };
        size_t slash = text.find('/');
        std::string_view top = text.substr(0, slash);
        std::string_view bot =
            slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (top.empty() || bot.empty()) fail();
        auto to_big = [&](std::string_view part, bool allow_sign) {
            size_t i = 0;
            bool negative = false;
            if (allow_sign && (part[0] == '+' || part[0] == '-')) {
                negative = part[0] == '-';
                i = 1;
            }
            if (i == part.size()) fail();
            for (size_t j = i; j < part.size(); ++j)
                if (part[j] < '0' || part[j] > '9') fail();
            BigInt value(std::string(part.substr(i)));
            return negative ? BigInt(-value) : value;
        };
        BigInt num = to_big(top, true);
        BigInt den = to_big(bot, false);
        if (den == 0) fail();
        return Rational(std::move(num), std::move(den));
    }

    double to_double() const { return BigRatio(num_, den_).template convert_to<double>(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_ == 0) throw invalid_input_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

} // namespace homrep
