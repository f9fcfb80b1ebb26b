#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "homrep/errors.hpp"

namespace homrep {

// Dense univariate polynomial, coefficients c_0..c_d with trailing zeros
// trimmed.  The zero polynomial has degree -1.
template <class S>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(S v) { return Polynomial(std::vector<S>{std::move(v)}); }
    // c0 + c1 * t
    static Polynomial linear(S c0, S c1) {
        return Polynomial(std::vector<S>{std::move(c0), std::move(c1)});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    S coeff(int k) const {
        if (k < 0 || k > degree()) return S(0);
        return c_[k];
    }
    const std::vector<S>& coefficients() const { return c_; }

    S evaluate(const S& t) const {
        S acc(0);
        for (int k = degree(); k >= 0; --k) acc = acc * t + c_[k];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return Polynomial();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == S(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const S& s, const Polynomial& p) {
        std::vector<S> c = p.c_;
        for (S& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    Polynomial pow(int e) const {
        if (e < 0) throw invalid_input_error("polynomial power: negative exponent");
        Polynomial r = constant(S(1));
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    std::vector<S> c_;

    void trim() {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }
};

} // namespace homrep
