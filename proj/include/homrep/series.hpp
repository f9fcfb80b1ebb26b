#pragma once

#include <algorithm>
#include <vector>

#include "homrep/errors.hpp"

namespace homrep {

// Power series truncated at a fixed order M: coefficients c_0..c_M.
// Arithmetic truncates at the smaller of the two operand orders.
template <class S>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw invalid_input_error("series: needs at least the constant term");
    }

    static TruncatedSeries one(int order) {
        std::vector<S> c(static_cast<size_t>(order) + 1, S(0));
        c[0] = S(1);
        return TruncatedSeries(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const S& coeff(int k) const { return c_[k]; }
    S& coeff(int k) { return c_[k]; }
    const std::vector<S>& coefficients() const { return c_; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int order = std::min(a.order(), b.order());
        std::vector<S> c(static_cast<size_t>(order) + 1, S(0));
        for (int i = 0; i <= order; ++i) {
            if (a.c_[i] == S(0)) continue;
            for (int j = 0; i + j <= order; ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return TruncatedSeries(std::move(c));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<S> c_;
};

// Multiplicative inverse of p modulo t^(M+1), by the forward recurrence
// b_0 = 1/p_0,  b_k = -(sum_{j=1..k} p_j b_{k-j}) / p_0.
template <class S>
TruncatedSeries<S> series_reciprocal(const TruncatedSeries<S>& p) {
    if (p.coeff(0) == S(0))
        throw singular_series_error("series reciprocal: zero constant term");
    int order = p.order();
    std::vector<S> b(static_cast<size_t>(order) + 1, S(0));
    b[0] = S(1) / p.coeff(0);
    for (int k = 1; k <= order; ++k) {
        S acc(0);
        for (int j = 1; j <= k; ++j) acc += p.coeff(j) * b[k - j];
        b[k] = -acc / p.coeff(0);
    }
    return TruncatedSeries<S>(std::move(b));
}

// The polynomial prod_j (1 - x_j t), truncated at the given order.
template <class S>
TruncatedSeries<S> product_one_minus_xt(const std::vector<S>& x, int order) {
    TruncatedSeries<S> p = TruncatedSeries<S>::one(order);
    for (const S& xj : x)
        for (int k = order; k >= 1; --k) p.coeff(k) -= xj * p.coeff(k - 1);
    return p;
}

} // namespace homrep
