#pragma once

#include <vector>

#include "homrep/bigint.hpp"
#include "homrep/combinat.hpp"
#include "homrep/errors.hpp"
#include "homrep/points.hpp"
#include "homrep/scalar.hpp"
#include "homrep/series.hpp"

namespace homrep {

// Enumeration guard shared by the brute-force evaluators.
inline constexpr long long default_term_cap = 1'000'000;

namespace detail {

inline void check_term_cap(long long parts, long long m, long long cap, const char* what) {
    // Number of enumerated compositions is C(parts + m - 1, parts - 1).
    if (binomial_exceeds(parts + m - 1, parts - 1, BigInt(cap)))
        throw size_error(std::string(what) +
                         ": enumeration would exceed the term cap; use an expansion or "
                         "determinant route for large degree");
}

} // namespace detail

// h_m by its defining sum: one monomial per weak composition of m into |x|
// parts.  Refuses enumerations larger than term_cap.
template <class S>
S hom_combinatorial(const std::vector<S>& x, long long m,
                    long long term_cap = default_term_cap) {
    if (m < 0) return S(0);
    int n = static_cast<int>(x.size());
    if (n == 0) return m == 0 ? S(1) : S(0);
    detail::check_term_cap(n, m, term_cap, "hom_combinatorial");
    S total(0);
    for (const auto& comp : WeakCompositions(n, m)) {
        S term(1);
        for (int j = 0; j < n; ++j)
            if (comp[j] > 0) term *= pow_scalar(x[j], comp[j]);
        total += term;
    }
    return total;
}

// All of h_0(x), ..., h_m(x) by the one-variable-at-a-time recurrence
// h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j h_{k-1}(x_1..x_j).  O(n*m) products.
template <class S>
std::vector<S> hom_prefix(const std::vector<S>& x, long long m) {
    if (m < 0) throw invalid_input_error("hom_prefix: negative degree");
    std::vector<S> h(static_cast<size_t>(m) + 1, S(0));
    h[0] = S(1);
    for (const S& xj : x)
        for (long long k = 1; k <= m; ++k) h[k] += xj * h[k - 1];
    return h;
}

template <class S>
S hom_recurrence(const std::vector<S>& x, long long m) {
    if (m < 0) return S(0);
    return hom_prefix(x, m).back();
}

// h_m over pairwise distinct points by the residue sum
// sum_j x_j^(m+N-1) / prod_{k != j} (x_j - x_k).
// The approximate realization additionally refuses point lists whose minimum
// separation falls below min_separation.
template <class S>
S hom_distinct(const PointList<S>& x, long long m, double min_separation = 1e-8) {
    x.require_distinct("hom_distinct");
    if constexpr (!scalar_traits<S>::is_exact) {
        if (x.size() > 1 && min_pairwise_separation(x) < min_separation)
            throw degenerate_input_error(
                "hom_distinct: point separation below the configured minimum");
    }
    if (m < 0) return S(0);
    int n = x.size();
    if (n == 0) return m == 0 ? S(1) : S(0);
    S total(0);
    for (int j = 0; j < n; ++j) {
        S denom(1);
        for (int k = 0; k < n; ++k)
            if (k != j) denom *= x[j] - x[k];
        total += pow_scalar(x[j], m + n - 1) / denom;
    }
    return total;
}

// h_m(y^[kappa]) by grouping the defining sum per block:
// sum over alpha in M_{n,m} of prod_p C(kappa_p + alpha_p - 1, alpha_p) y_p^alpha_p.
template <class S>
S hom_rep_combinatorial(const PointList<S>& y, const MultiplicityVector& kappa, long long m,
                        long long term_cap = default_term_cap) {
    if (y.size() != kappa.blocks())
        throw invalid_input_error("hom_rep_combinatorial: point count differs from block count");
    if (m < 0) return S(0);
    int n = kappa.blocks();
    detail::check_term_cap(n, m, term_cap, "hom_rep_combinatorial");
    S total(0);
    for (const auto& alpha : WeakCompositions(n, m)) {
        S term(1);
        for (int p = 0; p < n; ++p) {
            if (alpha[p] == 0) continue;
            term *= scalar_traits<S>::from_bigint(
                binomial(BigInt(kappa.kappa(p + 1)) + alpha[p] - 1, alpha[p]));
            term *= pow_scalar(y[p], alpha[p]);
        }
        total += term;
    }
    return total;
}

// h_m of a single point repeated r times: C(r + m - 1, r - 1) t^m, and 0 for
// negative m.
template <class S>
S hom_single_repeated(const S& t, int r, long long m) {
    if (r < 1) throw invalid_input_error("hom_single_repeated: multiplicity must be positive");
    if (m < 0) return S(0);
    return scalar_traits<S>::from_bigint(binomial(BigInt(r) + m - 1, r - 1)) *
           pow_scalar(t, m);
}

// Shift identity: sum_{k=0..m} C(m+n-1, m-k) h_k(x) = h_m(1+x_1, ..., 1+x_n).
// Returns the left-hand side.
template <class S>
S gomezllata_shift(const std::vector<S>& x, long long m) {
    if (m < 0) return S(0);
    int n = static_cast<int>(x.size());
    std::vector<S> h = hom_prefix(x, m);
    S total(0);
    for (long long k = 0; k <= m; ++k)
        total += scalar_traits<S>::from_bigint(binomial(BigInt(m) + n - 1, m - k)) * h[k];
    return total;
}

// Truncation of 1 / prod_j (1 - x_j t); coefficient k is h_k(x).
template <class S>
TruncatedSeries<S> hom_generating_series(const std::vector<S>& x, int order) {
    return series_reciprocal(product_one_minus_xt(x, order));
}

} // namespace homrep
