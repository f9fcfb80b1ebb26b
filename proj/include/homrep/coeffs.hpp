#pragma once

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "homrep/combinat.hpp"
#include "homrep/errors.hpp"
#include "homrep/homcore.hpp"
#include "homrep/points.hpp"
#include "homrep/scalar.hpp"

namespace homrep {

enum class CoeffFamily { A, B };

// Both coefficient families have two independent computation paths: a closed
// form built on h over the reduced point list (default), and a direct
// multisum over weak compositions.
enum class CoeffRoute { hom_based, multisum };

enum class PoleNormalization { monic, unital };

template <class S>
struct PartialFractionTerm {
    PoleNormalization normalization;
    int s; // block, 1-based
    int r; // pole order, 1 <= r <= kappa_s
    S coefficient;
};

namespace detail {

inline void validate_slot(const MultiplicityVector& kappa, int s, int r, const char* what) {
    if (s < 1 || s > kappa.blocks())
        throw invalid_input_error(std::string(what) + ": block index out of range");
    if (r < 1 || r > kappa.kappa(s))
        throw invalid_input_error(std::string(what) + ": pole order outside its block");
}

template <class S>
void validate_point_block(const PointList<S>& y, const MultiplicityVector& kappa,
                          const char* what) {
    if (y.size() != kappa.blocks())
        throw invalid_input_error(std::string(what) + ": point count differs from block count");
    y.require_distinct(what);
    if constexpr (!scalar_traits<S>::is_exact) {
        if (y.size() > 1 && min_pairwise_separation(y) < 1e-6)
            std::cerr << "warning: " << what
                      << ": pole separation below 1e-6, coefficients may lose accuracy\n";
    }
}

template <class S>
S sign_pm(long long parity) {
    return (parity % 2 == 0) ? S(1) : S(-1);
}

} // namespace detail

// Coefficient of 1/(t - y_s)^r in the decomposition of 1/prod_j (t - y_j)^kappa_j:
// (-1)^(N - kappa_s) * prod_{d != s} z_d^kappa_d * h_{kappa_s - r}(z^[reduced kappa]),
// where z_d = 1/(y_d - y_s).
template <class S>
S coeff_B(const PointList<S>& y, const MultiplicityVector& kappa, int s, int r,
          CoeffRoute route = CoeffRoute::hom_based) {
    detail::validate_point_block(y, kappa, "coeff_B");
    detail::validate_slot(kappa, s, r, "coeff_B");
    int n = kappa.blocks();
    int deg = kappa.kappa(s) - r;
    if (n == 1) return deg == 0 ? S(1) : S(0);
    long long parity = kappa.total() - kappa.kappa(s);
    if (route == CoeffRoute::hom_based) {
        std::vector<S> z;
        std::vector<int> reduced;
        S prefactor(1);
        for (int d = 1; d <= n; ++d) {
            if (d == s) continue;
            S zd = S(1) / (y[d - 1] - y[s - 1]);
            prefactor *= pow_scalar(zd, kappa.kappa(d));
            z.push_back(zd);
            reduced.push_back(kappa.kappa(d));
        }
        S h = hom_rep_combinatorial(PointList<S>(z), MultiplicityVector(reduced), deg);
        return detail::sign_pm<S>(parity) * prefactor * h;
    }
    // Multisum: sum over weak compositions k of kappa_s - r into n-1 parts of
    // prod_{d != s} C(kappa_d + k_d - 1, k_d) / (y_d - y_s)^(kappa_d + k_d).
    S total(0);
    for (const auto& comp : WeakCompositions(n - 1, deg)) {
        S term(1);
        int pos = 0;
        for (int d = 1; d <= n; ++d) {
            if (d == s) continue;
            long long kd = comp[pos++];
            term *= scalar_traits<S>::from_bigint(
                binomial(BigInt(kappa.kappa(d)) + kd - 1, kd));
            term /= pow_scalar(y[d - 1] - y[s - 1], kappa.kappa(d) + kd);
        }
        total += term;
    }
    return detail::sign_pm<S>(parity) * total;
}

// Coefficient of 1/(1 - y_s t)^r in the decomposition of 1/prod_j (1 - y_j t)^kappa_j:
// (-y_s)^(N - kappa_s) / prod_{d != s} (y_d - y_s)^kappa_d
//   * h_{kappa_s - r}(w^[reduced kappa]),  where w_d = y_d / (y_d - y_s).
template <class S>
S coeff_A(const PointList<S>& y, const MultiplicityVector& kappa, int s, int r,
          CoeffRoute route = CoeffRoute::hom_based) {
    detail::validate_point_block(y, kappa, "coeff_A");
    detail::validate_slot(kappa, s, r, "coeff_A");
    int n = kappa.blocks();
    int deg = kappa.kappa(s) - r;
    if (n == 1) return deg == 0 ? S(1) : S(0);
    long long parity = kappa.total() - kappa.kappa(s);
    if (route == CoeffRoute::hom_based) {
        std::vector<S> w;
        std::vector<int> reduced;
        S prefactor = pow_scalar(-y[s - 1], static_cast<long long>(parity));
        for (int d = 1; d <= n; ++d) {
            if (d == s) continue;
            S diff = y[d - 1] - y[s - 1];
            prefactor /= pow_scalar(diff, kappa.kappa(d));
            w.push_back(y[d - 1] / diff);
            reduced.push_back(kappa.kappa(d));
        }
        S h = hom_rep_combinatorial(PointList<S>(w), MultiplicityVector(reduced), deg);
        return prefactor * h;
    }
    S total(0);
    for (const auto& comp : WeakCompositions(n - 1, deg)) {
        S term(1);
        int pos = 0;
        for (int d = 1; d <= n; ++d) {
            if (d == s) continue;
            long long kd = comp[pos++];
            term *= scalar_traits<S>::from_bigint(
                binomial(BigInt(kappa.kappa(d)) + kd - 1, kd));
            term *= pow_scalar(y[s - 1], kappa.kappa(d)) * pow_scalar(y[d - 1], kd);
            term /= pow_scalar(y[d - 1] - y[s - 1], kappa.kappa(d) + kd);
        }
        total += term;
    }
    return detail::sign_pm<S>(parity) * total;
}

// A-family coefficient recovered from the B family at the inverted points:
// A_{y,kappa,s,r} = (-1)^(N-r) y_s^(r - kappa_s) prod_{d != s} y_d^(-kappa_d)
//                   * B_{1/y,kappa,s,r}.  Requires every point nonzero.
template <class S>
S a_from_b(const PointList<S>& y, const MultiplicityVector& kappa, int s, int r) {
    detail::validate_point_block(y, kappa, "a_from_b");
    detail::validate_slot(kappa, s, r, "a_from_b");
    std::vector<S> inverted;
    inverted.reserve(y.size());
    for (int j = 0; j < y.size(); ++j) {
        if (y[j] == S(0))
            throw invalid_input_error("a_from_b: points must be nonzero");
        inverted.push_back(S(1) / y[j]);
    }
    S b = coeff_B(PointList<S>(inverted), kappa, s, r);
    S scale = detail::sign_pm<S>(kappa.total() - r) *
              pow_scalar(y[s - 1], static_cast<long long>(r) - kappa.kappa(s));
    for (int d = 1; d <= kappa.blocks(); ++d)
        if (d != s) scale /= pow_scalar(y[d - 1], kappa.kappa(d));
    return scale * b;
}

template <class S>
class CoefficientTable {
public:
    CoefficientTable(CoeffFamily family, MultiplicityVector kappa, std::vector<S> values)
        : family_(family), kappa_(std::move(kappa)), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != kappa_.total())
            throw invalid_input_error("coefficient table: needs one entry per flat index");
    }

    CoeffFamily family() const { return family_; }
    const MultiplicityVector& multiplicities() const { return kappa_; }
    int size() const { return kappa_.total(); }

    // Entry for slot (s, r); the storage is flat in rho order.
    const S& at(int s, int r) const {
        return values_[rho(kappa_, IndexPair{s, r}) - 1];
    }
    const S& at_flat(int k) const {
        if (k < 1 || k > size()) throw invalid_input_error("coefficient table: index out of range");
        return values_[k - 1];
    }

private:
    CoeffFamily family_;
    MultiplicityVector kappa_;
    std::vector<S> values_;
};

template <class S>
CoefficientTable<S> build_coefficient_table(CoeffFamily family, const PointList<S>& y,
                                            const MultiplicityVector& kappa,
                                            CoeffRoute route = CoeffRoute::hom_based) {
    std::vector<S> values;
    values.reserve(kappa.total());
    for (int s = 1; s <= kappa.blocks(); ++s)
        for (int r = 1; r <= kappa.kappa(s); ++r)
            values.push_back(family == CoeffFamily::B ? coeff_B(y, kappa, s, r, route)
                                                      : coeff_A(y, kappa, s, r, route));
    return CoefficientTable<S>(family, kappa, values);
}

// 1 / prod_j (t - y_j)^kappa_j  or  1 / prod_j (1 - y_j t)^kappa_j.
template <class S>
S evaluate_pole_product(const PointList<S>& y, const MultiplicityVector& kappa, const S& t,
                        PoleNormalization normalization) {
    if (y.size() != kappa.blocks())
        throw invalid_input_error("evaluate_pole_product: point count differs from block count");
    S denom(1);
    for (int j = 1; j <= kappa.blocks(); ++j) {
        S factor = normalization == PoleNormalization::monic ? t - y[j - 1]
                                                             : S(1) - y[j - 1] * t;
        if (factor == S(0))
            throw degenerate_input_error("evaluate_pole_product: sample point hits a pole");
        denom *= pow_scalar(factor, kappa.kappa(j));
    }
    return S(1) / denom;
}

template <class S>
S evaluate_partial_fraction(const std::vector<PartialFractionTerm<S>>& terms,
                            const PointList<S>& y, const S& t) {
    S total(0);
    for (const auto& term : terms) {
        S factor = term.normalization == PoleNormalization::monic
                       ? t - y[term.s - 1]
                       : S(1) - y[term.s - 1] * t;
        if (factor == S(0))
            throw degenerate_input_error("evaluate_partial_fraction: sample point hits a pole");
        total += term.coefficient / pow_scalar(factor, term.r);
    }
    return total;
}

namespace detail {

// Deterministic rational sample points that avoid the poles of the target
// function; used for the built-in recombination verification.
template <class S>
std::vector<S> sample_points_avoiding_poles(const PointList<S>& y,
                                            const MultiplicityVector& kappa,
                                            PoleNormalization normalization, int count,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<S> out;
    while (static_cast<int>(out.size()) < count) {
        S t = scalar_traits<S>::from_ratio(BigInt(num(rng)), BigInt(den(rng)));
        bool pole = false;
        for (int j = 0; j < y.size() && !pole; ++j) {
            S factor = normalization == PoleNormalization::monic ? t - y[j]
                                                                 : S(1) - y[j] * t;
            pole = factor == S(0);
        }
        if (!pole) out.push_back(t);
    }
    (void)kappa;
    return out;
}

template <class S>
void verify_recombination(const std::vector<PartialFractionTerm<S>>& terms,
                          const PointList<S>& y, const MultiplicityVector& kappa,
                          PoleNormalization normalization, std::uint64_t seed) {
    // Exact scalars only: the decomposition must reproduce the pole product
    // at N+1 deterministic sample points.
    if constexpr (scalar_traits<S>::is_exact) {
        for (const S& t :
             sample_points_avoiding_poles(y, kappa, normalization, kappa.total() + 1, seed)) {
            if (evaluate_partial_fraction(terms, y, t) !=
                evaluate_pole_product(y, kappa, t, normalization))
                throw error("partial fraction decomposition failed its sample-point check");
        }
    }
}

} // namespace detail

// Decomposition of 1/prod_j (t - y_j)^kappa_j into sum of c/(t - y_s)^r terms.
// Exact realizations re-verify the result at N+1 seeded sample points before
// returning; terms with zero coefficient are omitted.
template <class S>
std::vector<PartialFractionTerm<S>> partial_fraction_monic(const PointList<S>& y,
                                                           const MultiplicityVector& kappa,
                                                           std::uint64_t seed = 0) {
    CoefficientTable<S> table = build_coefficient_table(CoeffFamily::B, y, kappa);
    std::vector<PartialFractionTerm<S>> terms;
    for (int s = 1; s <= kappa.blocks(); ++s)
        for (int r = 1; r <= kappa.kappa(s); ++r)
            if (table.at(s, r) != S(0))
                terms.push_back({PoleNormalization::monic, s, r, table.at(s, r)});
    detail::verify_recombination(terms, y, kappa, PoleNormalization::monic, seed);
    return terms;
}

// Decomposition of 1/prod_j (1 - y_j t)^kappa_j into sum of c/(1 - y_s t)^r terms.
template <class S>
std::vector<PartialFractionTerm<S>> partial_fraction_unital(const PointList<S>& y,
                                                            const MultiplicityVector& kappa,
                                                            std::uint64_t seed = 0) {
    CoefficientTable<S> table = build_coefficient_table(CoeffFamily::A, y, kappa);
    std::vector<PartialFractionTerm<S>> terms;
    for (int s = 1; s <= kappa.blocks(); ++s)
        for (int r = 1; r <= kappa.kappa(s); ++r)
            if (table.at(s, r) != S(0))
                terms.push_back({PoleNormalization::unital, s, r, table.at(s, r)});
    detail::verify_recombination(terms, y, kappa, PoleNormalization::unital, seed);
    return terms;
}

// m-th derivative of F_s(t) = prod_{d != s} (t - y_d)^(-kappa_d) at t = y_s,
// through the general Leibniz rule; independent of coeff_B.  Defined for
// 0 <= m <= kappa_s - 1 and equals m! * B_{y,kappa,s,kappa_s - m} there.
template <class S>
S derivative_F_at_pole(const PointList<S>& y, const MultiplicityVector& kappa, int s,
                       long long m) {
    detail::validate_point_block(y, kappa, "derivative_F_at_pole");
    if (s < 1 || s > kappa.blocks())
        throw invalid_input_error("derivative_F_at_pole: block index out of range");
    if (m < 0 || m >= kappa.kappa(s))
        throw invalid_input_error("derivative_F_at_pole: order must lie in [0, kappa_s - 1]");
    int n = kappa.blocks();
    if (n == 1) return m == 0 ? S(1) : S(0);
    S total(0);
    for (const auto& comp : WeakCompositions(n - 1, m)) {
        S term(1);
        int pos = 0;
        for (int d = 1; d <= n; ++d) {
            if (d == s) continue;
            long long kd = comp[pos++];
            term *= detail::sign_pm<S>(kd);
            term *= scalar_traits<S>::from_bigint(
                binomial(BigInt(kappa.kappa(d)) + kd - 1, kd));
            term /= pow_scalar(y[s - 1] - y[d - 1], kappa.kappa(d) + kd);
        }
        total += term;
    }
    return scalar_traits<S>::from_bigint(factorial(m)) * total;
}

} // namespace homrep
