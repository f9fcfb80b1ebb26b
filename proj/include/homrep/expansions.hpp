#pragma once

#include <map>
#include <utility>
#include <vector>

#include "homrep/coeffs.hpp"
#include "homrep/combinat.hpp"
#include "homrep/errors.hpp"
#include "homrep/homcore.hpp"
#include "homrep/matrix.hpp"
#include "homrep/points.hpp"
#include "homrep/polynomial.hpp"
#include "homrep/scalar.hpp"
#include "homrep/vandermonde.hpp"

namespace homrep {

// h_m(y^[kappa]) as det G_{(m),kappa}(y) / det V_kappa(y).
template <class S>
S hom_rep_bialternant(const PointList<S>& y, const MultiplicityVector& kappa, long long m) {
    if (m < 0) throw invalid_input_error("hom_rep_bialternant: negative degree");
    y.require_distinct("hom_rep_bialternant");
    return determinant(build_G_hom_row(m, kappa, y)) / det_V_product(y, kappa);
}

// h_m(y^[kappa]) = sum_s y_s^m sum_r C(m+r-1, r-1) A_{y,kappa,s,r},
// evaluated from a prebuilt A table.
template <class S>
S evaluate_expansion_A(const CoefficientTable<S>& table, const PointList<S>& y, long long m) {
    if (m < 0) throw invalid_input_error("evaluate_expansion_A: negative degree");
    if (table.family() != CoeffFamily::A)
        throw invalid_input_error("evaluate_expansion_A: table holds the wrong family");
    const MultiplicityVector& kappa = table.multiplicities();
    S total(0);
    for (int s = 1; s <= kappa.blocks(); ++s) {
        S block(0);
        for (int r = 1; r <= kappa.kappa(s); ++r)
            block += scalar_traits<S>::from_bigint(binomial(BigInt(m) + r - 1, r - 1)) *
                     table.at(s, r);
        total += block * pow_scalar(y[s - 1], m);
    }
    return total;
}

// h_m(y^[kappa]) = sum_s sum_r C(m+N-1, r-1) B_{y,kappa,s,r} y_s^(m+N-r),
// evaluated from a prebuilt B table.
template <class S>
S evaluate_expansion_B(const CoefficientTable<S>& table, const PointList<S>& y, long long m) {
    if (m < 0) throw invalid_input_error("evaluate_expansion_B: negative degree");
    if (table.family() != CoeffFamily::B)
        throw invalid_input_error("evaluate_expansion_B: table holds the wrong family");
    const MultiplicityVector& kappa = table.multiplicities();
    int N = kappa.total();
    S total(0);
    for (int s = 1; s <= kappa.blocks(); ++s) {
        // y_s^(m+N-r) = y_s^(m+N-kappa_s) * y_s^(kappa_s-r); one big power per block.
        S power = pow_scalar(y[s - 1], m + N - kappa.kappa(s));
        for (int r = kappa.kappa(s); r >= 1; --r) {
            total += scalar_traits<S>::from_bigint(binomial(BigInt(m) + N - 1, r - 1)) *
                     table.at(s, r) * power;
            if (r > 1) power *= y[s - 1];
        }
    }
    return total;
}

template <class S>
S hom_rep_expansion_A(const PointList<S>& y, const MultiplicityVector& kappa, long long m) {
    return evaluate_expansion_A(build_coefficient_table(CoeffFamily::A, y, kappa), y, m);
}

template <class S>
S hom_rep_expansion_B(const PointList<S>& y, const MultiplicityVector& kappa, long long m) {
    return evaluate_expansion_B(build_coefficient_table(CoeffFamily::B, y, kappa), y, m);
}

// Both sides of the per-block identity connecting the two families:
// sum_r C(m+r-1, r-1) A_{s,r}  ==  sum_r C(m+N-1, r-1) B_{s,r} y_s^(N-r).
template <class S>
std::pair<S, S> equivalence_check(const PointList<S>& y, const MultiplicityVector& kappa,
                                  int s, long long m) {
    if (m < 0) throw invalid_input_error("equivalence_check: negative degree");
    detail::validate_slot(kappa, s, 1, "equivalence_check");
    int N = kappa.total();
    S lhs(0), rhs(0);
    for (int r = 1; r <= kappa.kappa(s); ++r) {
        lhs += scalar_traits<S>::from_bigint(binomial(BigInt(m) + r - 1, r - 1)) *
               coeff_A(y, kappa, s, r);
        rhs += scalar_traits<S>::from_bigint(binomial(BigInt(m) + N - 1, r - 1)) *
               coeff_B(y, kappa, s, r) * pow_scalar(y[s - 1], static_cast<long long>(N - r));
    }
    return {lhs, rhs};
}

// Cached per-(y, kappa) data for degree sweeps: the A table and, per block s,
// the polynomial P_s with h_m(y^[kappa]) = sum_s P_s(m) y_s^m.  P_s has degree
// at most kappa_s - 1; a single evaluation costs O(N) plus one power per block.
template <class S>
class ExpansionTable {
public:
    ExpansionTable(PointList<S> y, CoefficientTable<S> coeffs,
                   std::vector<Polynomial<S>> block_polys)
        : y_(std::move(y)), coeffs_(std::move(coeffs)), polys_(std::move(block_polys)) {
        if (static_cast<int>(polys_.size()) != coeffs_.multiplicities().blocks())
            throw invalid_input_error("expansion table: one polynomial per block required");
    }

    const PointList<S>& points() const { return y_; }
    const MultiplicityVector& multiplicities() const { return coeffs_.multiplicities(); }
    const CoefficientTable<S>& coefficients() const { return coeffs_; }
    const Polynomial<S>& block_polynomial(int s) const {
        if (s < 1 || s > static_cast<int>(polys_.size()))
            throw invalid_input_error("expansion table: block index out of range");
        return polys_[s - 1];
    }

    S evaluate(long long m) const {
        if (m < 0) throw invalid_input_error("expansion table: negative degree");
        S total(0);
        for (size_t s = 0; s < polys_.size(); ++s)
            total += polys_[s].evaluate(S(m)) * pow_scalar(y_[static_cast<int>(s)], m);
        return total;
    }

private:
    PointList<S> y_;
    CoefficientTable<S> coeffs_;
    std::vector<Polynomial<S>> polys_;
};

// Builds the per-block polynomials from the A family via unsigned Stirling
// numbers of the first kind:
// P_s(m) = sum_j C_{s,j} m^j with C_{s,j} = sum_{r=j+1}^{kappa_s}
//          s1(r, j+1)/(r-1)! * A_{y,kappa,s,r}.
template <class S>
ExpansionTable<S> expansion_polynomials(const PointList<S>& y, const MultiplicityVector& kappa) {
    CoefficientTable<S> table = build_coefficient_table(CoeffFamily::A, y, kappa);
    std::vector<Polynomial<S>> polys;
    polys.reserve(kappa.blocks());
    for (int s = 1; s <= kappa.blocks(); ++s) {
        std::vector<S> c(kappa.kappa(s), S(0));
        for (int j = 0; j < kappa.kappa(s); ++j)
            for (int r = j + 1; r <= kappa.kappa(s); ++r)
                c[j] += scalar_traits<S>::from_ratio(stirling_first_unsigned(r, j + 1),
                                                     factorial(r - 1)) *
                        table.at(s, r);
        polys.emplace_back(std::move(c));
    }
    return ExpansionTable<S>(y, std::move(table), std::move(polys));
}

// s_lambda(y^[kappa]) as det G_{lambda,kappa}(y) / det V_kappa(y).
template <class S>
S schur_rep_bialternant(const Partition& lambda, const PointList<S>& y,
                        const MultiplicityVector& kappa) {
    y.require_distinct("schur_rep_bialternant");
    return determinant(build_G(lambda, kappa, y)) / det_V_product(y, kappa);
}

// s_lambda(x) = det[ h_{lambda_i - i + j}(x) ]_{i,j=1..l}, with h of negative
// degree equal to 0.  Independent of the bialternant route.
template <class S>
S schur_oracle_jacobi_trudi(const Partition& lambda, const std::vector<S>& x) {
    int l = lambda.length();
    if (l == 0) return S(1);
    std::map<long long, S> h_cache;
    auto h = [&](long long d) -> const S& {
        auto it = h_cache.find(d);
        if (it == h_cache.end())
            it = h_cache.emplace(d, hom_combinatorial(x, d)).first;
        return it->second;
    };
    DenseMatrix<S> m(l, l);
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) m(i - 1, j - 1) = h(lambda.part(i) - i + j);
    return determinant(m);
}

namespace detail {

template <class S>
void tableaux_fill(const Partition& lambda, int nvars, int row, int col,
                   std::vector<std::vector<int>>& cells, const S& monomial,
                   const std::vector<S>& x, S& total) {
    if (row == lambda.length()) {
        total += monomial;
        return;
    }
    int next_row = row, next_col = col + 1;
    if (next_col >= lambda.part(row + 1)) {
        next_row = row + 1;
        next_col = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, cells[row][col - 1]);
    if (row > 0) lo = std::max(lo, cells[row - 1][col] + 1);
    for (int v = lo; v <= nvars; ++v) {
        cells[row][col] = v;
        tableaux_fill(lambda, nvars, next_row, next_col, cells, monomial * x[v - 1], x, total);
    }
}

} // namespace detail

// s_lambda(x) as a sum over semistandard tableaux of shape lambda with entries
// in 1..|x|: rows weakly increase, columns strictly increase, each tableau
// contributing the product of x over its entries.  Brute-force second oracle.
template <class S>
S schur_oracle_tableaux(const Partition& lambda, const std::vector<S>& x) {
    if (lambda.length() == 0) return S(1);
    int nvars = static_cast<int>(x.size());
    if (nvars == 0 || lambda.length() > nvars) return S(0);
    std::vector<std::vector<int>> cells(lambda.length());
    for (int i = 0; i < lambda.length(); ++i)
        cells[i].assign(static_cast<size_t>(lambda.part(i + 1)), 0);
    S total(0);
    detail::tableaux_fill(lambda, nvars, 0, 0, cells, S(1), x, total);
    return total;
}

} // namespace homrep
