#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "homrep/bigint.hpp"
#include "homrep/coeffs.hpp"
#include "homrep/combinat.hpp"
#include "homrep/errors.hpp"
#include "homrep/matrix.hpp"
#include "homrep/points.hpp"
#include "homrep/polynomial.hpp"
#include "homrep/scalar.hpp"

namespace homrep {

// Integer partition: weakly decreasing nonnegative parts; trailing zeros are
// normalized away.  part(p) is 1-based and returns 0 past the length.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}
    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw invalid_input_error("partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw invalid_input_error("partition: parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    int length() const { return static_cast<int>(parts_.size()); }
    long long part(int p) const {
        if (p < 1) throw invalid_input_error("partition: part index is 1-based");
        return p <= length() ? parts_[p - 1] : 0;
    }
    long long weight() const {
        long long w = 0;
        for (long long p : parts_) w += p;
        return w;
    }
    const std::vector<long long>& parts() const { return parts_; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<long long> parts_;
};

template <class S>
struct ConfluentVandermonde {
    PointList<S> y;
    MultiplicityVector kappa;
    DenseMatrix<S> matrix;
};

// Confluent Vandermonde matrix V_kappa(y): column k belongs to slot
// (q, r) = gamma(k) and row j holds C(j-1, r-1) y_q^(j-r), zero when j < r.
// Column blocks are successive derivative columns of the plain power column.
template <class S>
ConfluentVandermonde<S> build_V(const PointList<S>& y, const MultiplicityVector& kappa) {
    if (y.size() != kappa.blocks())
        throw invalid_input_error("build_V: point count differs from block count");
    int N = kappa.total();
    DenseMatrix<S> m(N, N);
    for (int k = 1; k <= N; ++k) {
        IndexPair slot = gamma(kappa, k);
        for (int j = slot.r; j <= N; ++j)
            m(j - 1, k - 1) = scalar_traits<S>::from_bigint(binomial(j - 1, slot.r - 1)) *
                              pow_scalar(y[slot.q - 1], j - slot.r);
    }
    return ConfluentVandermonde<S>{y, kappa, std::move(m)};
}

// det V_kappa(y) = prod_{j < k} (y_k - y_j)^(kappa_j * kappa_k).
// Coincident points make the product vanish, matching the determinant.
template <class S>
S det_V_product(const PointList<S>& y, const MultiplicityVector& kappa) {
    if (y.size() != kappa.blocks())
        throw invalid_input_error("det_V_product: point count differs from block count");
    S det(1);
    for (int j = 1; j <= kappa.blocks(); ++j)
        for (int k = j + 1; k <= kappa.blocks(); ++k)
            det *= pow_scalar(y[k - 1] - y[j - 1],
                              static_cast<long long>(kappa.kappa(j)) * kappa.kappa(k));
    return det;
}

// Generalized matrix G_{lambda,kappa}(y): row j is shifted by
// lam_j = lambda_{N+1-j}; the entry at column k = slot (q, r) is
// C(j-1+lam_j, r-1) y_q^(j-r+lam_j) when the exponent is nonnegative, else 0.
// lambda = () reproduces build_V.
template <class S>
DenseMatrix<S> build_G(const Partition& lambda, const MultiplicityVector& kappa,
                       const PointList<S>& y) {
    if (y.size() != kappa.blocks())
        throw invalid_input_error("build_G: point count differs from block count");
    int N = kappa.total();
    if (lambda.length() > N)
        throw invalid_input_error("build_G: partition longer than the matrix size");
    DenseMatrix<S> m(N, N);
    for (int j = 1; j <= N; ++j) {
        long long shift = lambda.part(N + 1 - j);
        for (int k = 1; k <= N; ++k) {
            IndexPair slot = gamma(kappa, k);
            long long exponent = j - slot.r + shift;
            if (exponent < 0) continue;
            m(j - 1, k - 1) =
                scalar_traits<S>::from_bigint(binomial(BigInt(j) - 1 + shift, slot.r - 1)) *
                pow_scalar(y[slot.q - 1], exponent);
        }
    }
    return m;
}

// G_{(m),kappa}(y) by the fast special form: rows 1..N-1 are the V rows and
// only the last row depends on m, with entries C(N-1+m, r-1) y_q^(m+N-r).
template <class S>
DenseMatrix<S> build_G_hom_row(long long m, const MultiplicityVector& kappa,
                               const PointList<S>& y) {
    if (m < 0) throw invalid_input_error("build_G_hom_row: negative degree");
    if (y.size() != kappa.blocks())
        throw invalid_input_error("build_G_hom_row: point count differs from block count");
    int N = kappa.total();
    DenseMatrix<S> g = build_V(y, kappa).matrix;
    for (int k = 1; k <= N; ++k) {
        IndexPair slot = gamma(kappa, k);
        g(N - 1, k - 1) =
            scalar_traits<S>::from_bigint(binomial(BigInt(N) - 1 + m, slot.r - 1)) *
            pow_scalar(y[slot.q - 1], m + N - slot.r);
    }
    return g;
}

// The polynomial L_{s,p}(t) = prod_{q != s} (t - y_q)^kappa_q * (t - y_s)^p
//   * sum_{j=0}^{kappa_s-p-1} F_s^(j)(y_s)/j! * (t - y_s)^j,
// where F_s(t) = prod_{q != s} (t - y_q)^(-kappa_q).  Expanded symbolically;
// it has degree N-1 and its coefficients form one row of the block inverse.
template <class S>
Polynomial<S> moucouf_L_polynomial(const PointList<S>& y, const MultiplicityVector& kappa,
                                   int s, int p) {
    if (y.size() != kappa.blocks())
        throw invalid_input_error("moucouf_L_polynomial: point count differs from block count");
    y.require_distinct("moucouf_L_polynomial");
    if (s < 1 || s > kappa.blocks())
        throw invalid_input_error("moucouf_L_polynomial: block index out of range");
    if (p < 0 || p >= kappa.kappa(s))
        throw invalid_input_error("moucouf_L_polynomial: shift must lie in [0, kappa_s - 1]");
    Polynomial<S> product = Polynomial<S>::constant(S(1));
    for (int q = 1; q <= kappa.blocks(); ++q) {
        if (q == s) continue;
        product = product * Polynomial<S>::linear(-y[q - 1], S(1)).pow(kappa.kappa(q));
    }
    Polynomial<S> at_pole = Polynomial<S>::linear(-y[s - 1], S(1));
    product = product * at_pole.pow(p);
    Polynomial<S> tail;
    Polynomial<S> power = Polynomial<S>::constant(S(1));
    for (int j = 0; j <= kappa.kappa(s) - p - 1; ++j) {
        S taylor = derivative_F_at_pole(y, kappa, s, j) /
                   scalar_traits<S>::from_bigint(factorial(j));
        tail = tail + taylor * power;
        power = power * at_pole;
    }
    return product * tail;
}

// Exact inverse of V_kappa(y), assembled row-by-row from the coefficients of
// the L_{s,p} polynomials: row rho(s, r) holds the coefficients of L_{s,r-1}.
template <class S>
DenseMatrix<S> inverse_V_moucouf(const PointList<S>& y, const MultiplicityVector& kappa) {
    if (y.size() != kappa.blocks())
        throw invalid_input_error("inverse_V_moucouf: point count differs from block count");
    y.require_distinct("inverse_V_moucouf");
    int N = kappa.total();
    DenseMatrix<S> inv(N, N);
    for (int s = 1; s <= kappa.blocks(); ++s)
        for (int r = 1; r <= kappa.kappa(s); ++r) {
            Polynomial<S> L = moucouf_L_polynomial(y, kappa, s, r - 1);
            int row = rho(kappa, IndexPair{s, r}) - 1;
            for (int j = 0; j < N; ++j) inv(row, j) = L.coeff(j);
        }
    return inv;
}

// Last column of V_kappa(y)^(-1): the entry at flat position rho(s, r) is the
// monic partial-fraction coefficient B_{y,kappa,s,r}.
template <class S>
std::vector<S> inverse_last_column(const PointList<S>& y, const MultiplicityVector& kappa) {
    CoefficientTable<S> table = build_coefficient_table(CoeffFamily::B, y, kappa);
    std::vector<S> column;
    column.reserve(kappa.total());
    for (int k = 1; k <= kappa.total(); ++k) column.push_back(table.at_flat(k));
    return column;
}

// Last column of adj(G_{(m),kappa}(y)) = (V_kappa(y)^-1)_{.,N} * det V_kappa(y).
// Independent of m because only the last row of G depends on m.
template <class S>
std::vector<S> adjugate_last_column_G(long long m, const MultiplicityVector& kappa,
                                      const PointList<S>& y) {
    if (m < 0) throw invalid_input_error("adjugate_last_column_G: negative degree");
    DenseMatrix<S> inv = inverse_V_moucouf(y, kappa);
    S det = det_V_product(y, kappa);
    int N = kappa.total();
    std::vector<S> column;
    column.reserve(N);
    for (int i = 0; i < N; ++i) column.push_back(inv(i, N - 1) * det);
    return column;
}

} // namespace homrep
