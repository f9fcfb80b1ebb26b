#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "homrep/errors.hpp"
#include "homrep/scalar.hpp"

namespace homrep {

// Dense row-major matrix over an arbitrary scalar.  Indices are 0-based.
template <class S>
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols, S fill = S(0))
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw invalid_input_error("matrix: negative dimension");
    }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw invalid_input_error("matrix product: shape mismatch");
        DenseMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (aik == S(0)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

private:
    int rows_, cols_;
    std::vector<S> data_;
};

// Fraction-free (Bareiss) determinant.  Every division in the elimination is
// exact over an integral domain; over the rationals it simply bounds entry
// growth.  Returns 0 for singular input instead of failing.
template <class S>
S det_fraction_free(DenseMatrix<S> a) {
    if (a.rows() != a.cols()) throw invalid_input_error("determinant: matrix not square");
    int n = a.rows();
    if (n == 0) return S(1);
    bool negate = false;
    S prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == S(0)) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != S(0)) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return S(0);
            a.swap_rows(k, pivot);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = S(0);
        }
        prev = a(k, k);
    }
    S det = a(n - 1, n - 1);
    return negate ? -det : det;
}

// Determinant via LU with partial pivoting; the numerically sound choice for
// floating-point scalars.
template <class S>
S det_partial_pivot(DenseMatrix<S> a) {
    if (a.rows() != a.cols()) throw invalid_input_error("determinant: matrix not square");
    int n = a.rows();
    S det(1);
    using std::abs;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (abs(a(i, k)) > abs(a(pivot, k))) pivot = i;
        if (a(pivot, k) == S(0)) return S(0);
        if (pivot != k) {
            a.swap_rows(k, pivot);
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            S factor = a(i, k) / a(k, k);
            for (int j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return det;
}

template <class S>
S determinant(const DenseMatrix<S>& a) {
    if constexpr (scalar_traits<S>::is_exact)
        return det_fraction_free(a);
    else
        return det_partial_pivot(a);
}

// Solves a*x = rhs by Gaussian elimination.  Exact scalars pick the first
// nonzero pivot; floating-point scalars pick the largest.  Singular systems
// raise singular_matrix_error.
template <class S>
std::vector<S> solve_linear(DenseMatrix<S> a, std::vector<S> rhs) {
    if (a.rows() != a.cols()) throw invalid_input_error("solve_linear: matrix not square");
    if (static_cast<int>(rhs.size()) != a.rows())
        throw invalid_input_error("solve_linear: right-hand side length mismatch");
    int n = a.rows();
    using std::abs;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        if constexpr (scalar_traits<S>::is_exact) {
            for (int i = k; i < n; ++i)
                if (a(i, k) != S(0)) {
                    pivot = i;
                    break;
                }
        } else {
            pivot = k;
            for (int i = k + 1; i < n; ++i)
                if (abs(a(i, k)) > abs(a(pivot, k))) pivot = i;
            if (a(pivot, k) == S(0)) pivot = -1;
        }
        if (pivot < 0) throw singular_matrix_error("solve_linear: singular matrix");
        if (pivot != k) {
            a.swap_rows(k, pivot);
            std::swap(rhs[k], rhs[pivot]);
        }
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k) == S(0)) continue;
            S factor = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
            rhs[i] -= factor * rhs[k];
        }
    }
    std::vector<S> x(n, S(0));
    for (int i = n - 1; i >= 0; --i) {
        S acc = rhs[i];
        for (int j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

} // namespace homrep
