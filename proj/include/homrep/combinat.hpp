#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

#include "homrep/bigint.hpp"
#include "homrep/errors.hpp"

namespace homrep {

// Partial sums of a multiplicity vector: sigma_0 = 0, sigma_j = k_1 + ... + k_j.
// The entries must all be strictly positive.
inline std::vector<int> partial_sums(const std::vector<int>& kappa) {
    if (kappa.empty()) throw invalid_input_error("multiplicity vector is empty");
    std::vector<int> sigma(kappa.size() + 1, 0);
    for (size_t j = 0; j < kappa.size(); ++j) {
        if (kappa[j] <= 0)
            throw invalid_input_error("multiplicity vector entries must be positive");
        sigma[j + 1] = sigma[j] + kappa[j];
    }
    return sigma;
}

// A flat position split into (block, offset), both 1-based:
// q selects a block, r in 1..kappa_q selects a slot inside it.
struct IndexPair {
    int q = 0;
    int r = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// Multiplicity vector kappa = (k_1, ..., k_n), all entries >= 1, together with
// its partial sums.  n = blocks(), N = total().  Public accessors are 1-based.
class MultiplicityVector {
public:
    explicit MultiplicityVector(std::vector<int> kappa)
        : kappa_(std::move(kappa)), sigma_(partial_sums(kappa_)) {}

    int blocks() const { return static_cast<int>(kappa_.size()); }
    int total() const { return sigma_.back(); }

    int kappa(int q) const {
        check_block(q);
        return kappa_[q - 1];
    }
    // sigma(j) for j = 0..n; sigma(0) == 0 and sigma(n) == N.
    int sigma(int j) const {
        if (j < 0 || j > blocks()) throw invalid_input_error("sigma index out of range");
        return sigma_[j];
    }

    const std::vector<int>& entries() const { return kappa_; }

    friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
        return a.kappa_ == b.kappa_;
    }

private:
    std::vector<int> kappa_;
    std::vector<int> sigma_;

    void check_block(int q) const {
        if (q < 1 || q > blocks()) throw invalid_input_error("block index out of range");
    }
};

// Flat index of slot (q, r): rho(q, r) = sigma_{q-1} + r, a bijection from
// {(q, r) : 1 <= q <= n, 1 <= r <= kappa_q} onto {1, ..., N}.
inline int rho(const MultiplicityVector& kappa, IndexPair pos) {
    if (pos.q < 1 || pos.q > kappa.blocks())
        throw invalid_input_error("rho: block index out of range");
    if (pos.r < 1 || pos.r > kappa.kappa(pos.q))
        throw invalid_input_error("rho: offset outside its block");
    return kappa.sigma(pos.q - 1) + pos.r;
}

// Inverse of rho: the unique (q, r) with sigma_{q-1} < k <= sigma_q.
inline IndexPair gamma(const MultiplicityVector& kappa, int k) {
    if (k < 1 || k > kappa.total()) throw invalid_input_error("gamma: index out of range");
    int q = 1;
    while (kappa.sigma(q) < k) ++q;
    return IndexPair{q, k - kappa.sigma(q - 1)};
}

// The list y^[kappa]: each y_q repeated kappa_q times, flattened to length N.
template <class S>
std::vector<S> expand_points(const std::vector<S>& y, const MultiplicityVector& kappa) {
    if (static_cast<int>(y.size()) != kappa.blocks())
        throw invalid_input_error("expand_points: point count differs from block count");
    std::vector<S> out;
    out.reserve(kappa.total());
    for (int q = 1; q <= kappa.blocks(); ++q)
        for (int r = 0; r < kappa.kappa(q); ++r) out.push_back(y[q - 1]);
    return out;
}

// Advances c to the next weak composition of the same weight in lexicographic
// order.  Returns false when c was the last one, (m, 0, ..., 0).
inline bool next_weak_composition(std::vector<long long>& c) {
    int n = static_cast<int>(c.size());
    int p = n - 1;
    while (p >= 0 && c[p] == 0) --p;
    if (p <= 0) return false;
    ++c[p - 1];
    long long rest = c[p] - 1;
    c[p] = 0;
    c[n - 1] = rest;
    return true;
}

// Lazy stream over all weak compositions of m into n parts, in lexicographic
// order from (0, ..., 0, m) to (m, 0, ..., 0).  There are C(n+m-1, n-1) of
// them, which this class never materializes at once.
class WeakCompositions {
public:
    WeakCompositions(int n, long long m) : n_(n), m_(m) {
        if (n < 0 || m < 0) throw invalid_input_error("weak compositions: negative argument");
        if (n == 0 && m > 0)
            throw invalid_input_error("weak compositions: no parts but positive weight");
    }

    static BigInt count(int n, long long m) {
        if (n == 0) return m == 0 ? 1 : 0;
        return binomial(BigInt(n) + m - 1, n - 1);
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<long long>;
        using difference_type = std::ptrdiff_t;
        using pointer = const value_type*;
        using reference = const value_type&;

        iterator() : done_(true) {}
        iterator(int n, long long m) : current_(n, 0), done_(false) {
            if (n > 0)
                current_.back() = m;
            else if (m > 0)
                done_ = true;
        }

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++() {
            if (!next_weak_composition(current_)) done_ = true;
            return *this;
        }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }
        friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

    private:
        std::vector<long long> current_;
        bool done_;
    };

    iterator begin() const { return iterator(n_, m_); }
    iterator end() const { return iterator(); }

private:
    int n_;
    long long m_;
};

// Block sums of a length-N composition: alpha_p = sum of beta over block p.
// This is the grouping map taking M_{N,m} onto M_{n,m}.
inline std::vector<long long> group_composition(const MultiplicityVector& kappa,
                                                const std::vector<long long>& beta) {
    if (static_cast<int>(beta.size()) != kappa.total())
        throw invalid_input_error("group_composition: composition length differs from N");
    std::vector<long long> alpha(kappa.blocks(), 0);
    for (int p = 1; p <= kappa.blocks(); ++p)
        for (int j = kappa.sigma(p - 1); j < kappa.sigma(p); ++j) alpha[p - 1] += beta[j];
    return alpha;
}

// Number of length-N compositions whose block sums equal alpha:
// prod_p C(kappa_p + alpha_p - 1, alpha_p).
inline BigInt preimage_cardinality(const MultiplicityVector& kappa,
                                   const std::vector<long long>& alpha) {
    if (static_cast<int>(alpha.size()) != kappa.blocks())
        throw invalid_input_error("preimage_cardinality: length differs from block count");
    BigInt r = 1;
    for (int p = 1; p <= kappa.blocks(); ++p) {
        if (alpha[p - 1] < 0)
            throw invalid_input_error("preimage_cardinality: negative part");
        r *= binomial(BigInt(kappa.kappa(p)) + alpha[p - 1] - 1, alpha[p - 1]);
    }
    return r;
}

// Unsigned Stirling numbers of the first kind, by the triangle recurrence
// s(a+1, b) = a*s(a, b) + s(a, b-1) with s(0, 0) = 1.
inline BigInt stirling_first_unsigned(int a, int b) {
    if (a < 0 || b < 0) throw invalid_input_error("stirling: negative argument");
    if (b > a) return 0;
    std::vector<BigInt> row(static_cast<size_t>(a) + 1, 0);
    row[0] = 1; // row for a = 0
    for (int i = 0; i < a; ++i)
        for (int j = std::min(i + 1, b); j >= 0; --j)
            row[j] = i * row[j] + (j > 0 ? row[j - 1] : 0);
    return row[b];
}

} // namespace homrep
