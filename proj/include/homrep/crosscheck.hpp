#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "homrep/coeffs.hpp"
#include "homrep/combinat.hpp"
#include "homrep/expansions.hpp"
#include "homrep/homcore.hpp"
#include "homrep/matrix.hpp"
#include "homrep/rational.hpp"
#include "homrep/vandermonde.hpp"

namespace homrep::crosscheck {

struct Config {
    int max_n = 4;         // most blocks
    int max_kappa = 7;     // largest |kappa|
    long long max_m = 8;   // largest degree
    std::uint64_t seed = 0;
    bool inject_fault = false; // corrupt one comparison; harness self-test
    // The flat-list oracle re-enumerates M_{N,m}; skip it when that count
    // exceeds this bound so extended sweeps stay inside their time budget.
    long long flat_oracle_term_limit = 20000;
};

struct CheckCounter {
    std::string name;
    long long runs = 0;
    long long failures = 0;
};

struct Failure {
    std::string check;
    std::string detail;
    std::string reproducer;
};

struct Report {
    std::vector<CheckCounter> counters;
    std::vector<Failure> failures; // first few only; counters hold full tallies
    long long total_runs() const {
        long long t = 0;
        for (const auto& c : counters) t += c.runs;
        return t;
    }
    long long total_failures() const {
        long long t = 0;
        for (const auto& c : counters) t += c.failures;
        return t;
    }
    bool all_passed() const { return total_failures() == 0; }
};

// Every multiplicity vector with at most max_n blocks and |kappa| <= max_total,
// in deterministic order: by block count, then total, then lexicographically.
inline std::vector<std::vector<int>> multiplicity_vectors(int max_n, int max_total) {
    std::vector<std::vector<int>> out;
    for (int n = 1; n <= max_n; ++n)
        for (int total = n; total <= max_total; ++total)
            for (const auto& comp : WeakCompositions(n, total - n)) {
                std::vector<int> kappa(n);
                for (int j = 0; j < n; ++j) kappa[j] = static_cast<int>(comp[j]) + 1;
                out.push_back(std::move(kappa));
            }
    return out;
}

// Deterministic source of small rationals (|numerator| and denominator bounded
// by 9 unless told otherwise).
class RationalPointSampler {
public:
    explicit RationalPointSampler(std::uint64_t seed) : rng_(seed) {}

    Rational small_nonzero(int max_num = 9, int max_den = 9) {
        std::uniform_int_distribution<int> num(-max_num, max_num);
        std::uniform_int_distribution<int> den(1, max_den);
        for (;;) {
            int p = num(rng_);
            if (p != 0) return Rational(BigInt(p), BigInt(den(rng_)));
        }
    }

    std::vector<Rational> distinct_nonzero(int n, int max_num = 9, int max_den = 9) {
        std::vector<Rational> pts;
        while (static_cast<int>(pts.size()) < n) {
            Rational v = small_nonzero(max_num, max_den);
            bool fresh = true;
            for (const Rational& p : pts) fresh = fresh && p != v;
            if (fresh) pts.push_back(v);
        }
        return pts;
    }

private:
    std::mt19937_64 rng_;
};

namespace detail {

inline std::string join_csv(const std::vector<Rational>& vals) {
    std::string s;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) s += ",";
        s += vals[i].str();
    }
    return s;
}

inline std::string join_csv(const std::vector<int>& vals) {
    std::string s;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vals[i]);
    }
    return s;
}

class Recorder {
public:
    explicit Recorder(Report& report) : report_(&report) {}

    int category(const std::string& name) {
        for (size_t i = 0; i < report_->counters.size(); ++i)
            if (report_->counters[i].name == name) return static_cast<int>(i);
        report_->counters.push_back({name, 0, 0});
        return static_cast<int>(report_->counters.size()) - 1;
    }

    void record(int cat, bool ok, const std::string& detail, const std::string& reproducer) {
        CheckCounter& c = report_->counters[cat];
        ++c.runs;
        if (!ok) {
            ++c.failures;
            if (report_->failures.size() < 25)
                report_->failures.push_back({c.name, detail, reproducer});
        }
    }

private:
    Report* report_;
};

} // namespace detail

// Exact-arithmetic consistency sweep.  For every multiplicity vector on the
// grid it draws seeded distinct nonzero rational points and checks that the
// independent routes and identities agree exactly.  Deterministic for a given
// seed: points are drawn in grid-enumeration order.
inline Report run(const Config& config) {
    using R = Rational;
    Report report;
    detail::Recorder rec(report);
    const int cat_four_way = rec.category("four-way");
    const int cat_table = rec.category("expansion-table");
    const int cat_flat = rec.category("flat-oracle");
    const int cat_equiv = rec.category("equivalence");
    const int cat_pf_monic = rec.category("recombination-monic");
    const int cat_pf_unital = rec.category("recombination-unital");
    const int cat_inv_id = rec.category("inverse-identity");
    const int cat_inv_col = rec.category("inverse-last-column");
    const int cat_adj = rec.category("adjugate-column");
    const int cat_afromb = rec.category("a-from-b");
    const int cat_deriv = rec.category("derivative-pole");
    const int cat_shift = rec.category("shift-identity");

    RationalPointSampler sampler(config.seed);
    bool fault_pending = config.inject_fault;

    for (const std::vector<int>& kappa_entries :
         multiplicity_vectors(config.max_n, config.max_kappa)) {
        MultiplicityVector kappa(kappa_entries);
        int n = kappa.blocks();
        int N = kappa.total();
        std::vector<R> pts = sampler.distinct_nonzero(n);
        PointList<R> y(pts);
        std::string where = "--y=" + detail::join_csv(pts) + " --kappa=" +
                            detail::join_csv(kappa_entries);
        auto eval_reproducer = [&](long long m) {
            return "homrep eval --mode exact --method all " + where + " --m=" +
                   std::to_string(m);
        };

        CoefficientTable<R> table_a = build_coefficient_table(CoeffFamily::A, y, kappa);
        CoefficientTable<R> table_b = build_coefficient_table(CoeffFamily::B, y, kappa);
        ExpansionTable<R> expansion = expansion_polynomials(y, kappa);
        std::vector<R> flat = expand_points(y.points(), kappa);

        for (long long m = 0; m <= config.max_m; ++m) {
            R comb = hom_rep_combinatorial(y, kappa, m);
            R bial = hom_rep_bialternant(y, kappa, m);
            R exp_a = evaluate_expansion_A(table_a, y, m);
            R exp_b = evaluate_expansion_B(table_b, y, m);
            if (fault_pending) {
                exp_a += R(1);
                fault_pending = false;
            }
            bool agree = comb == bial && comb == exp_a && comb == exp_b;
            rec.record(cat_four_way, agree,
                       "routes disagree at " + where + " --m " + std::to_string(m) +
                           ": combinatorial=" + comb.str() + " bialternant=" + bial.str() +
                           " expansionA=" + exp_a.str() + " expansionB=" + exp_b.str(),
                       eval_reproducer(m));

            rec.record(cat_table, expansion.evaluate(m) == comb,
                       "expansion polynomials disagree at " + where + " --m " +
                           std::to_string(m),
                       eval_reproducer(m));

            if (!binomial_exceeds(N + m - 1, N - 1, BigInt(config.flat_oracle_term_limit))) {
                bool flat_ok = hom_combinatorial(flat, m) == comb &&
                               hom_recurrence(flat, m) == comb;
                rec.record(cat_flat, flat_ok,
                           "flat-list oracle disagrees at " + where + " --m " +
                               std::to_string(m),
                           eval_reproducer(m));
            }

            for (int s = 1; s <= n; ++s) {
                auto [lhs, rhs] = equivalence_check(y, kappa, s, m);
                rec.record(cat_equiv, lhs == rhs,
                           "per-block equivalence fails at " + where + " --m " +
                               std::to_string(m) + " block " + std::to_string(s),
                           eval_reproducer(m));
            }

            bool shift_ok;
            {
                std::vector<R> shifted = pts;
                for (R& v : shifted) v += R(1);
                shift_ok = gomezllata_shift(pts, m) == hom_combinatorial(shifted, m);
            }
            rec.record(cat_shift, shift_ok,
                       "shift identity fails at " + where + " --m " + std::to_string(m),
                       eval_reproducer(m));
        }

        {
            auto monic = partial_fraction_monic(y, kappa, config.seed);
            auto unital = partial_fraction_unital(y, kappa, config.seed);
            auto samples = homrep::detail::sample_points_avoiding_poles(
                y, kappa, PoleNormalization::monic, N + 1, config.seed + 1);
            for (const R& t : samples) {
                bool ok = evaluate_partial_fraction(monic, y, t) ==
                          evaluate_pole_product(y, kappa, t, PoleNormalization::monic);
                rec.record(cat_pf_monic, ok,
                           "monic recombination fails at " + where + " t=" + t.str(),
                           "homrep coeffs --family B " + where);
            }
            auto samples_u = homrep::detail::sample_points_avoiding_poles(
                y, kappa, PoleNormalization::unital, N + 1, config.seed + 2);
            for (const R& t : samples_u) {
                bool ok = evaluate_partial_fraction(unital, y, t) ==
                          evaluate_pole_product(y, kappa, t, PoleNormalization::unital);
                rec.record(cat_pf_unital, ok,
                           "unital recombination fails at " + where + " t=" + t.str(),
                           "homrep coeffs --family A " + where);
            }
        }

        {
            DenseMatrix<R> v = build_V(y, kappa).matrix;
            DenseMatrix<R> inv = inverse_V_moucouf(y, kappa);
            rec.record(cat_inv_id, v * inv == DenseMatrix<R>::identity(N),
                       "block inverse fails V*inv=I at " + where,
                       "homrep coeffs --family B " + where);

            bool col_ok = true;
            for (int k = 1; k <= N; ++k) col_ok = col_ok && inv(k - 1, N - 1) == table_b.at_flat(k);
            rec.record(cat_inv_col, col_ok,
                       "inverse last column differs from B coefficients at " + where,
                       "homrep coeffs --family B " + where);

            std::vector<R> adj = adjugate_last_column_G(0, kappa, y);
            long long adj_max_m = std::min<long long>(config.max_m, 6);
            for (long long m = 0; m <= adj_max_m; ++m) {
                DenseMatrix<R> g = build_G_hom_row(m, kappa, y);
                R along_row(0);
                for (int k = 1; k <= N; ++k) along_row += g(N - 1, k - 1) * adj[k - 1];
                rec.record(cat_adj, along_row == det_fraction_free(g),
                           "adjugate-column cofactor expansion fails at " + where + " --m " +
                               std::to_string(m),
                           eval_reproducer(m));
            }
        }

        for (int s = 1; s <= n; ++s) {
            for (int r = 1; r <= kappa.kappa(s); ++r) {
                rec.record(cat_afromb, a_from_b(y, kappa, s, r) == table_a.at(s, r),
                           "A-from-B fails at " + where + " slot (" + std::to_string(s) +
                               "," + std::to_string(r) + ")",
                           "homrep coeffs --family A " + where);
            }
            for (long long d = 0; d < kappa.kappa(s); ++d) {
                R expected = scalar_traits<R>::from_bigint(factorial(d)) *
                             table_b.at(s, kappa.kappa(s) - static_cast<int>(d));
                rec.record(cat_deriv, derivative_F_at_pole(y, kappa, s, d) == expected,
                           "pole derivative identity fails at " + where + " block " +
                               std::to_string(s) + " order " + std::to_string(d),
                           "homrep coeffs --family B " + where);
            }
        }
    }
    return report;
}

} // namespace homrep::crosscheck
