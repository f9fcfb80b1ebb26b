// Command-line front end: evaluation, coefficient tables, the consistency
// sweep, and benchmarking.  Exit codes: 0 success, 2 invalid input,
// 3 verification failure.

#include <chrono>
#include <climits>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homrep/homrep.hpp"

using nlohmann::json;
namespace hr = homrep;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

long long parse_integer(const std::string& text, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw hr::invalid_input_error("");
        return v;
    } catch (const std::exception&) {
        throw hr::invalid_input_error(std::string(what) + ": cannot parse '" + text +
                                      "' as an integer");
    }
}

template <class S>
hr::PointList<S> parse_points(const std::string& csv) {
    std::vector<S> pts;
    for (const std::string& part : split(csv, ','))
        pts.push_back(hr::scalar_traits<S>::parse(part));
    return hr::PointList<S>(std::move(pts));
}

hr::MultiplicityVector parse_kappa(const std::string& csv) {
    std::vector<int> entries;
    for (const std::string& part : split(csv, ','))
        entries.push_back(static_cast<int>(parse_integer(part, "--kappa")));
    return hr::MultiplicityVector(entries);
}

hr::Partition parse_partition(const std::string& csv) {
    std::vector<long long> parts;
    for (const std::string& part : split(csv, ','))
        parts.push_back(parse_integer(part, "--lambda"));
    return hr::Partition(std::move(parts));
}

// A degree spec is either one integer or an inclusive range "a..b".
std::vector<long long> parse_degree_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        long long m = parse_integer(text, "--m");
        if (m < 0) throw hr::invalid_input_error("--m: degree must be nonnegative");
        return {m};
    }
    long long a = parse_integer(text.substr(0, dots), "--m");
    long long b = parse_integer(text.substr(dots + 2), "--m");
    if (a < 0) throw hr::invalid_input_error("--m: degree must be nonnegative");
    if (a > b) throw hr::invalid_input_error("--m: empty range");
    if (b - a >= 100000) throw hr::invalid_input_error("--m: range has too many degrees");
    std::vector<long long> ms;
    for (long long m = a; m <= b; ++m) ms.push_back(m);
    return ms;
}

json value_json(const hr::Rational& v) { return v.str(); }
json value_json(double v) { return v; }

std::string value_text(const hr::Rational& v) { return v.str(); }
std::string value_text(double v) { return hr::scalar_traits<double>::repr(v); }

bool values_agree(const hr::Rational& a, const hr::Rational& b, double) { return a == b; }
bool values_agree(double a, double b, double tol) { return hr::approx_equal(a, b, tol); }

struct EvalOptions {
    std::string y_csv, kappa_csv, m_spec, lambda_csv;
    std::string method = "all";
    std::string mode = "exact";
    std::string format = "plain";
    double tol = hr::default_rel_tol;
    std::uint64_t seed = 0;
};

template <class S>
json input_points_json(const hr::PointList<S>& y) {
    json arr = json::array();
    for (int i = 0; i < y.size(); ++i) arr.push_back(value_json(y[i]));
    return arr;
}

json kappa_json(const hr::MultiplicityVector& kappa) {
    json arr = json::array();
    for (int e : kappa.entries()) arr.push_back(e);
    return arr;
}

void emit_eval_report(const EvalOptions& opt, const json& input, const json& results,
                      const std::string& verdict) {
    if (opt.format == "json") {
        json report{{"command", "eval"},
                    {"input", input},
                    {"results", results},
                    {"verdict", verdict},
                    {"seed", opt.seed}};
        std::cout << report.dump(2) << "\n";
        return;
    }
    if (opt.format == "csv") {
        std::cout << "method,m,value\n";
        for (const json& row : results) {
            std::string m = row["m"].is_null() ? "-" : std::to_string(row["m"].get<long long>());
            std::string v = row["value"].is_string() ? row["value"].get<std::string>()
                                                     : row["value"].dump();
            std::cout << row["method"].get<std::string>() << "," << m << "," << v << "\n";
        }
        return;
    }
    for (const json& row : results) {
        std::string m = row["m"].is_null() ? "-" : std::to_string(row["m"].get<long long>());
        std::string v = row["value"].is_string() ? row["value"].get<std::string>()
                                                 : row["value"].dump();
        std::cout << row["method"].get<std::string>() << " m=" << m << " value=" << v << "\n";
    }
    std::cout << "verdict: " << verdict << "\n";
}

template <class S>
int run_eval(const EvalOptions& opt) {
    hr::PointList<S> y = parse_points<S>(opt.y_csv);
    hr::MultiplicityVector kappa = parse_kappa(opt.kappa_csv);
    if (y.size() != kappa.blocks())
        throw hr::invalid_input_error("--y and --kappa must have the same length");
    if (opt.m_spec.empty() == opt.lambda_csv.empty())
        throw hr::invalid_input_error("eval: provide exactly one of --m or --lambda");

    json input{{"y", input_points_json(y)},
               {"kappa", kappa_json(kappa)},
               {"mode", opt.mode},
               {"method", opt.method}};
    if (opt.mode == "approx") input["tol"] = opt.tol;

    json results = json::array();
    bool agree = true;

    if (!opt.lambda_csv.empty()) {
        hr::Partition lambda = parse_partition(opt.lambda_csv);
        input["lambda"] = lambda.parts();
        if (opt.method != "all" && opt.method != "bialternant")
            throw hr::invalid_input_error("eval: --lambda supports --method bialternant or all");
        std::vector<std::pair<std::string, S>> vals;
        vals.emplace_back("bialternant", hr::schur_rep_bialternant(lambda, y, kappa));
        if (opt.method == "all") {
            std::vector<S> flat = hr::expand_points(y.points(), kappa);
            vals.emplace_back("jacobiTrudi", hr::schur_oracle_jacobi_trudi(lambda, flat));
            // the tableau enumeration is exponential; keep it to small shapes
            if (lambda.weight() <= 8 && kappa.total() <= 8)
                vals.emplace_back("tableaux", hr::schur_oracle_tableaux(lambda, flat));
        }
        for (const auto& [name, v] : vals) {
            agree = agree && values_agree(v, vals.front().second, opt.tol);
            results.push_back({{"method", name}, {"m", nullptr}, {"value", value_json(v)}});
        }
    } else {
        input["m"] = opt.m_spec;
        bool want_all = opt.method == "all";
        std::optional<hr::CoefficientTable<S>> table_a, table_b;
        if (want_all || opt.method == "expansionA")
            table_a.emplace(hr::build_coefficient_table(hr::CoeffFamily::A, y, kappa));
        if (want_all || opt.method == "expansionB")
            table_b.emplace(hr::build_coefficient_table(hr::CoeffFamily::B, y, kappa));
        for (long long m : parse_degree_range(opt.m_spec)) {
            std::vector<std::pair<std::string, S>> vals;
            if (want_all || opt.method == "combinatorial")
                vals.emplace_back("combinatorial", hr::hom_rep_combinatorial(y, kappa, m));
            if (want_all || opt.method == "bialternant")
                vals.emplace_back("bialternant", hr::hom_rep_bialternant(y, kappa, m));
            if (table_a) vals.emplace_back("expansionA", hr::evaluate_expansion_A(*table_a, y, m));
            if (table_b) vals.emplace_back("expansionB", hr::evaluate_expansion_B(*table_b, y, m));
            for (const auto& [name, v] : vals) {
                agree = agree && values_agree(v, vals.front().second, opt.tol);
                results.push_back({{"method", name}, {"m", m}, {"value", value_json(v)}});
            }
        }
    }

    std::string verdict = agree ? "agree" : "disagree";
    emit_eval_report(opt, input, results, verdict);
    return agree ? 0 : 3;
}

struct CoeffsOptions {
    std::string y_csv, kappa_csv;
    std::string family = "B";
    std::string mode = "exact";
    std::string format = "plain";
    std::uint64_t seed = 0;
};

template <class S>
int run_coeffs(const CoeffsOptions& opt) {
    hr::PointList<S> y = parse_points<S>(opt.y_csv);
    hr::MultiplicityVector kappa = parse_kappa(opt.kappa_csv);
    hr::CoeffFamily family = opt.family == "A" ? hr::CoeffFamily::A : hr::CoeffFamily::B;
    hr::CoefficientTable<S> table = hr::build_coefficient_table(family, y, kappa);

    // For the B family also report the last column of the inverse confluent
    // Vandermonde matrix, computed by the independent polynomial route.
    std::vector<S> inverse_column;
    if (family == hr::CoeffFamily::B) {
        hr::DenseMatrix<S> inv = hr::inverse_V_moucouf(y, kappa);
        for (int k = 1; k <= kappa.total(); ++k)
            inverse_column.push_back(inv(k - 1, kappa.total() - 1));
    }

    json results = json::array();
    for (int s = 1; s <= kappa.blocks(); ++s)
        for (int r = 1; r <= kappa.kappa(s); ++r) {
            json row{{"s", s}, {"r", r}, {"value", value_json(table.at(s, r))}};
            if (!inverse_column.empty())
                row["inverse_last_column"] =
                    value_json(inverse_column[hr::rho(kappa, hr::IndexPair{s, r}) - 1]);
            results.push_back(std::move(row));
        }

    if (opt.format == "json") {
        json report{{"command", "coeffs"},
                    {"input",
                     {{"family", opt.family},
                      {"y", input_points_json(y)},
                      {"kappa", kappa_json(kappa)},
                      {"mode", opt.mode}}},
                    {"results", results},
                    {"verdict", "agree"},
                    {"seed", opt.seed}};
        std::cout << report.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "family,s,r,value,inverse_last_column\n";
        for (const json& row : results) {
            std::string v = row["value"].is_string() ? row["value"].get<std::string>()
                                                     : row["value"].dump();
            std::string w;
            if (row.contains("inverse_last_column"))
                w = row["inverse_last_column"].is_string()
                        ? row["inverse_last_column"].get<std::string>()
                        : row["inverse_last_column"].dump();
            std::cout << opt.family << "," << row["s"].get<int>() << ","
                      << row["r"].get<int>() << "," << v << "," << w << "\n";
        }
    } else {
        for (const json& row : results) {
            std::string v = row["value"].is_string() ? row["value"].get<std::string>()
                                                     : row["value"].dump();
            std::cout << opt.family << "(" << row["s"].get<int>() << ","
                      << row["r"].get<int>() << ") = " << v;
            if (row.contains("inverse_last_column")) {
                std::string w = row["inverse_last_column"].is_string()
                                    ? row["inverse_last_column"].get<std::string>()
                                    : row["inverse_last_column"].dump();
                std::cout << "  inverse_last_column = " << w;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

struct CrosscheckOptions {
    int max_n = 4;
    int max_kappa = 7;
    long long max_m = 8;
    std::uint64_t seed = 0;
    bool inject_fault = false;
    std::string format = "plain";
};

int run_crosscheck(const CrosscheckOptions& opt) {
    hr::crosscheck::Config config;
    config.max_n = opt.max_n;
    config.max_kappa = opt.max_kappa;
    config.max_m = opt.max_m;
    config.seed = opt.seed;
    config.inject_fault = opt.inject_fault;
    hr::crosscheck::Report report = hr::crosscheck::run(config);

    if (opt.format == "json") {
        json results = json::array();
        for (const auto& c : report.counters)
            results.push_back({{"check", c.name}, {"runs", c.runs}, {"failures", c.failures}});
        json failures = json::array();
        for (const auto& f : report.failures)
            failures.push_back(
                {{"check", f.check}, {"detail", f.detail}, {"reproducer", f.reproducer}});
        json out{{"command", "crosscheck"},
                 {"input",
                  {{"max_n", opt.max_n},
                   {"max_kappa", opt.max_kappa},
                   {"max_m", opt.max_m},
                   {"inject_fault", opt.inject_fault}}},
                 {"results", results},
                 {"failures", failures},
                 {"total_runs", report.total_runs()},
                 {"total_failures", report.total_failures()},
                 {"verdict", report.all_passed() ? "pass" : "fail"},
                 {"seed", opt.seed}};
        std::cout << out.dump(2) << "\n";
        for (const auto& f : report.failures)
            std::cerr << "FAIL " << f.check << ": " << f.detail
                      << "\n  reproducer: " << f.reproducer << "\n";
    } else {
        for (const auto& c : report.counters)
            std::cout << c.name << ": runs=" << c.runs << " failures=" << c.failures << "\n";
        for (const auto& f : report.failures)
            std::cout << "FAIL " << f.check << ": " << f.detail
                      << "\n  reproducer: " << f.reproducer << "\n";
        std::cout << "total: runs=" << report.total_runs()
                  << " failures=" << report.total_failures() << " verdict="
                  << (report.all_passed() ? "pass" : "fail") << "\n";
    }
    return report.all_passed() ? 0 : 3;
}

struct BenchOptions {
    std::string kappa_csv = "4,4,4";
    std::string y_csv;
    std::string m_csv = "1000,1000000,1000000000";
    std::string mode = "approx";
    std::string format = "csv";
    long long sweep = 2000;
    int reps = 5;
    double tol = hr::default_rel_tol;
    std::uint64_t seed = 0;
};

// Evenly spaced points inside (0, 1); keeps huge powers finite in binary64.
hr::PointList<double> default_bench_points(int n) {
    std::vector<double> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back((2.0 * i + 1.0) / (2.0 * n));
    return hr::PointList<double>(std::move(pts));
}

int run_bench(const BenchOptions& opt) {
    if (opt.mode != "approx")
        throw hr::invalid_input_error("bench: only approx mode is supported");
    if (opt.sweep < 1 || opt.reps < 1)
        throw hr::invalid_input_error("bench: sweep and reps must be positive");
    hr::MultiplicityVector kappa = parse_kappa(opt.kappa_csv);
    hr::PointList<double> y = opt.y_csv.empty() ? default_bench_points(kappa.blocks())
                                                : parse_points<double>(opt.y_csv);
    if (y.size() != kappa.blocks())
        throw hr::invalid_input_error("--y and --kappa must have the same length");
    y.require_distinct("bench");
    int N = kappa.total();

    std::vector<long long> degrees;
    for (const std::string& part : split(opt.m_csv, ',')) {
        long long m = parse_integer(part, "--m");
        if (m < 0) throw hr::invalid_input_error("--m: degree must be nonnegative");
        degrees.push_back(m);
    }

    using clock = std::chrono::steady_clock;
    auto elapsed_nanos = [](clock::time_point t0) -> long long {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0)
            .count();
    };

    struct Row {
        long long m;
        std::string method;
        long long nanos;
    };
    std::vector<Row> rows;

    // One-time table construction, repeated to take the best.
    std::optional<hr::ExpansionTable<double>> table;
    long long build_best = LLONG_MAX;
    for (int rep = 0; rep < opt.reps; ++rep) {
        auto t0 = clock::now();
        table.emplace(hr::expansion_polynomials(y, kappa));
        build_best = std::min(build_best, elapsed_nanos(t0));
    }
    rows.push_back({0, "expansion-build", build_best});

    volatile double sink = 0;
    bool agree = true;
    for (long long m : degrees) {
        // Per-degree sweep cost: batch over opt.sweep consecutive degrees so a
        // single evaluation is measurable, then take the best per-call time.
        long long sweep_best = LLONG_MAX;
        for (int rep = 0; rep < opt.reps; ++rep) {
            double acc = 0;
            auto t0 = clock::now();
            for (long long i = 0; i < opt.sweep; ++i) acc += table->evaluate(m + i);
            sweep_best = std::min(sweep_best, elapsed_nanos(t0));
            sink = sink + acc;
        }
        rows.push_back({m, "expansion-eval", sweep_best / opt.sweep});

        double via_det = 0;
        long long det_best = LLONG_MAX;
        for (int rep = 0; rep < opt.reps; ++rep) {
            auto t0 = clock::now();
            via_det = hr::hom_rep_bialternant(y, kappa, m);
            det_best = std::min(det_best, elapsed_nanos(t0));
        }
        rows.push_back({m, "bialternant", det_best});
        agree = agree && hr::approx_equal(via_det, table->evaluate(m), opt.tol);

        try {
            double via_comb = 0;
            long long comb_best = LLONG_MAX;
            for (int rep = 0; rep < opt.reps; ++rep) {
                auto t0 = clock::now();
                via_comb = hr::hom_rep_combinatorial(y, kappa, m);
                comb_best = std::min(comb_best, elapsed_nanos(t0));
            }
            rows.push_back({m, "combinatorial", comb_best});
            agree = agree && hr::approx_equal(via_comb, via_det, opt.tol);
        } catch (const hr::size_error& e) {
            std::cerr << "note: combinatorial route refused at m=" << m << ": " << e.what()
                      << "\n";
        }
    }

    if (opt.format == "json") {
        json results = json::array();
        for (const Row& row : rows)
            results.push_back(
                {{"N", N}, {"m", row.m}, {"method", row.method}, {"nanos", row.nanos}});
        json out{{"command", "bench"},
                 {"input",
                  {{"y", input_points_json(y)},
                   {"kappa", kappa_json(kappa)},
                   {"m", opt.m_csv},
                   {"sweep", opt.sweep},
                   {"reps", opt.reps},
                   {"mode", opt.mode},
                   {"tol", opt.tol}}},
                 {"results", results},
                 {"verdict", agree ? "agree" : "disagree"},
                 {"seed", opt.seed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "N,m,method,nanos\n";
        for (const Row& row : rows)
            std::cout << N << "," << row.m << "," << row.method << "," << row.nanos << "\n";
        if (!agree) std::cerr << "note: methods disagreed beyond the tolerance\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete homogeneous and Schur polynomials with repeated variables"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate h_m(y^[kappa]) or s_lambda(y^[kappa])");
    eval_cmd->add_option("--y", eval_opt.y_csv, "comma-separated points")->required();
    eval_cmd->add_option("--kappa", eval_opt.kappa_csv, "comma-separated multiplicities")
        ->required();
    CLI::Option* m_opt =
        eval_cmd->add_option("--m", eval_opt.m_spec, "degree, or inclusive range a..b");
    CLI::Option* lambda_opt = eval_cmd->add_option(
        "--lambda", eval_opt.lambda_csv, "partition (weakly decreasing), for Schur values");
    m_opt->excludes(lambda_opt);
    eval_cmd->add_option("--method", eval_opt.method, "route selector")
        ->check(CLI::IsMember(
            {"all", "combinatorial", "bialternant", "expansionA", "expansionB"}));
    eval_cmd->add_option("--mode", eval_opt.mode, "arithmetic realization")
        ->check(CLI::IsMember({"exact", "approx"}));
    eval_cmd->add_option("--format", eval_opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    eval_cmd->add_option("--tol", eval_opt.tol, "relative tolerance (approx mode)");
    eval_cmd->add_option("--seed", eval_opt.seed, "seed recorded in reports");

    CoeffsOptions coeffs_opt;
    CLI::App* coeffs_cmd =
        app.add_subcommand("coeffs", "partial-fraction coefficient tables");
    coeffs_cmd->add_option("--y", coeffs_opt.y_csv, "comma-separated points")->required();
    coeffs_cmd->add_option("--kappa", coeffs_opt.kappa_csv, "comma-separated multiplicities")
        ->required();
    coeffs_cmd->add_option("--family", coeffs_opt.family, "coefficient family")
        ->check(CLI::IsMember({"A", "B"}));
    coeffs_cmd->add_option("--mode", coeffs_opt.mode, "arithmetic realization")
        ->check(CLI::IsMember({"exact", "approx"}));
    coeffs_cmd->add_option("--format", coeffs_opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    coeffs_cmd->add_option("--seed", coeffs_opt.seed, "seed recorded in reports");

    CrosscheckOptions cc_opt;
    CLI::App* cc_cmd = app.add_subcommand(
        "crosscheck", "exact consistency sweep over a grid of shapes and degrees");
    cc_cmd->add_option("--max-n", cc_opt.max_n, "largest block count");
    cc_cmd->add_option("--max-kappa", cc_opt.max_kappa, "largest total multiplicity");
    cc_cmd->add_option("--max-m", cc_opt.max_m, "largest degree");
    cc_cmd->add_option("--seed", cc_opt.seed, "seed for the point sampler");
    cc_cmd->add_flag("--inject-fault", cc_opt.inject_fault,
                     "corrupt one comparison to prove failures are detected");
    cc_cmd->add_option("--format", cc_opt.format, "output format")
        ->check(CLI::IsMember({"json", "plain"}));

    BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "timing comparison of the routes");
    bench_cmd->add_option("--kappa", bench_opt.kappa_csv, "comma-separated multiplicities");
    bench_cmd->add_option("--y", bench_opt.y_csv,
                          "points; defaults to evenly spaced values inside (0,1)");
    bench_cmd->add_option("--m", bench_opt.m_csv, "comma-separated degrees to time");
    bench_cmd->add_option("--sweep", bench_opt.sweep, "evaluations per timing batch");
    bench_cmd->add_option("--reps", bench_opt.reps, "repetitions; the best time wins");
    bench_cmd->add_option("--mode", bench_opt.mode, "arithmetic realization (approx only)");
    bench_cmd->add_option("--format", bench_opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    bench_cmd->add_option("--tol", bench_opt.tol, "relative tolerance for agreement");
    bench_cmd->add_option("--seed", bench_opt.seed, "seed recorded in reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed())
            return eval_opt.mode == "approx" ? run_eval<double>(eval_opt)
                                             : run_eval<hr::Rational>(eval_opt);
        if (coeffs_cmd->parsed())
            return coeffs_opt.mode == "approx" ? run_coeffs<double>(coeffs_opt)
                                               : run_coeffs<hr::Rational>(coeffs_opt);
        if (cc_cmd->parsed()) return run_crosscheck(cc_opt);
        if (bench_cmd->parsed()) return run_bench(bench_opt);
    } catch (const hr::size_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hr::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hr::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
