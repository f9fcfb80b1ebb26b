#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "homrep/matrix.hpp"
#include "homrep/rational.hpp"
#include "homrep/scalar.hpp"
#include "homrep/series.hpp"
#include "test_util.hpp"

using namespace homrep;

TEST_CASE("rational normalization and printing", "[numeric]") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-7, 1).str() == "-7");
    CHECK_THROWS_AS(Rational(1, 0), invalid_input_error);

    std::ostringstream os;
    os << Rational(22, -33);
    CHECK(os.str() == "-2/3");
}

TEST_CASE("rational parsing", "[numeric]") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("14") == Rational(14));
    CHECK(Rational::parse("+5/10") == Rational(1, 2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse(""), invalid_input_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), invalid_input_error);
    CHECK_THROWS_AS(Rational::parse("a/2"), invalid_input_error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), invalid_input_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), invalid_input_error);
    CHECK_THROWS_AS(Rational::parse(" 1"), invalid_input_error);
    CHECK_THROWS_AS(Rational::parse("1/"), invalid_input_error);

    SECTION("round trip") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long long> num(-500, 500), den(1, 500);
        for (int i = 0; i < 200; ++i) {
            Rational r(num(rng), den(rng));
            CHECK(Rational::parse(r.str()) == r);
        }
    }
}

TEST_CASE("rational arithmetic satisfies field axioms on samples", "[numeric]") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> num(-30, 30), den(1, 12);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 100; ++i) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!(a == Rational(0))) CHECK(a / a == Rational(1));
        CHECK(a - b == a + (-b));
    }
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 8) == Rational(4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), invalid_input_error);
}

TEST_CASE("rational ordering and absolute value", "[numeric]") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
    CHECK(abs(Rational(7, 2)) == Rational(7, 2));
    CHECK(Rational(1, 3).to_double() == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("scalar traits and conversions", "[numeric]") {
    STATIC_CHECK(scalar_traits<Rational>::is_exact);
    STATIC_CHECK_FALSE(scalar_traits<double>::is_exact);

    CHECK(scalar_traits<Rational>::from_bigint(BigInt(-3)) == Rational(-3));
    CHECK(scalar_traits<double>::from_bigint(BigInt(1) << 80) ==
          Catch::Approx(1.2089258196146292e24));
    CHECK(scalar_traits<Rational>::from_ratio(BigInt(3), BigInt(6)) == Rational(1, 2));
    CHECK(scalar_traits<double>::from_ratio(BigInt(1), BigInt(3)) ==
          Catch::Approx(1.0 / 3.0));
    CHECK(scalar_traits<Rational>::parse("-5/4") == Rational(-5, 4));
    CHECK(scalar_traits<double>::parse("0.25") == 0.25);
    CHECK_THROWS_AS(scalar_traits<double>::parse("0.25x"), invalid_input_error);
    CHECK(scalar_traits<double>::parse(scalar_traits<double>::repr(0.1)) == 0.1);
}

TEST_CASE("approximate comparison and powers", "[numeric]") {
    CHECK(approx_equal(1.0, 1.0 + 1e-12));
    CHECK_FALSE(approx_equal(1.0, 1.0 + 1e-6));
    CHECK(approx_equal(0.0, 0.0));
    CHECK(approx_equal(-2.0, -2.0 * (1 + 1e-13)));

    CHECK(pow_scalar(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_scalar(Rational(2, 3), 0) == Rational(1));
    CHECK(pow_scalar(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_scalar(Rational(-1, 2), 3) == Rational(-1, 8));
    CHECK(pow_scalar(2.0, 10) == 1024.0);
    CHECK_THROWS_AS(pow_scalar(Rational(0), -1), invalid_input_error);
}

TEST_CASE("dense matrix basics", "[numeric]") {
    DenseMatrix<Rational> a(2, 3);
    a(0, 0) = Rational(1);
    a(1, 2) = Rational(5);
    CHECK(a(0, 1) == Rational(0));
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);

    auto id = DenseMatrix<Rational>::identity(3);
    DenseMatrix<Rational> b(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) b(i, j) = Rational(i + 10 * j);
    CHECK(id * b == b);
}

TEST_CASE("fraction-free determinant", "[numeric]") {
    SECTION("known 3x3 value") {
        DenseMatrix<Rational> m(3, 3);
        long long rows[3][3] = {{1, 1, 0}, {1, 3, 1}, {1, 9, 6}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = Rational(rows[i][j]);
        CHECK(det_fraction_free(m) == Rational(4));
    }

    SECTION("agrees with cofactor expansion on random matrices") {
        std::mt19937_64 rng(19);
        std::uniform_int_distribution<long long> entry(-6, 6), den(1, 4);
        for (int n = 1; n <= 5; ++n)
            for (int trial = 0; trial < 12; ++trial) {
                DenseMatrix<Rational> m(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m(i, j) = Rational(entry(rng), den(rng));
                CHECK(det_fraction_free(m) == testutil::cofactor_det(m));
            }
    }

    SECTION("zero pivot forces a row swap") {
        DenseMatrix<Rational> m(2, 2);
        m(0, 0) = Rational(0);
        m(0, 1) = Rational(1);
        m(1, 0) = Rational(1);
        m(1, 1) = Rational(0);
        CHECK(det_fraction_free(m) == Rational(-1));
    }

    SECTION("singular matrix gives zero") {
        DenseMatrix<Rational> m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = Rational(i + j);
        CHECK(det_fraction_free(m) == Rational(0));
    }

    SECTION("empty matrix has determinant one") {
        DenseMatrix<Rational> m(0, 0);
        CHECK(det_fraction_free(m) == Rational(1));
    }
}

TEST_CASE("pivoted determinant over binary64", "[numeric]") {
    DenseMatrix<double> m(3, 3);
    double rows[3][3] = {{1, 1, 0}, {1, 3, 1}, {1, 9, 6}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j];
    CHECK(det_partial_pivot(m) == Catch::Approx(4.0));

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            DenseMatrix<double> d(n, n);
            DenseMatrix<Rational> q(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    long long scaled = static_cast<long long>(entry(rng) * 16);
                    d(i, j) = static_cast<double>(scaled) / 16.0;
                    q(i, j) = Rational(scaled, 16);
                }
            double exact = det_fraction_free(q).to_double();
            CHECK(det_partial_pivot(d) == Catch::Approx(exact).margin(1e-9));
        }

    SECTION("determinant() dispatches on scalar kind") {
        DenseMatrix<Rational> q(2, 2);
        q(0, 0) = Rational(1, 2);
        q(1, 1) = Rational(4);
        CHECK(determinant(q) == Rational(2));
        DenseMatrix<double> d(2, 2);
        d(0, 0) = 0.5;
        d(1, 1) = 4.0;
        CHECK(determinant(d) == Catch::Approx(2.0));
    }
}

TEST_CASE("linear solve", "[numeric]") {
    SECTION("known system") {
        DenseMatrix<Rational> m(2, 2);
        m(0, 0) = Rational(2);
        m(0, 1) = Rational(1);
        m(1, 0) = Rational(1);
        m(1, 1) = Rational(3);
        std::vector<Rational> rhs{Rational(5), Rational(10)};
        auto x = solve_linear(m, rhs);
        CHECK(x == std::vector<Rational>{Rational(1), Rational(3)});
    }

    SECTION("random systems reproduce their right-hand side") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<long long> entry(-5, 5);
        for (int n = 1; n <= 5; ++n)
            for (int trial = 0; trial < 10; ++trial) {
                DenseMatrix<Rational> m(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m(i, j) = Rational(entry(rng));
                if (det_fraction_free(m) == Rational(0)) continue;
                std::vector<Rational> b(n);
                for (auto& v : b) v = Rational(entry(rng));
                auto x = solve_linear(m, b);
                for (int i = 0; i < n; ++i) {
                    Rational acc(0);
                    for (int j = 0; j < n; ++j) acc += m(i, j) * x[j];
                    CHECK(acc == b[i]);
                }
            }
    }

    SECTION("singular system throws") {
        DenseMatrix<Rational> m(2, 2);
        m(0, 0) = Rational(1);
        m(0, 1) = Rational(2);
        m(1, 0) = Rational(2);
        m(1, 1) = Rational(4);
        std::vector<Rational> rhs{Rational(1), Rational(1)};
        CHECK_THROWS_AS(solve_linear(m, rhs), singular_matrix_error);
    }
}

TEST_CASE("truncated power series", "[numeric]") {
    SECTION("reciprocal of 1 - t is the geometric series") {
        TruncatedSeries<Rational> p(
            std::vector<Rational>{Rational(1), Rational(-1), Rational(0), Rational(0)});
        auto r = series_reciprocal(p);
        CHECK(r.coeff(0) == Rational(1));
        CHECK(r.coeff(1) == Rational(1));
        CHECK(r.coeff(2) == Rational(1));
        CHECK(r.coeff(3) == Rational(1));
    }

    SECTION("reciprocal of a general cubic start") {
        TruncatedSeries<Rational> p(std::vector<Rational>{
            Rational(1), Rational(3), Rational(7), Rational(0), Rational(0)});
        auto r = series_reciprocal(p);
        CHECK(r.coeff(0) == Rational(1));
        CHECK(r.coeff(1) == Rational(-3));
        CHECK(r.coeff(2) == Rational(2));
        CHECK(r.coeff(3) == Rational(15));
        CHECK(r.coeff(4) == Rational(-59));
    }

    SECTION("product with reciprocal is one to the stated order") {
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<long long> num(-4, 4), den(1, 3);
        for (int trial = 0; trial < 20; ++trial) {
            const int order = 16;
            std::vector<Rational> cs(order + 1);
            cs[0] = Rational(1 + (trial % 3));
            for (int k = 1; k <= order; ++k) cs[k] = Rational(num(rng), den(rng));
            TruncatedSeries<Rational> p(cs);
            auto q = p * series_reciprocal(p);
            CHECK(q == TruncatedSeries<Rational>::one(order));
        }
    }

    SECTION("zero constant term is rejected") {
        TruncatedSeries<Rational> p(std::vector<Rational>{Rational(0), Rational(1)});
        CHECK_THROWS_AS(series_reciprocal(p), singular_series_error);
    }

    SECTION("product of (1 - x t) factors") {
        using testutil::rvec;
        auto s = product_one_minus_xt(rvec({1, 2}), 4);
        CHECK(s.coeff(0) == Rational(1));
        CHECK(s.coeff(1) == Rational(-3));
        CHECK(s.coeff(2) == Rational(2));
        CHECK(s.coeff(3) == Rational(0));
    }
}
