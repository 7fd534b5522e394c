#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdarray/errors.hpp"
#include "pdarray/specfun.hpp"
#include "test_util.hpp"

using namespace pdarray;
using doctest::Approx;

TEST_CASE("marcum trivial anchors") {
    CHECK(specfun::marcum_q(1, 5.0, 0.0) == 1.0);
    CHECK(specfun::marcum_q(2, 0.3, 0.0) == 1.0);
    // a = 0 reduces to exp(-b^2/2) * sum_{k<m} (b^2/2)^k / k!
    CHECK(specfun::marcum_q(1, 0.0, 2.0) == Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(specfun::marcum_q(2, 0.0, 2.0) == Approx(std::exp(-2.0) * 3.0).epsilon(1e-14));
}

TEST_CASE("marcum golden values") {
    for (const auto& row : testutil::load_csv(testutil::data_path("marcum_golden.csv"))) {
        const int m = static_cast<int>(row.num(0));
        const double a = row.num(1), b = row.num(2);
        const double q = row.num(3), qc = row.num(4);
        INFO("m=", m, " a=", a, " b=", b);
        CHECK(specfun::marcum_q(m, a, b) == Approx(q).epsilon(5e-13));
        CHECK(specfun::marcum_q_complement(m, a, b) == Approx(qc).epsilon(5e-13));
        // the complement keeps relative accuracy even when tiny
        if (qc > 0.0 && qc < 1e-6)
            CHECK(specfun::marcum_q_complement(m, a, b) == Approx(qc).epsilon(1e-9));
    }
}

TEST_CASE("marcum against the independent direct series") {
    for (int m : {1, 2, 3, 4}) {
        for (double a : {0.0, 0.4, 1.0, 2.7, 6.0}) {
            for (double b : {0.05, 0.9, 2.2, 5.0}) {
                const double ref = static_cast<double>(testutil::marcum_q_series(m, a, b));
                INFO("m=", m, " a=", a, " b=", b);
                CHECK(specfun::marcum_q(m, a, b) == Approx(ref).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("marcum monotonicity and range") {
    for (int m : {1, 2}) {
        for (double a : {0.0, 1.0, 3.0}) {
            double prev = 1.0;
            for (double b = 0.0; b <= 8.0; b += 0.125) {
                const double q = specfun::marcum_q(m, a, b);
                CHECK(q >= 0.0);
                CHECK(q <= 1.0);
                CHECK(q <= prev + 1e-14);
                prev = q;
            }
        }
        for (double b : {0.5, 2.0}) {
            double prev = 0.0;
            for (double a = 0.0; a <= 8.0; a += 0.125) {
                const double q = specfun::marcum_q(m, a, b);
                CHECK(q >= prev - 1e-14);
                prev = q;
            }
        }
    }
}

TEST_CASE("marcum q plus complement is one") {
    for (int m : {1, 2, 5}) {
        for (double a : {0.0, 0.7, 2.0, 15.0}) {
            for (double b : {0.2, 1.1, 4.0, 14.0}) {
                const double s =
                    specfun::marcum_q(m, a, b) + specfun::marcum_q_complement(m, a, b);
                CHECK(s == Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("marcum rejects bad input") {
    CHECK_THROWS_AS(specfun::marcum_q(0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::marcum_q(1, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::marcum_q(1, 1.0, std::nan("")), std::domain_error);
    specfun::Config tiny;
    tiny.max_terms = 3;
    CHECK_THROWS_AS(specfun::marcum_q(1, 12.0, 11.0, tiny), NumericalError);
}

TEST_CASE("bessel i0/i1 series oracle and golden values") {
    CHECK(specfun::bessel_i0(0.0) == 1.0);
    const double ref1 = static_cast<double>(testutil::bessel_i0_series(1.0L));
    CHECK(specfun::bessel_i0(1.0) == Approx(ref1).epsilon(1e-14));
    for (const auto& row : testutil::load_csv(testutil::data_path("bessel_golden.csv"))) {
        const std::string& kind = row.cells[0];
        const double x = row.num(1), want = row.num(2);
        INFO(kind, "(", x, ")");
        if (kind == "i0" && x <= 700.0)
            CHECK(specfun::bessel_i0(x) == Approx(want).epsilon(1e-12));
        if (kind == "i1" && x <= 700.0)
            CHECK(specfun::bessel_i1(x) == Approx(want).epsilon(1e-12));
        if (kind == "i0s") CHECK(specfun::bessel_i0_scaled(x) == Approx(want).epsilon(1e-12));
        if (kind == "i1s") CHECK(specfun::bessel_i1_scaled(x) == Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("bessel i0 large-argument behavior") {
    // leading asymptotic term e^x / sqrt(2 pi x) is within 1% at x = 50
    const double x = 50.0;
    const double lead = std::exp(x) / std::sqrt(2.0 * 3.14159265358979323846 * x);
    CHECK(specfun::bessel_i0(x) == Approx(lead).epsilon(0.01));
    CHECK_THROWS_AS(specfun::bessel_i0(800.0), NumericalError);
    CHECK(specfun::bessel_i0_scaled(800.0) > 0.0); // scaled variant stays finite
    CHECK(specfun::bessel_i0_scaled(5000.0) > 0.0);
    CHECK(specfun::bessel_i0(3.0) >= 1.0);
}

TEST_CASE("phi trivial anchors") {
    CHECK(specfun::phi(3.0, 0.0) == 0.0); // zero-radius aperture
    for (double rho : {0.3, 0.5, 1.0, 2.0}) {
        const double x = 2.0 * rho * rho;
        const double want = 1.0 - std::exp(-x) - x * std::exp(-x);
        CHECK(specfun::phi(0.0, rho) == Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("phi golden values from independent 2-D quadrature") {
    for (const auto& row : testutil::load_csv(testutil::data_path("phi_golden.csv"))) {
        const double a = row.num(0), b = row.num(1), want = row.num(2);
        INFO("phi(", a, ",", b, ")");
        CHECK(specfun::phi(a, b) == Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("phi stays in [0,1] and finite for extreme layouts") {
    // G up to 100 at small rho, and far offsets at large rho
    for (int g = 1; g <= 100; g += 9) {
        const double rho = 0.01;
        const double v = specfun::phi(2.0 * g * rho, rho);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        CHECK(std::isfinite(v));
    }
    const double far = specfun::phi(40.0, 2.0); // huge exponent scale
    CHECK(far >= 0.0);
    CHECK(far <= 1e-100);
}

TEST_CASE("marcum recurrence ties Q2 to Q1 through I1") {
    for (double a : {0.3, 1.0, 2.5, 4.0}) {
        for (double b : {0.2, 1.3, 3.1}) {
            const double lhs = specfun::marcum_q(2, a, b) - specfun::marcum_q(1, a, b);
            const double d = a - b;
            const double rhs =
                (b / a) * std::exp(-0.5 * d * d) * specfun::bessel_i1_scaled(a * b);
            CHECK(lhs == Approx(rhs).epsilon(1e-11));
        }
    }
}

TEST_CASE("regularized gamma pair") {
    CHECK(specfun::gamma_q(1, 0.0) == 1.0);
    CHECK(specfun::gamma_p(1, 2.0) == Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
    CHECK(specfun::gamma_p(2, 0.5) ==
          Approx(1.0 - std::exp(-0.5) * 1.5).epsilon(1e-13));
    // small-x lower gamma keeps relative accuracy (x^2/2 leading order)
    const double x = 2e-4;
    CHECK(specfun::gamma_p(2, x) ==
          Approx(x * x / 2.0 - x * x * x / 3.0 + x * x * x * x / 8.0).epsilon(1e-12));
}
