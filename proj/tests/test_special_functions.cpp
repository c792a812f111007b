#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "support/oracles.hpp"
#include "wpn/special_functions.hpp"

using wpn::erfcx;
using wpn::log_bessel_i0;
using wpn::log_erfc;
using wpn::log_sum_exp;

TEST_CASE("log_bessel_i0 basic values")
{
    CHECK(log_bessel_i0(0.0) == 0.0);
    // references computed with a 30-digit bessel evaluation
    CHECK(log_bessel_i0(1.0) == doctest::Approx(0.23591435850717865).epsilon(1e-13));
    CHECK(log_bessel_i0(0.1) == doctest::Approx(0.0024984392338762434).epsilon(1e-12));
    CHECK(log_bessel_i0(500.0) == doctest::Approx(495.9740076681067).epsilon(1e-13));
    // leading asymptotic behaviour at large argument
    CHECK(log_bessel_i0(500.0) ==
          doctest::Approx(500.0 - 0.5 * std::log(1000.0 * std::numbers::pi))
              .epsilon(1e-4));
}

TEST_CASE("log_bessel_i0 matches the extended-precision series oracle")
{
    for (double a : {0.1, 1.0, 10.0, 100.0, 500.0, 5000.0}) {
        const double ref = static_cast<double>(oracles::reference_log_i0(a));
        CHECK(std::abs(log_bessel_i0(a) - ref) / std::abs(ref) <= 1e-10);
    }
}

TEST_CASE("log_bessel_i0 is smooth across the series seam")
{
    // no jump where the power series hands over to the asymptotic series
    double prev = log_bessel_i0(14.90);
    for (double a = 14.905; a <= 15.1; a += 0.005) {
        const double cur = log_bessel_i0(a);
        CHECK(cur > prev);
        CHECK(cur - prev < 0.006);  // local slope is I1/I0 < 1
        prev = cur;
    }
}

TEST_CASE("log_bessel_i0 upper bound z - (1/2) ln z")
{
    for (int i = 0; i <= 200; ++i) {
        const double z = 0.1 * std::pow(1e5, i / 200.0);
        CHECK(log_bessel_i0(z) <= z - 0.5 * std::log(z));
    }
}

TEST_CASE("log_bessel_i0 rejects negative arguments")
{
    CHECK_THROWS_AS(log_bessel_i0(-1e-9), std::domain_error);
    CHECK_THROWS_AS(log_bessel_i0(-5.0), std::domain_error);
}

TEST_CASE("erfcx spot values and branch consistency")
{
    CHECK(erfcx(1.0) == doctest::Approx(0.427583576155807).epsilon(1e-13));
    CHECK(erfcx(6.0) == doctest::Approx(0.092776567800538354).epsilon(1e-13));
    CHECK(erfcx(10.0) == doctest::Approx(0.056140992743822586).epsilon(1e-13));

    // direct product and continued fraction agree where both are usable
    for (double x = 4.0; x <= 12.0; x += 0.25) {
        const double direct = std::exp(x * x) * std::erfc(x);
        CHECK(erfcx(x) == doctest::Approx(direct).epsilon(5e-13));
    }
    // 1/(x sqrt(pi)) asymptote
    CHECK(erfcx(1e6) * 1e6 * std::sqrt(std::numbers::pi) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("log_erfc spans both tails")
{
    CHECK(log_erfc(0.0) == doctest::Approx(0.0));
    CHECK(log_erfc(-3.0) == doctest::Approx(std::log(std::erfc(-3.0))).epsilon(1e-14));
    CHECK(log_erfc(30.0) == doctest::Approx(-903.97411711064388).epsilon(1e-13));
    CHECK(std::isfinite(log_erfc(1000.0)));
}

TEST_CASE("log_sum_exp")
{
    CHECK(log_sum_exp(0.0, 0.0) == doctest::Approx(std::log(2.0)));
    CHECK(log_sum_exp(-1000.0, 0.0) == doctest::Approx(0.0));
    CHECK(log_sum_exp(1000.0, 1000.0) == doctest::Approx(1000.0 + std::log(2.0)));
    const double ninf = -std::numeric_limits<double>::infinity();
    CHECK(log_sum_exp(ninf, 1.5) == 1.5);
    CHECK(log_sum_exp(1.5, ninf) == 1.5);
}

TEST_CASE("gamma_q oracle matches frozen references")
{
    // frozen from an independent scientific library
    CHECK(oracles::gamma_q(9.5, 21.91) == doctest::Approx(0.00100006231456012).epsilon(1e-10));
    CHECK(oracles::gamma_q(0.5, 1.0) == doctest::Approx(0.157299207050281).epsilon(1e-12));
    CHECK(oracles::gamma_q(5.0, 2.0) == doctest::Approx(0.947346982656289).epsilon(1e-12));
    CHECK(oracles::gamma_q(9.5, 10.0) == doctest::Approx(0.394578182086001).epsilon(1e-12));
}
