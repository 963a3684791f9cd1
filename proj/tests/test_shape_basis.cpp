#include "oracles.hpp"

#include "swimgait/shape_basis.hpp"

#include <doctest.h>

#include <numbers>
#include <stdexcept>

using namespace swimgait;
using doctest::Approx;

TEST_CASE("legendre_p matches known values")
{
    CHECK(legendre_p(2, 1.0) == 1.0);
    CHECK(legendre_p(2, 0.5) == Approx(-0.125).epsilon(1e-15));
    CHECK(legendre_p(3, 0.0) == 0.0);
    CHECK(legendre_p(0, 0.3) == 1.0);
    CHECK(legendre_p(1, -0.7) == -0.7);
}

TEST_CASE("legendre_p agrees with the explicit binomial sum")
{
    for (int n = 0; n <= 12; ++n)
        for (double x = -1.0; x <= 1.0; x += 0.0625)
            CHECK(std::abs(legendre_p(n, x) - oracle::legendre_explicit(n, x)) < 1e-12);
}

TEST_CASE("three-term recurrence, bound and endpoints hold up to n = 30")
{
    for (int n = 1; n < 30; ++n)
        for (int k = 0; k <= 200; ++k) {
            const double x = -1.0 + 2.0 * k / 200;
            const double lhs = (n + 1) * legendre_p(n + 1, x);
            const double rhs = (2 * n + 1) * x * legendre_p(n, x) - n * legendre_p(n - 1, x);
            CHECK(std::abs(lhs - rhs) <= 1e-12);
            CHECK(std::abs(legendre_p(n, x)) <= 1.0 + 1e-14);
        }
    for (int n = 0; n <= 30; ++n) {
        CHECK(legendre_p(n, 1.0) == Approx(1.0).epsilon(1e-14));
        CHECK(legendre_p(n, -1.0) == Approx(n % 2 ? -1.0 : 1.0).epsilon(1e-14));
    }
}

TEST_CASE("legendre_dp satisfies (1 - x^2) P' = n (P_{n-1} - x P_n)")
{
    for (int n = 1; n <= 20; ++n)
        for (double x = -0.95; x <= 0.95; x += 0.05) {
            const double lhs = (1 - x * x) * legendre_dp(n, x);
            const double rhs = n * (legendre_p(n - 1, x) - x * legendre_p(n, x));
            CHECK(std::abs(lhs - rhs) < 1e-11);
        }
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(legendre_p(2, 1.5), std::domain_error);
    CHECK_THROWS_AS(legendre_p(-1, 0.0), std::invalid_argument);
    CHECK_NOTHROW(legendre_p(3, 1.0 + 1e-13));
    CHECK_THROWS_AS(basis_v(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(basis_v(2, 4.0), std::domain_error);
}

TEST_CASE("basis_v values and finite-difference agreement")
{
    CHECK(basis_v(1, std::numbers::pi / 2) == Approx(-0.5).epsilon(1e-15));
    CHECK(basis_v(2, 0.0) == 0.0);
    CHECK(std::abs(basis_v(2, std::numbers::pi)) < 1e-15);

    auto p2_over_3 = [](double th) { return oracle::legendre_explicit(2, std::cos(th)) / 3.0; };
    const double fd = oracle::central_difference(p2_over_3, std::numbers::pi / 4, 1e-6);
    CHECK(std::abs(basis_v(2, std::numbers::pi / 4) - fd) <= 1e-8);

    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k < 25; ++k) {
            const double th = oracle::uniform(0.01, std::numbers::pi - 0.01);
            auto pn = [n](double t) { return oracle::legendre_explicit(n, std::cos(t)) / (n + 1); };
            CHECK(std::abs(basis_v(n, th) - oracle::central_difference(pn, th, 1e-6)) <= 1e-8);
        }
}

TEST_CASE("deformed_surface")
{
    auto c = DeformationCoefficients::zeros(10, 0.1);
    for (double th = 0.0; th <= std::numbers::pi; th += 0.1) {
        const auto s = deformed_surface(c, th);
        CHECK(s.r_star == 1.0);
        CHECK(s.theta_star == th);
    }

    c.alpha[2] = 1.0;
    CHECK(deformed_surface(c, 0.0).r_star == Approx(1.1).epsilon(1e-15));

    auto b = DeformationCoefficients::zeros(10, 0.1);
    b.beta[2] = 1.0;
    CHECK(deformed_surface(b, 0.0).theta_star == 0.0);
}

TEST_CASE("surface_velocity")
{
    auto rates = CoefficientRates::zeros(10);
    const auto zero = surface_velocity(rates, 1.0, 1.0);
    CHECK(zero.v_r == 0.0);
    CHECK(zero.v_theta == 0.0);

    rates.alpha_dot[2] = 1.0;
    CHECK(surface_velocity(rates, 1.0, std::numbers::pi / 2).v_r == Approx(-0.5).epsilon(1e-14));

    auto tang = CoefficientRates::zeros(10);
    tang.beta_dot[2] = 1.0;
    auto p2_over_3 = [](double th) { return oracle::legendre_explicit(2, std::cos(th)) / 3.0; };
    const double v2_at_zero = oracle::central_difference(p2_over_3, std::numbers::pi / 2, 1e-6);
    CHECK(std::abs(surface_velocity(tang, 1.0, std::numbers::pi / 2).v_theta - v2_at_zero) < 1e-8);
}

TEST_CASE("coefficient validation and degeneracy")
{
    auto c = DeformationCoefficients::zeros(10, 1.0);
    CHECK(sample_surface(c).samples.size() == 181);
    CHECK_FALSE(sample_surface(c).degenerate);

    c.alpha[0] = -2.0;
    CHECK(sample_surface(c).degenerate);

    auto bad = DeformationCoefficients::zeros(4, 0.0);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    auto mismatched = DeformationCoefficients::zeros(4, 1.0);
    mismatched.beta.pop_back();
    CHECK_THROWS_AS(mismatched.validate(), std::invalid_argument);
    auto nan = DeformationCoefficients::zeros(4, 1.0);
    nan.alpha[3] = NAN;
    CHECK_THROWS_AS(deformed_surface(nan, 0.2), std::invalid_argument);
}
