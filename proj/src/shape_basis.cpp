#include "swimgait/shape_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swimgait {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_degree(int n)
{
    if (n < 0)
        throw std::invalid_argument("Legendre degree must be non-negative, got " + std::to_string(n));
}

void check_argument(double x)
{
    if (!std::isfinite(x) || std::abs(x) > 1.0 + kDomainSlack)
        throw std::domain_error("Legendre argument outside [-1, 1]: " + std::to_string(x));
}

void check_angle(double theta)
{
    if (!std::isfinite(theta) || theta < -kDomainSlack || theta > std::numbers::pi + kDomainSlack)
        throw std::domain_error("polar angle outside [0, pi]: " + std::to_string(theta));
}

}  // namespace

double legendre_p(int n, double x)
{
    check_degree(n);
    check_argument(x);
    if (n == 0)
        return 1.0;
    if (n == 1)
        return x;

    double p_prev = 1.0;
    double p = x;
    for (int k = 1; k < n; ++k) {
        const double p_next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
        p_prev = p;
        p = p_next;
    }
    return p;
}

double legendre_dp(int n, double x)
{
    check_degree(n);
    check_argument(x);
    if (n == 0)
        return 0.0;

    // Walk P_k and P'_k together.
    double p_prev = 1.0, p = x;
    double dp_prev = 0.0, dp = 1.0;
    for (int k = 1; k < n; ++k) {
        const double p_next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
        const double dp_next = (2 * k + 1) * p + dp_prev;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
    }
    return dp;
}

double basis_v(int n, double theta)
{
    if (n < 1)
        throw std::invalid_argument("V_n is defined for n >= 1, got " + std::to_string(n));
    check_angle(theta);
    const double x = std::clamp(std::cos(theta), -1.0, 1.0);
    return -std::sin(theta) * legendre_dp(n, x) / (n + 1);
}

DeformationCoefficients DeformationCoefficients::zeros(int order, double epsilon)
{
    DeformationCoefficients c;
    c.epsilon = epsilon;
    c.alpha.assign(order + 1, 0.0);
    c.beta.assign(order + 1, 0.0);
    return c;
}

void DeformationCoefficients::validate() const
{
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::invalid_argument("epsilon must be positive and finite");
    if (alpha.size() != beta.size())
        throw std::invalid_argument("alpha and beta must have the same length");
    if (order() < 2)
        throw std::invalid_argument("truncation order must be at least 2");
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (!std::isfinite(alpha[i]) || !std::isfinite(beta[i]))
            throw std::invalid_argument("deformation coefficients must be finite");
}

CoefficientRates CoefficientRates::zeros(int order)
{
    CoefficientRates r;
    r.alpha_dot.assign(order + 1, 0.0);
    r.beta_dot.assign(order + 1, 0.0);
    return r;
}

SurfacePoint deformed_surface(const DeformationCoefficients& c, double theta)
{
    c.validate();
    check_angle(theta);
    const double x = std::clamp(std::cos(theta), -1.0, 1.0);

    double radial = 0.0;
    double tangential = 0.0;
    for (int n = 0; n <= c.order(); ++n) {
        if (c.alpha[n] != 0.0)
            radial += c.alpha[n] * legendre_p(n, x);
        // V_0 vanishes identically.
        if (n >= 1 && c.beta[n] != 0.0)
            tangential += c.beta[n] * basis_v(n, theta);
    }
    return {1.0 + c.epsilon * radial, theta + c.epsilon * tangential};
}

SurfaceVelocity surface_velocity(const CoefficientRates& rates, double epsilon, double theta)
{
    check_angle(theta);
    if (rates.alpha_dot.size() != rates.beta_dot.size())
        throw std::invalid_argument("rate sequences must have the same length");
    const double x = std::clamp(std::cos(theta), -1.0, 1.0);

    double v_r = 0.0;
    double v_theta = 0.0;
    for (std::size_t i = 0; i < rates.alpha_dot.size(); ++i) {
        const int n = static_cast<int>(i);
        v_r += rates.alpha_dot[i] * legendre_p(n, x);
        if (n >= 1)
            v_theta += rates.beta_dot[i] * basis_v(n, theta);
    }
    return {epsilon * v_r, epsilon * v_theta};
}

SurfaceProfile sample_surface(const DeformationCoefficients& c, int points)
{
    if (points < 2)
        throw std::invalid_argument("surface sampling needs at least 2 points");
    SurfaceProfile profile;
    profile.samples.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double theta = (i == points - 1) ? std::numbers::pi : std::numbers::pi * i / (points - 1);
        const auto s = deformed_surface(c, theta);
        profile.samples.push_back({theta, s.r_star, s.theta_star});
        if (s.r_star <= 0.0)
            profile.degenerate = true;
    }
    return profile;
}

}  // namespace swimgait
