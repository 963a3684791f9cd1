#include "swimgait/quadrature.hpp"

#include "swimgait/shape_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace swimgait {

namespace {

// Panel agreement below this relative level is indistinguishable from roundoff.
constexpr double kRoundoff = 1e-14;

GaussLegendreRule build_rule()
{
    constexpr int n = GaussLegendreRule::kPoints;
    GaussLegendreRule rule{};
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const double dx = legendre_p(n, x) / legendre_dp(n, x);
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double dp = legendre_dp(n, x);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

double panel(const std::function<double(double)>& f, double a, double b)
{
    const auto& rule = gauss_legendre_rule();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < GaussLegendreRule::kPoints; ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole, double tol, int depth)
{
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid);
    const double right = panel(f, mid, b);
    const double refined = left + right;
    if (!std::isfinite(refined))
        throw QuadratureError("non-finite integrand");
    if (std::abs(refined - whole) <= std::max(tol, kRoundoff * std::abs(refined)))
        return refined;
    if (depth <= 0)
        throw QuadratureError("adaptive quadrature did not reach tolerance");
    return adapt(f, a, mid, left, 0.5 * tol, depth - 1) + adapt(f, mid, b, right, 0.5 * tol, depth - 1);
}

double panel_2d(const std::function<double(double, double)>& f, double a1, double b1, double a2, double b2)
{
    const auto& rule = gauss_legendre_rule();
    const double m1 = 0.5 * (a1 + b1), h1 = 0.5 * (b1 - a1);
    const double m2 = 0.5 * (a2 + b2), h2 = 0.5 * (b2 - a2);
    double sum = 0.0;
    for (int i = 0; i < GaussLegendreRule::kPoints; ++i) {
        double inner = 0.0;
        for (int j = 0; j < GaussLegendreRule::kPoints; ++j)
            inner += rule.weights[j] * f(m1 + h1 * rule.nodes[i], m2 + h2 * rule.nodes[j]);
        sum += rule.weights[i] * inner;
    }
    return sum * h1 * h2;
}

double adapt_2d(const std::function<double(double, double)>& f, double a1, double b1, double a2, double b2,
                double whole, double tol, int depth)
{
    const double m1 = 0.5 * (a1 + b1), m2 = 0.5 * (a2 + b2);
    const double q[4] = {panel_2d(f, a1, m1, a2, m2), panel_2d(f, m1, b1, a2, m2), panel_2d(f, a1, m1, m2, b2),
                         panel_2d(f, m1, b1, m2, b2)};
    const double refined = q[0] + q[1] + q[2] + q[3];
    if (!std::isfinite(refined))
        throw QuadratureError("non-finite integrand");
    if (std::abs(refined - whole) <= std::max(tol, kRoundoff * std::abs(refined)))
        return refined;
    if (depth <= 0)
        throw QuadratureError("adaptive 2-D quadrature did not reach tolerance");
    const double t = 0.25 * tol;
    return adapt_2d(f, a1, m1, a2, m2, q[0], t, depth - 1) + adapt_2d(f, m1, b1, a2, m2, q[1], t, depth - 1) +
           adapt_2d(f, a1, m1, m2, b2, q[2], t, depth - 1) + adapt_2d(f, m1, b1, m2, b2, q[3], t, depth - 1);
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule()
{
    static const GaussLegendreRule rule = build_rule();
    return rule;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                          int max_depth)
{
    if (a == b)
        return 0.0;
    return adapt(f, a, b, panel(f, a, b), abs_tol, max_depth);
}

double integrate_adaptive_2d(const std::function<double(double, double)>& f, double a1, double b1, double a2,
                             double b2, double abs_tol, int max_depth)
{
    if (a1 == b1 || a2 == b2)
        return 0.0;
    return adapt_2d(f, a1, b1, a2, b2, panel_2d(f, a1, b1, a2, b2), abs_tol, max_depth);
}

}  // namespace swimgait
