// Test-only reference computations. Nothing here calls into the library's
// evaluation paths it is used to check.
#ifndef SWIMGAIT_TESTS_ORACLES_HPP
#define SWIMGAIT_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// P_n(x) = 2^-n sum_k C(n,k)^2 (x-1)^(n-k) (x+1)^k.
inline double legendre_explicit(int n, double x)
{
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double c = binomial(n, k);
        sum += c * c * std::pow(x - 1.0, n - k) * std::pow(x + 1.0, k);
    }
    return sum / std::pow(2.0, n);
}

inline double central_difference(const std::function<double(double)>& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Closed-form Purcell curvature with the (cos a1 + cos a2) numerator.
inline double purcell_kappa(double a1, double a2)
{
    const double s1 = std::sin(a1), s2 = std::sin(a2);
    const double d = 2 * s1 * s1 + 2 * s2 * s2 + 5;
    return 16 * s1 * s2 * (std::cos(a1) + std::cos(a2)) / (d * d);
}

// Brute-force maximum of f over a box by a sweep at the given spacing.
inline std::pair<double, double> argmax_sweep(const std::function<double(double, double)>& f, double lo1, double hi1,
                                              double lo2, double hi2, double spacing)
{
    double best = -INFINITY, b1 = lo1, b2 = lo2;
    for (double a = lo1; a <= hi1; a += spacing)
        for (double b = lo2; b <= hi2; b += spacing) {
            const double v = f(a, b);
            if (v > best) {
                best = v;
                b1 = a;
                b2 = b;
            }
        }
    return {b1, b2};
}

// Midpoint rule on an n x n cell grid over a box, counting a cell when the
// winding number of the polygon around its midpoint is nonzero (signed).
inline double polygon_area_integral_grid(const std::function<double(double, double)>& f,
                                         const std::vector<std::pair<double, double>>& poly, double lo1,
                                         double hi1, double lo2, double hi2, int n)
{
    auto winding = [&](double px, double py) {
        int wn = 0;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto [x0, y0] = poly[i];
            const auto [x1, y1] = poly[(i + 1) % poly.size()];
            const double side = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0);
            if (y0 <= py) {
                if (y1 > py && side > 0)
                    ++wn;
            } else if (y1 <= py && side < 0) {
                --wn;
            }
        }
        return wn;
    };
    const double h1 = (hi1 - lo1) / n, h2 = (hi2 - lo2) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = lo1 + (i + 0.5) * h1, y = lo2 + (j + 0.5) * h2;
            const int w = winding(x, y);
            if (w != 0)
                sum += w * f(x, y);
        }
    return sum * h1 * h2;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20261016);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline double deg(double d) { return d * std::numbers::pi / 180.0; }

}  // namespace oracle

#endif
