#include "swimgait/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swimgait {

namespace {

void require_planar(const KinematicModel& model)
{
    if (model.dimension() != 2)
        throw std::invalid_argument(model.name() + ": curvature is only defined here for 2-D base spaces");
}

// Maximizes sign * kappa from start by compass search inside the box.
ShapePoint refine(const KinematicModel& model, const CurvatureGrid& grid, ShapePoint x, double sign)
{
    const double h1 = grid.resolution1 > 1 ? grid.axis1.width() / (grid.resolution1 - 1) : 0.0;
    const double h2 = grid.resolution2 > 1 ? grid.axis2.width() / (grid.resolution2 - 1) : 0.0;
    double step = std::max(h1, h2);
    if (step == 0.0)
        return x;

    auto clamp_to_grid = [&](ShapePoint p) {
        p[0] = std::clamp(p[0], grid.axis1.lo, grid.axis1.hi);
        p[1] = std::clamp(p[1], grid.axis2.lo, grid.axis2.hi);
        return p;
    };
    auto objective = [&](const ShapePoint& p) { return sign * curvature_numeric(model, p); };

    double best = objective(x);
    const double dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    for (int iter = 0; iter < 10000 && step > 1e-11; ++iter) {
        bool moved = false;
        for (const auto& d : dirs) {
            ShapePoint trial = x;
            trial[0] += step * d[0];
            trial[1] += step * d[1];
            trial = clamp_to_grid(trial);
            const double value = objective(trial);
            if (value > best) {
                best = value;
                x = trial;
                moved = true;
                break;
            }
        }
        if (!moved)
            step *= 0.5;
    }
    return x;
}

}  // namespace

double curvature_numeric(const KinematicModel& model, const ShapePoint& x, double step)
{
    require_planar(model);
    if (!(step > 0.0))
        throw std::invalid_argument("finite-difference step must be positive");

    ShapePoint p = x;
    p[0] = x[0] + step;
    const auto w_plus1 = model.displacement_form(p);
    p[0] = x[0] - step;
    const auto w_minus1 = model.displacement_form(p);
    p = x;
    p[1] = x[1] + step;
    const auto w_plus2 = model.displacement_form(p);
    p[1] = x[1] - step;
    const auto w_minus2 = model.displacement_form(p);

    const double dw2_dx1 = (w_plus1[1] - w_minus1[1]) / (2 * step);
    const double dw1_dx2 = (w_plus2[0] - w_minus2[0]) / (2 * step);
    return dw2_dx1 - dw1_dx2;
}

bool has_analytic_curvature(const KinematicModel& model)
{
    return model.kind() != ModelKind::SphericalSeries;
}

double curvature_analytic(const KinematicModel& model, const ShapePoint& x)
{
    require_planar(model);
    if (x.size() != 2)
        throw std::invalid_argument("shape point must be 2-D");
    const double eps2 = model.epsilon() * model.epsilon();
    const double n = model.mode_index();
    const double d = (2 * n + 1) * (2 * n + 3);

    switch (model.kind()) {
    case ModelKind::SphericalRadial:
        return eps2 * (2 * n * n - 2 * n - 1) / d;
    case ModelKind::SphericalAzimuthal:
        return -2 * n * eps2 / d;
    case ModelKind::Purcell: {
        const double s1 = std::sin(x[0]), s2 = std::sin(x[1]);
        const double denom = 2 * s1 * s1 + 2 * s2 * s2 + 5;
        return model.limb_length() * 16 * s1 * s2 * (std::cos(x[0]) + std::cos(x[1])) / (denom * denom);
    }
    case ModelKind::SphericalSeries:
        break;
    }
    throw std::invalid_argument(model.name() + ": no closed-form curvature; use curvature_numeric");
}

double curvature(const KinematicModel& model, const ShapePoint& x)
{
    return has_analytic_curvature(model) ? curvature_analytic(model, x) : curvature_numeric(model, x);
}

double CurvatureGrid::coordinate1(int i) const
{
    if (resolution1 <= 1)
        return axis1.lo;
    return i == resolution1 - 1 ? axis1.hi : axis1.lo + axis1.width() * i / (resolution1 - 1);
}

double CurvatureGrid::coordinate2(int j) const
{
    if (resolution2 <= 1)
        return axis2.lo;
    return j == resolution2 - 1 ? axis2.hi : axis2.lo + axis2.width() * j / (resolution2 - 1);
}

ShapePoint CurvatureGrid::point(int i, int j) const
{
    ShapePoint p(2);
    p << coordinate1(i), coordinate2(j);
    return p;
}

CurvatureGrid curvature_grid(const KinematicModel& model, const Interval& axis1, const Interval& axis2,
                             int resolution1, int resolution2)
{
    require_planar(model);
    if (resolution1 < 2 || resolution2 < 2)
        throw std::invalid_argument("curvature grid needs at least 2 samples per axis");
    if (!(axis1.lo <= axis1.hi) || !(axis2.lo <= axis2.hi))
        throw std::invalid_argument("curvature grid axes must be nonempty intervals");

    CurvatureGrid grid{axis1, axis2, resolution1, resolution2, {}};
    grid.values.resize(static_cast<std::size_t>(resolution1) * resolution2);
    for (int i = 0; i < resolution1; ++i)
        for (int j = 0; j < resolution2; ++j) {
            const double k = curvature(model, grid.point(i, j));
            if (!std::isfinite(k))
                throw std::domain_error("non-finite curvature sample");
            grid.values[static_cast<std::size_t>(i) * resolution2 + j] = k;
        }
    return grid;
}

CurvatureGrid curvature_grid(const KinematicModel& model)
{
    require_planar(model);
    const int res = model.kind() == ModelKind::Purcell ? 181 : 41;
    return curvature_grid(model, model.bounds()[0], model.bounds()[1], res, res);
}

CurvatureExtrema find_extrema(const KinematicModel& model, const CurvatureGrid& grid)
{
    if (grid.values.empty())
        throw std::invalid_argument("empty curvature grid");

    const auto [lo, hi] = std::minmax_element(grid.values.begin(), grid.values.end());
    auto index_point = [&](auto it) {
        const auto k = static_cast<int>(it - grid.values.begin());
        return grid.point(k / grid.resolution2, k % grid.resolution2);
    };

    CurvatureExtrema out;
    out.argmax = refine(model, grid, index_point(hi), +1.0);
    out.argmin = refine(model, grid, index_point(lo), -1.0);
    out.max = curvature(model, out.argmax);
    out.min = curvature(model, out.argmin);
    return out;
}

}  // namespace swimgait
