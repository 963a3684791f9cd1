#include "swimgait/holonomy.hpp"

#include "swimgait/curvature.hpp"
#include "swimgait/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace swimgait {

namespace {

void require_planar(const KinematicModel& model)
{
    if (model.dimension() != 2)
        throw std::invalid_argument(model.name() + ": paths live in a 2-D base space");
}

double form_along(const KinematicModel& model, const PathPiece& piece, double u)
{
    const ShapePoint x = piece.point(u);
    return model.displacement_form(x).dot(piece.tangent(u));
}

double cross(const Point2& a, const Point2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

double path_integral(const KinematicModel& model, const BasePath& path, double abs_tol)
{
    require_planar(model);
    // Backward traversals reuse the forward sum, so reversal negates exactly.
    if (path.orientation() < 0)
        return -path_integral(model, path.reversed(), abs_tol);
    const auto pieces = path.pieces();
    if (pieces.empty())
        return 0.0;
    const double tol = abs_tol / pieces.size();
    double xi = 0.0;
    for (const auto& piece : pieces) {
        if (piece.length() == 0.0)
            continue;
        xi += integrate_adaptive([&](double u) { return form_along(model, piece, u); }, 0.0, 1.0, tol);
    }
    return xi;
}

double line_holonomy(const KinematicModel& model, const BaseLoop& loop, double abs_tol)
{
    return translation_group::exp(path_integral(model, loop.path(), abs_tol));
}

double area_holonomy(const KinematicModel& model, const BaseLoop& loop, double abs_tol)
{
    require_planar(model);
    const auto pieces = loop.path().pieces();
    double total_length = 0.0;
    for (const auto& p : pieces)
        total_length += p.length();
    if (total_length == 0.0)
        return 0.0;
    if (!is_simple(loop))
        throw std::invalid_argument("area holonomy needs a simple (non-self-intersecting) loop");

    // Cone decomposition: the region is swept by segments from an apex to
    // the boundary, so the signed integral is a sum over boundary pieces of
    // int int kappa(apex + t (c(u) - apex)) t cross(c(u) - apex, c'(u)) dt du.
    // A lone full circle uses its center, which makes this polar quadrature.
    Point2 apex = Point2::Zero();
    if (pieces.size() == 1 && pieces.front().kind == PathPiece::Kind::Arc) {
        apex = pieces.front().center;
    } else {
        for (const auto& p : pieces)
            apex += p.point(0.0);
        apex /= static_cast<double>(pieces.size());
    }

    const double tol = abs_tol / pieces.size();
    double sum = 0.0;
    for (const auto& piece : pieces) {
        if (piece.length() == 0.0)
            continue;
        auto integrand = [&](double u, double t) {
            const Point2 rel = piece.point(u) - apex;
            const double jac = t * cross(rel, piece.tangent(u));
            if (jac == 0.0)
                return 0.0;
            const ShapePoint x = apex + t * rel;
            return curvature(model, x) * jac;
        };
        sum += integrate_adaptive_2d(integrand, 0.0, 1.0, 0.0, 1.0, tol);
    }
    return translation_group::exp(sum);
}

double stokes_check(const KinematicModel& model, const BaseLoop& loop)
{
    return std::abs(line_holonomy(model, loop, 1e-12) - area_holonomy(model, loop, 1e-11));
}

Trajectory reconstruct_trajectory(const KinematicModel& model, const BasePath& path, double dt, double h0)
{
    require_planar(model);
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("trajectory step must be positive");

    Trajectory traj;
    const auto pieces = path.pieces();
    if (pieces.empty())
        return traj;

    double t = 0.0;
    double h = h0;
    traj.samples.push_back({t, pieces.front().point(0.0), h});

    for (const auto& piece : pieces) {
        const int steps = std::max(1, static_cast<int>(std::ceil(piece.duration / dt - 1e-9)));
        const double du = 1.0 / steps;
        const double step = piece.duration / steps;
        const bool moving = piece.length() > 0.0;
        // hdot as a function of the piece parameter; xdot = c'(u) / duration.
        auto hdot = [&](double u) { return moving ? form_along(model, piece, u) / piece.duration : 0.0; };

        const double t0 = t;
        for (int k = 0; k < steps; ++k) {
            const double u = k * du;
            const double k1 = hdot(u);
            const double k2 = hdot(u + 0.5 * du);
            // hdot does not depend on h, so the two midpoint stages coincide.
            const double k3 = k2;
            const double k4 = hdot(u + du);
            h = translation_group::compose(h, translation_group::exp(step / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)));
            const double u_next = (k + 1 == steps) ? 1.0 : (k + 1) * du;
            t = (k + 1 == steps) ? t0 + piece.duration : t0 + (k + 1) * step;
            traj.samples.push_back({t, piece.point(u_next), h});
        }
    }
    return traj;
}

Trajectory reconstruct_trajectory(const KinematicModel& model, const BasePath& path)
{
    const double total = path.duration();
    return reconstruct_trajectory(model, path, total > 0.0 ? 1e-3 * total : 1.0);
}

}  // namespace swimgait
