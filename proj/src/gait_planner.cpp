#include "swimgait/gait_planner.hpp"

#include "swimgait/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace swimgait {

namespace {

constexpr double kBoundsSlack = 1e-12;
constexpr double kRemainderTolerance = 1e-6;

void require_planar_bounds(const KinematicModel& model, const Bounds& bounds)
{
    if (model.dimension() != 2)
        throw std::invalid_argument(model.name() + ": gait planning needs a 2-D base space");
    if (bounds.size() != 2)
        throw std::invalid_argument("planning bounds must have two intervals");
    for (int i = 0; i < 2; ++i) {
        const auto& b = bounds[i];
        if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || !(b.lo <= b.hi))
            throw std::invalid_argument("planning bounds must be nonempty intervals");
        const auto& mb = model.bounds()[i];
        if (b.lo < mb.lo - kBoundsSlack || b.hi > mb.hi + kBoundsSlack)
            throw std::invalid_argument("planning bounds exceed the model bounds");
    }
}

bool inside(const Point2& p, const Bounds& bounds)
{
    const double slack = kBoundsSlack * std::max(1.0, p.cwiseAbs().maxCoeff());
    return bounds[0].contains(p.x(), slack) && bounds[1].contains(p.y(), slack);
}

void require_inside(const Point2& p, const Bounds& bounds, const char* what)
{
    if (!inside(p, bounds))
        throw std::invalid_argument(std::string(what) + " lies outside the planning bounds");
}

bool constant_curvature(const KinematicModel& model)
{
    return model.kind() == ModelKind::SphericalRadial || model.kind() == ModelKind::SphericalAzimuthal;
}

double sign_of(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// Sutherland-Hodgman clip of a convex polygon against a <= n . p half-plane.
std::vector<Point2> clip(const std::vector<Point2>& poly, const Point2& normal, double offset)
{
    std::vector<Point2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % n];
        const double da = normal.dot(a) - offset;
        const double db = normal.dot(b) - offset;
        if (da <= 0)
            out.push_back(a);
        if ((da < 0 && db > 0) || (da > 0 && db < 0))
            out.push_back(a + (b - a) * (da / (da - db)));
    }
    return out;
}

std::vector<Point2> dedupe(std::vector<Point2> poly)
{
    std::vector<Point2> out;
    for (const auto& p : poly)
        if (out.empty() || (p - out.back()).norm() > 1e-14)
            out.push_back(p);
    while (out.size() > 1 && (out.front() - out.back()).norm() <= 1e-14)
        out.pop_back();
    return out;
}

// Closed polygon through the vertices, started at the vertex nearest to
// `near` and traversed in list order (or backwards when `reverse`).
BaseLoop polygon_loop(std::vector<Point2> vertices, const Point2& near, bool reverse)
{
    const auto nearest = std::min_element(vertices.begin(), vertices.end(), [&](const Point2& a, const Point2& b) {
        return (a - near).squaredNorm() < (b - near).squaredNorm();
    });
    std::rotate(vertices.begin(), nearest, vertices.end());
    auto loop = BaseLoop::polygon(std::move(vertices));
    return reverse ? loop.reversed() : loop;
}

BaseLoop oriented_polygon(std::vector<Point2> vertices, const Point2& near, bool counter_clockwise)
{
    const bool is_ccw = polygon_signed_area(vertices) > 0;
    return polygon_loop(std::move(vertices), near, is_ccw != counter_clockwise);
}

// Axis-aligned rectangle of the given area cornered at `corner`, growing
// toward the side with more room along each axis; square when it fits.
std::optional<std::vector<Point2>> cornered_rectangle(double area, const Point2& corner, const Bounds& bounds)
{
    double room[2], dir[2];
    for (int i = 0; i < 2; ++i) {
        const double up = bounds[i].hi - corner[i];
        const double down = corner[i] - bounds[i].lo;
        dir[i] = up >= down ? 1.0 : -1.0;
        room[i] = std::max(up, down);
    }

    double w = std::sqrt(area), h = w;
    if (w > room[0] || h > room[1]) {
        if (room[0] <= room[1]) {
            w = room[0];
            h = w > 0 ? area / w : INFINITY;
        } else {
            h = room[1];
            w = h > 0 ? area / h : INFINITY;
        }
    }
    if (w > room[0] * (1 + 1e-12) || h > room[1] * (1 + 1e-12))
        return std::nullopt;
    return std::vector<Point2>{corner, corner + Point2(dir[0] * w, 0.0), corner + Point2(dir[0] * w, dir[1] * h),
                               corner + Point2(0.0, dir[1] * h)};
}

BaseLoop with_connector(const Point2& anchor, const BaseLoop& loop);

BaseLoop spherical_remainder(const KinematicModel& model, double target, const Point2& anchor, const Bounds& bounds)
{
    const double kappa = curvature_analytic(model, anchor);
    if (kappa == 0.0)
        throw InfeasiblePlan("zero curvature: no loop produces displacement");
    const double area = std::abs(target / kappa);
    const bool want_ccw = target * kappa > 0;

    if (auto verts = cornered_rectangle(area, anchor, bounds))
        return oriented_polygon(std::move(*verts), anchor, want_ccw);

    // Too little room around the anchor: use the nearest bounds corner and
    // connect to it.
    const Point2 corner(anchor.x() - bounds[0].lo <= bounds[0].hi - anchor.x() ? bounds[0].lo : bounds[0].hi,
                        anchor.y() - bounds[1].lo <= bounds[1].hi - anchor.y() ? bounds[1].lo : bounds[1].hi);
    auto verts = cornered_rectangle(area, corner, bounds);
    if (!verts)
        throw InfeasiblePlan("remainder rectangle of area " + std::to_string(area) + " does not fit inside bounds");
    return with_connector(anchor, oriented_polygon(std::move(*verts), corner, want_ccw));
}

BaseLoop with_connector(const Point2& anchor, const BaseLoop& loop)
{
    if ((loop.start() - anchor).norm() == 0.0)
        return loop;
    const auto connector = BasePath::line(anchor, loop.start());
    return BaseLoop(connector.then(loop.path()).then(connector.reversed()));
}

// Remainders beyond the largest admissible circle: the maximal loop scaled
// about the curvature peak, with the scale found by bisection. Scaled copies
// are nested, so the holonomy grows monotonically with the scale.
BaseLoop shrunk_max_loop(const KinematicModel& model, double target, const Point2& anchor, const Bounds& bounds,
                         const CurvatureExtrema& ext)
{
    const auto best = max_holonomy_loop(model, bounds);
    const Point2 peak = ext.argmax;
    const double goal = std::abs(target);
    if (!(ext.max > 0.0) || goal > best.h_max + kRemainderTolerance)
        throw InfeasiblePlan("no loop inside the bounds yields " + std::to_string(goal));

    auto scaled = [&](double s) {
        std::vector<Point2> verts;
        for (const auto& v : best.vertices)
            verts.push_back(peak + s * (v - peak));
        return verts;
    };
    auto holonomy_of = [&](double s) { return area_holonomy(model, BaseLoop::polygon(scaled(s)), 1e-12); };

    double lo = 0.0, hi = 1.0, s = 1.0, err = best.h_max - goal;
    for (int iter = 0; iter < 100 && std::abs(err) > 1e-12; ++iter) {
        s = 0.5 * (lo + hi);
        err = holonomy_of(s) - goal;
        (err < 0 ? lo : hi) = s;
    }
    if (std::abs(err) > kRemainderTolerance)
        throw InfeasiblePlan("loop scale bisection did not converge");
    return with_connector(anchor, polygon_loop(scaled(s), anchor, target < 0));
}

BaseLoop purcell_remainder(const KinematicModel& model, double target, const Point2& anchor, const Bounds& bounds)
{
    // Center the circle on the strongest curvature extremum inside the bounds.
    const auto grid = curvature_grid(model, bounds[0], bounds[1], 61, 61);
    const auto ext = find_extrema(model, grid);
    const bool use_max = std::abs(ext.max) >= std::abs(ext.min);
    const Point2 center = use_max ? Point2(ext.argmax) : Point2(ext.argmin);
    const double kappa_sign = sign_of(use_max ? ext.max : ext.min);
    if (kappa_sign == 0.0)
        throw InfeasiblePlan("curvature vanishes inside the bounds");

    // Largest circle inside the bounds that stays on one side of the zero
    // line a1 + a2 = pi.
    double r_max = std::abs(std::numbers::pi - center.x() - center.y()) / std::numbers::sqrt2;
    for (int i = 0; i < 2; ++i)
        r_max = std::min({r_max, center[i] - bounds[i].lo, bounds[i].hi - center[i]});
    r_max = std::max(0.0, r_max * (1 - 1e-12));

    const double goal = std::abs(target);
    auto holonomy_of = [&](double r) {
        return r <= 0.0 ? 0.0 : kappa_sign * area_holonomy(model, BaseLoop::circle(center, r), 1e-12);
    };
    if (holonomy_of(r_max) < goal - kRemainderTolerance)
        return shrunk_max_loop(model, target, anchor, bounds, ext);

    double lo = 0.0, hi = r_max, r = 0.5 * (lo + hi);
    double err = INFINITY;
    for (int iter = 0; iter < 100; ++iter) {
        r = 0.5 * (lo + hi);
        const double value = holonomy_of(r);
        err = value - goal;
        if (std::abs(err) <= 1e-12)
            break;
        (err < 0 ? lo : hi) = r;
    }
    if (std::abs(err) > kRemainderTolerance)
        throw InfeasiblePlan("circle radius bisection did not converge");

    // Enter and leave along the diagonal direction through the circle's
    // lower-left point.
    const double entry_angle = 1.25 * std::numbers::pi;
    const bool ccw = target * kappa_sign > 0;
    return with_connector(anchor, BaseLoop::circle(center, r, entry_angle, ccw));
}

Maneuver loop_maneuver(const KinematicModel& model, std::string label, const BaseLoop& loop, int repetitions)
{
    Maneuver mv{std::move(label), loop.path(), repetitions, true, 0.0};
    mv.predicted_holonomy = repetitions * line_holonomy(model, loop, 1e-12);
    return mv;
}

Maneuver path_maneuver(const KinematicModel& model, std::string label, const BasePath& path)
{
    return Maneuver{std::move(label), path, 1, false, path_integral(model, path, 1e-12)};
}

// Maneuvers from `anchor` that realize `target`: out to the maximal loop,
// m traversals, back, then the remainder loop.
void append_loops(GaitPlan& plan, const KinematicModel& model, const Point2& anchor, double target,
                  const Bounds& bounds)
{
    const auto best = max_holonomy_loop(model, bounds);
    plan.h_max = best.h_max;
    const auto dec = decompose(target, best.h_max);
    plan.m = dec.m;
    plan.remainder = dec.remainder;

    if (dec.m > 0) {
        const auto loop = polygon_loop(best.vertices, anchor, target < 0);
        const Point2 entry = loop.start();
        const bool needs_connector = (entry - anchor).norm() > 0.0;
        if (needs_connector)
            plan.maneuvers.push_back(path_maneuver(model, "connector", BasePath::line(anchor, entry)));
        plan.maneuvers.push_back(loop_maneuver(model, "max-loop", loop, dec.m));
        if (needs_connector)
            plan.maneuvers.push_back(path_maneuver(model, "connector-return", BasePath::line(entry, anchor)));
    }
    if (dec.remainder != 0.0)
        plan.maneuvers.push_back(
            loop_maneuver(model, "remainder-loop", remainder_loop(model, dec.remainder, anchor, bounds), 1));
}

}  // namespace

double GaitPlan::predicted_total() const
{
    double total = 0.0;
    for (const auto& mv : maneuvers)
        total += mv.predicted_holonomy;
    return total;
}

BasePath GaitPlan::timed_path() const
{
    BasePath path;
    for (const auto& mv : maneuvers)
        for (int k = 0; k < mv.repetitions; ++k)
            path = path.then(mv.path);
    return path;
}

MaxHolonomyLoop max_holonomy_loop(const KinematicModel& model, const Bounds& bounds)
{
    require_planar_bounds(model, bounds);
    MaxHolonomyLoop out;

    if (constant_curvature(model)) {
        const double kappa = curvature_analytic(model, ShapePoint::Zero(2));
        const double area = bounds[0].width() * bounds[1].width();
        if (kappa == 0.0 || area == 0.0)
            throw InfeasiblePlan("no loop inside the bounds produces displacement");
        out.vertices = {{bounds[0].lo, bounds[1].lo}, {bounds[0].hi, bounds[1].lo}, {bounds[0].hi, bounds[1].hi},
                        {bounds[0].lo, bounds[1].hi}};
        // Negative curvature: clockwise traversal gives positive holonomy.
        if (kappa < 0)
            std::reverse(out.vertices.begin() + 1, out.vertices.end());
        out.loop = BaseLoop::polygon(out.vertices);
        out.h_max = std::abs(kappa) * area;
    } else if (model.kind() == ModelKind::Purcell) {
        for (const auto& b : bounds)
            if (b.lo < -kBoundsSlack || b.hi > std::numbers::pi + kBoundsSlack)
                throw std::invalid_argument("Purcell planning bounds must lie inside [0, pi] per angle");
        std::vector<Point2> poly = {{0.0, 0.0}, {std::numbers::pi, 0.0}, {0.0, std::numbers::pi}};
        poly = clip(poly, {-1, 0}, -bounds[0].lo);
        poly = clip(poly, {1, 0}, bounds[0].hi);
        poly = clip(poly, {0, -1}, -bounds[1].lo);
        poly = clip(poly, {0, 1}, bounds[1].hi);
        poly = dedupe(std::move(poly));
        if (poly.size() < 3 || std::abs(polygon_signed_area(poly)) < 1e-14)
            throw InfeasiblePlan("bounds do not reach the positive-curvature region");
        if (polygon_signed_area(poly) < 0)
            std::reverse(poly.begin() + 1, poly.end());
        out.vertices = poly;
        out.loop = BaseLoop::polygon(poly);
        out.h_max = area_holonomy(model, out.loop, 1e-12);
    } else {
        throw std::invalid_argument(model.name() + ": gait planning supports spherical pair and Purcell models");
    }
    return out;
}

Decomposition decompose(double h_comm, double h_max, double h1)
{
    if (!(h_max > 0.0) || !std::isfinite(h_max))
        throw std::invalid_argument("H_max must be positive");
    if (!std::isfinite(h_comm) || !std::isfinite(h1))
        throw std::invalid_argument("commanded displacement must be finite");
    const double diff = h_comm - h1;
    const double m = std::floor(std::abs(diff) / h_max);
    return {static_cast<int>(m), diff - sign_of(diff) * m * h_max};
}

BaseLoop remainder_loop(const KinematicModel& model, double target, const Point2& anchor, const Bounds& bounds)
{
    require_planar_bounds(model, bounds);
    require_inside(anchor, bounds, "remainder-loop anchor");
    if (target == 0.0)
        return BaseLoop::point(anchor);
    if (constant_curvature(model))
        return spherical_remainder(model, target, anchor, bounds);
    if (model.kind() == ModelKind::Purcell)
        return purcell_remainder(model, target, anchor, bounds);
    throw std::invalid_argument(model.name() + ": gait planning supports spherical pair and Purcell models");
}

GaitPlan plan_gait_same_shape(const KinematicModel& model, const Point2& x0, double h_comm, const Bounds& bounds)
{
    require_planar_bounds(model, bounds);
    require_inside(x0, bounds, "initial shape");

    GaitPlan plan;
    plan.h_comm = h_comm;
    plan.start = plan.end = x0;
    append_loops(plan, model, x0, h_comm, bounds);
    if (!plan_within_bounds(plan, bounds))
        throw std::logic_error("planned gait leaves the bounds");
    return plan;
}

GaitPlan plan_gait_different_shape(const KinematicModel& model, const Point2& x0, const Point2& xf, double h_comm,
                                   const Bounds& bounds)
{
    require_planar_bounds(model, bounds);
    require_inside(x0, bounds, "initial shape");
    require_inside(xf, bounds, "final shape");

    GaitPlan plan;
    plan.h_comm = h_comm;
    plan.start = x0;
    plan.end = xf;
    if ((xf - x0).norm() > 0.0) {
        plan.maneuvers.push_back(path_maneuver(model, "transfer", BasePath::line(x0, xf)));
        plan.h1 = plan.maneuvers.back().predicted_holonomy;
    }
    append_loops(plan, model, xf, h_comm - plan.h1, bounds);
    if (!plan_within_bounds(plan, bounds))
        throw std::logic_error("planned gait leaves the bounds");
    return plan;
}

bool plan_within_bounds(const GaitPlan& plan, const Bounds& bounds)
{
    for (const auto& mv : plan.maneuvers)
        for (const auto& p : sample_points(mv.path, 256))
            if (!inside(p, bounds))
                return false;
    return true;
}

Execution execute_plan(const KinematicModel& model, const GaitPlan& plan, double dt)
{
    Execution out;
    const auto path = plan.timed_path();
    if (path.empty()) {
        out.trajectory.samples.push_back({0.0, plan.start, 0.0});
        return out;
    }
    out.trajectory = reconstruct_trajectory(model, path, dt);
    out.achieved = out.trajectory.displacement();
    return out;
}

Execution execute_plan(const KinematicModel& model, const GaitPlan& plan)
{
    const double total = plan.timed_path().duration();
    return execute_plan(model, plan, total > 0.0 ? 1e-3 * total : 1.0);
}

}  // namespace swimgait
