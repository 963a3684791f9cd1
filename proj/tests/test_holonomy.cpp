#include "oracles.hpp"

#include "swimgait/curvature.hpp"
#include "swimgait/holonomy.hpp"

#include <doctest.h>

#include <numbers>
#include <stdexcept>

using namespace swimgait;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Triangle value from an independent scipy evaluation (dblquad of the
// closed-form curvature over a1 + a2 <= pi, tolerances 1e-13).
constexpr double kTriangleReference = 0.40463321106808;

BaseLoop purcell_triangle() { return BaseLoop::polygon({{0, 0}, {kPi, 0}, {0, kPi}}); }

}  // namespace

TEST_CASE("translation group is additive")
{
    CHECK(translation_group::exp(0.25) == 0.25);
    CHECK(translation_group::compose(1.5, translation_group::exp(-0.5)) == 1.0);
}

TEST_CASE("point loop has zero holonomy")
{
    const auto model = KinematicModel::spherical_radial(2);
    const auto loop = BaseLoop::point({0.1, 0.1});
    CHECK(line_holonomy(model, loop) == 0.0);
    CHECK(area_holonomy(model, loop) == 0.0);
}

TEST_CASE("spherical square")
{
    const auto model = KinematicModel::spherical_radial(2);
    const auto sq = BaseLoop::rectangle({-0.2, -0.2}, {0.2, 0.2});
    CHECK(line_holonomy(model, sq) == Approx(0.0137142857).epsilon(1e-8));
    CHECK(area_holonomy(model, sq) == Approx(0.16 * 3.0 / 35).epsilon(1e-12));
    CHECK(stokes_check(model, sq) <= 1e-8);
    CHECK(line_holonomy(model, sq.reversed()) == -line_holonomy(model, sq));
}

TEST_CASE("Purcell triangle")
{
    const auto model = KinematicModel::purcell();
    const auto tri = purcell_triangle();
    const double line = line_holonomy(model, tri);
    const double area = area_holonomy(model, tri);
    CHECK(line == Approx(0.4039).epsilon(5e-3 / 0.4039));
    CHECK(std::abs(line - kTriangleReference) <= 1e-9);
    CHECK(std::abs(line - area) / std::abs(line) <= 1e-5);

    const auto kappa = [](double a, double b) { return oracle::purcell_kappa(a, b); };
    const double grid = oracle::polygon_area_integral_grid(kappa, {{0, 0}, {kPi, 0}, {0, kPi}}, 0, kPi, 0, kPi, 600);
    CHECK(std::abs(area - grid) <= 2e-3);
}

TEST_CASE("Purcell circle near the curvature peak")
{
    const auto model = KinematicModel::purcell();
    const double c = oracle::deg(44.12);
    const auto circle = BaseLoop::circle({c, c}, 0.2);
    const double line = line_holonomy(model, circle);
    CHECK(line == Approx(0.2313 * kPi * 0.04).epsilon(0.05));
    CHECK(std::abs(line - area_holonomy(model, circle)) <= 1e-8);
    CHECK(line_holonomy(model, circle.reversed()) == Approx(-line).epsilon(1e-12));
}

TEST_CASE("area integral against a midpoint winding-number oracle")
{
    const auto model = KinematicModel::purcell();
    const std::vector<std::pair<double, double>> poly{{0.3, 0.2}, {2.0, 0.5}, {1.4, 1.2}, {2.2, 2.4}, {0.6, 1.9}};
    std::vector<Point2> verts;
    for (auto [a, b] : poly)
        verts.emplace_back(a, b);
    const auto loop = BaseLoop::polygon(verts);
    const auto kappa = [](double a, double b) { return oracle::purcell_kappa(a, b); };
    const double grid = oracle::polygon_area_integral_grid(kappa, poly, 0, 2.5, 0, 2.5, 800);
    CHECK(area_holonomy(model, loop) == Approx(grid).epsilon(1e-3));
    CHECK(stokes_check(model, loop) <= 1e-9);
}

TEST_CASE("self-intersecting loops are rejected by the area integral")
{
    const auto model = KinematicModel::purcell();
    const auto bowtie = BaseLoop::polygon({{0.5, 0.5}, {1.5, 1.5}, {1.5, 0.5}, {0.5, 1.5}});
    CHECK_THROWS_AS(area_holonomy(model, bowtie), std::invalid_argument);
    CHECK_NOTHROW(line_holonomy(model, bowtie));
}

TEST_CASE("holonomy is additive over loops joined at a point")
{
    const auto model = KinematicModel::purcell();
    const auto a = BaseLoop::rectangle({0.5, 0.5}, {1.0, 1.2});
    const auto b = BaseLoop::circle({0.75, 0.5}, 0.25, 3 * kPi / 2);
    const auto moved = BaseLoop(BasePath::line({0.5, 0.5}, {0.75, 0.25})
                                    .then(b.path())
                                    .then(BasePath::line({0.75, 0.25}, {0.5, 0.5})));
    const BaseLoop joined(a.path().then(moved.path()));
    CHECK(line_holonomy(model, joined) ==
          Approx(line_holonomy(model, a) + line_holonomy(model, b)).epsilon(1e-10));
}

TEST_CASE("trajectory reconstruction")
{
    const auto model = KinematicModel::purcell();
    const auto tri = purcell_triangle();
    const auto traj = reconstruct_trajectory(model, tri.path());
    CHECK(std::abs(traj.displacement() - line_holonomy(model, tri)) <= 1e-8);
    for (std::size_t i = 1; i < traj.samples.size(); ++i)
        CHECK(traj.samples[i].t > traj.samples[i - 1].t);
    CHECK(traj.samples.front().t == 0.0);
    CHECK(traj.samples.back().t == Approx(tri.path().duration()));

    CHECK(reconstruct_trajectory(model, tri.path(), 1e-3, 2.0).samples.front().h == 2.0);
    CHECK_THROWS_AS(reconstruct_trajectory(model, tri.path(), 0.0), std::invalid_argument);

    const auto still = reconstruct_trajectory(model, BasePath::stationary({1, 1}, 3.0));
    CHECK(still.displacement() == 0.0);
}

TEST_CASE("retraced paths return to zero")
{
    const auto model = KinematicModel::purcell();
    const BasePath p({PathSegment{Polyline{{{0.2, 0.3}, {1.5, 0.4}, {2.0, 2.1}}}, 1.3},
                      PathSegment{Arc{{2.0, 1.6}, 0.5, kPi / 2, kPi}, 0.7}});
    const auto there_and_back = p.then(p.reversed());
    CHECK(std::abs(reconstruct_trajectory(model, there_and_back).displacement()) <= 1e-10);
    CHECK(std::abs(path_integral(model, there_and_back)) <= 1e-12);
}

TEST_CASE("displacement is invariant under reparameterization")
{
    const auto model = KinematicModel::purcell();
    const auto even = BaseLoop::polygon({{0.2, 0.2}, {2.0, 0.3}, {0.4, 2.2}}, 1.0);
    const BaseLoop uneven(BasePath({PathSegment{Polyline{{{0.2, 0.2}, {2.0, 0.3}}}, 5.0},
                                    PathSegment{Polyline{{{2.0, 0.3}, {0.4, 2.2}}}, 0.2},
                                    PathSegment{Polyline{{{0.4, 2.2}, {0.2, 0.2}}}, 1.1}}));
    CHECK(std::abs(line_holonomy(model, even) - line_holonomy(model, uneven)) <= 1e-10);
    CHECK(std::abs(line_holonomy(model, BaseLoop(even.path().with_time_scale(37.0))) - line_holonomy(model, even)) <=
          1e-10);

    // The integrated trajectory agrees up to the RK4 step error.
    const double a = reconstruct_trajectory(model, even.path()).displacement();
    const double b = reconstruct_trajectory(model, uneven.path(), 1e-4).displacement();
    CHECK(std::abs(a - b) <= 1e-8);
}

TEST_CASE("Stokes on random simple loops")
{
    const auto model = KinematicModel::purcell();
    for (int k = 0; k < 20; ++k) {
        const double cx = oracle::uniform(0.6, 2.5), cy = oracle::uniform(0.6, 2.5), r = oracle::uniform(0.05, 0.5);
        const auto circle = BaseLoop::circle({cx, cy}, r, oracle::uniform(0, 2 * kPi), k % 2 == 0);
        const double h = line_holonomy(model, circle);
        CHECK(std::abs(h - area_holonomy(model, circle)) <= 1e-8 * std::max(1.0, std::abs(h)));
    }
}
