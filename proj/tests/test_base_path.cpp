#include "swimgait/base_path.hpp"

#include <doctest.h>

#include <numbers>
#include <stdexcept>

using namespace swimgait;
using doctest::Approx;

namespace {

PathSegment poly(std::vector<Point2> v, double duration = 1.0) { return {Polyline{std::move(v)}, duration}; }

}  // namespace

TEST_CASE("segments must join and carry positive durations")
{
    CHECK_THROWS_AS(BasePath({poly({{0, 0}, {1, 0}}), poly({{1, 1e-9}, {2, 0}})}), std::invalid_argument);
    CHECK_NOTHROW(BasePath({poly({{0, 0}, {1, 0}}), poly({{1, 1e-13}, {2, 0}})}));
    CHECK_THROWS_AS(BasePath({poly({{0, 0}, {1, 0}}, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(BasePath({poly({{0, 0}, {1, 0}})}, 0), std::invalid_argument);
}

TEST_CASE("path geometry and timing")
{
    const BasePath p({poly({{0, 0}, {3, 0}, {3, 1}}, 4.0), PathSegment{Arc{{2, 1}, 1.0, 0.0, std::numbers::pi / 2}, 2.0}});
    CHECK(p.start() == Point2(0, 0));
    CHECK((p.end() - Point2(2, 2)).norm() < 1e-15);
    CHECK(p.duration() == 6.0);
    CHECK(p.length() == Approx(4.0 + std::numbers::pi / 2));

    const auto pieces = p.pieces();
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0].duration == Approx(3.0));
    CHECK(pieces[1].duration == Approx(1.0));
    CHECK(pieces[2].kind == PathPiece::Kind::Arc);
    CHECK(pieces[2].duration == 2.0);
    CHECK((pieces[2].point(0.5) - Point2(2 + std::sqrt(0.5), 1 + std::sqrt(0.5))).norm() < 1e-15);
    // Tangent of a unit quarter arc has length pi/2 per unit u.
    CHECK(pieces[2].tangent(0.3).norm() == Approx(std::numbers::pi / 2));
}

TEST_CASE("reversal, orientation and concatenation")
{
    const auto a = BasePath::line({0, 0}, {1, 0}, 2.0);
    const auto b = BasePath::line({1, 0}, {1, 1}, 1.0);
    const auto ab = a.then(b);
    CHECK(ab.duration() == 3.0);
    CHECK(ab.end() == Point2(1, 1));
    CHECK_THROWS_AS(b.then(a), std::invalid_argument);

    const auto r = ab.reversed();
    CHECK(r.start() == Point2(1, 1));
    CHECK(r.end() == Point2(0, 0));
    const auto rp = r.pieces();
    CHECK(rp.front().duration == Approx(1.0));
    CHECK(rp.back().duration == Approx(2.0));
    CHECK(r.normalized().orientation() == 1);
    CHECK(r.normalized().start() == Point2(1, 1));
    CHECK(ab.with_time_scale(2.0).duration() == 6.0);
}

TEST_CASE("loops")
{
    CHECK_THROWS_AS(BaseLoop(BasePath::line({0, 0}, {1, 0})), std::invalid_argument);
    const auto sq = BaseLoop::rectangle({0, 0}, {1, 2});
    CHECK(sq.start() == Point2(0, 0));
    CHECK(sq.path().end() == Point2(0, 0));
    const auto tri = BaseLoop::polygon({{0, 0}, {1, 0}, {0, 1}});
    CHECK(tri.path().end() == Point2(0, 0));
    const auto c = BaseLoop::circle({1, 1}, 0.5, std::numbers::pi);
    CHECK((c.start() - Point2(0.5, 1)).norm() < 1e-15);
    CHECK(BaseLoop::point({2, 3}).path().length() == 0.0);
    CHECK(polygon_signed_area({{0, 0}, {2, 0}, {2, 1}, {0, 1}}) == Approx(2.0));
    CHECK(polygon_signed_area({{0, 0}, {0, 1}, {2, 1}, {2, 0}}) == Approx(-2.0));
}

TEST_CASE("simplicity test")
{
    CHECK(is_simple(BaseLoop::rectangle({0, 0}, {1, 1})));
    CHECK(is_simple(BaseLoop::circle({0, 0}, 1.0)));
    CHECK(is_simple(BaseLoop::point({0, 0})));
    CHECK(is_simple(BaseLoop::polygon({{0, 0}, {1, 0}, {0, 1}})));
    CHECK_FALSE(is_simple(BaseLoop::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}})));
    CHECK_FALSE(is_simple(BaseLoop::polygon({{0, 0}, {1, 0}})));

    const auto sq = BaseLoop::rectangle({0, 0}, {1, 1});
    CHECK_FALSE(is_simple(BaseLoop(sq.path().then(sq.path()))));
}

TEST_CASE("sample_points includes vertices and arc chords")
{
    const auto pts = sample_points(BaseLoop::rectangle({0, 0}, {1, 1}).path());
    CHECK(pts.size() >= 5);
    const auto arc = sample_points(BaseLoop::circle({0, 0}, 1.0).path(), 16);
    CHECK(arc.size() >= 17);
    for (const auto& q : arc)
        CHECK(q.norm() == Approx(1.0));
}
