#include "swimgait/base_path.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swimgait {

namespace {

Point2 on_circle(const Point2& c, double r, double theta) { return c + r * Point2(std::cos(theta), std::sin(theta)); }

bool joins(const Point2& a, const Point2& b)
{
    const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
    return (a - b).norm() <= BasePath::kContinuityTolerance * scale;
}

double cross(const Point2& a, const Point2& b) { return a.x() * b.y() - a.y() * b.x(); }

int orient(const Point2& a, const Point2& b, const Point2& c)
{
    const double v = cross(b - a, c - a);
    return (v > 0) - (v < 0);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p)
{
    return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) && std::min(a.y(), b.y()) <= p.y() &&
           p.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2)
{
    const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4)
        return true;
    return (o1 == 0 && on_segment(p1, p2, q1)) || (o2 == 0 && on_segment(p1, p2, q2)) ||
           (o3 == 0 && on_segment(q1, q2, p1)) || (o4 == 0 && on_segment(q1, q2, p2));
}

}  // namespace

Point2 PathSegment::start() const
{
    if (const auto* pl = std::get_if<Polyline>(&geometry))
        return pl->vertices.front();
    const auto& arc = std::get<Arc>(geometry);
    return on_circle(arc.center, arc.radius, arc.start_angle);
}

Point2 PathSegment::end() const
{
    if (const auto* pl = std::get_if<Polyline>(&geometry))
        return pl->vertices.back();
    const auto& arc = std::get<Arc>(geometry);
    return on_circle(arc.center, arc.radius, arc.end_angle);
}

PathSegment PathSegment::reversed() const
{
    PathSegment out = *this;
    if (auto* pl = std::get_if<Polyline>(&out.geometry))
        std::reverse(pl->vertices.begin(), pl->vertices.end());
    else {
        auto& arc = std::get<Arc>(out.geometry);
        std::swap(arc.start_angle, arc.end_angle);
    }
    return out;
}

Point2 PathPiece::point(double u) const
{
    if (kind == Kind::Line)
        return from + u * (to - from);
    return on_circle(center, radius, theta0 + u * (theta1 - theta0));
}

Point2 PathPiece::tangent(double u) const
{
    if (kind == Kind::Line)
        return to - from;
    const double theta = theta0 + u * (theta1 - theta0);
    return radius * (theta1 - theta0) * Point2(-std::sin(theta), std::cos(theta));
}

double PathPiece::length() const
{
    if (kind == Kind::Line)
        return (to - from).norm();
    return radius * std::abs(theta1 - theta0);
}

BasePath::BasePath(std::vector<PathSegment> segments, int orientation)
    : segments_(std::move(segments)), orientation_(orientation)
{
    if (orientation_ != 1 && orientation_ != -1)
        throw std::invalid_argument("path orientation must be +1 or -1");
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto& seg = segments_[i];
        if (!(seg.duration > 0.0) || !std::isfinite(seg.duration))
            throw std::invalid_argument("segment durations must be positive");
        if (const auto* pl = std::get_if<Polyline>(&seg.geometry)) {
            if (pl->vertices.empty())
                throw std::invalid_argument("polyline segment without vertices");
            for (const auto& v : pl->vertices)
                if (!v.allFinite())
                    throw std::invalid_argument("non-finite polyline vertex");
        } else {
            const auto& arc = std::get<Arc>(seg.geometry);
            if (!(arc.radius >= 0.0) || !std::isfinite(arc.radius) || !arc.center.allFinite() ||
                !std::isfinite(arc.start_angle) || !std::isfinite(arc.end_angle))
                throw std::invalid_argument("arc segment needs a finite center, angles and radius >= 0");
        }
        if (i > 0 && !joins(segments_[i - 1].end(), seg.start()))
            throw std::invalid_argument("path segments " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                        " are not continuous");
    }
}

BasePath BasePath::line(const Point2& from, const Point2& to, double duration)
{
    return BasePath({PathSegment{Polyline{{from, to}}, duration}});
}

BasePath BasePath::stationary(const Point2& at, double duration)
{
    return BasePath({PathSegment{Polyline{{at}}, duration}});
}

Point2 BasePath::start() const
{
    if (segments_.empty())
        throw std::logic_error("empty path has no start");
    return orientation_ > 0 ? segments_.front().start() : segments_.back().end();
}

Point2 BasePath::end() const
{
    if (segments_.empty())
        throw std::logic_error("empty path has no end");
    return orientation_ > 0 ? segments_.back().end() : segments_.front().start();
}

double BasePath::duration() const
{
    double total = 0.0;
    for (const auto& s : segments_)
        total += s.duration;
    return total;
}

double BasePath::length() const
{
    double total = 0.0;
    for (const auto& p : pieces())
        total += p.length();
    return total;
}

std::vector<PathPiece> BasePath::pieces() const
{
    std::vector<PathPiece> out;
    for (const auto& seg : normalized().segments_) {
        std::vector<PathPiece> local;
        if (const auto* pl = std::get_if<Polyline>(&seg.geometry)) {
            if (pl->vertices.size() == 1) {
                PathPiece p;
                p.from = p.to = pl->vertices.front();
                local.push_back(p);
            }
            for (std::size_t i = 0; i + 1 < pl->vertices.size(); ++i) {
                PathPiece p;
                p.from = pl->vertices[i];
                p.to = pl->vertices[i + 1];
                local.push_back(p);
            }
        } else {
            const auto& arc = std::get<Arc>(seg.geometry);
            PathPiece p;
            p.kind = PathPiece::Kind::Arc;
            p.center = arc.center;
            p.radius = arc.radius;
            p.theta0 = arc.start_angle;
            p.theta1 = arc.end_angle;
            local.push_back(p);
        }

        double total = 0.0;
        for (const auto& p : local)
            total += p.length();
        for (auto& p : local) {
            p.duration = total > 0.0 ? seg.duration * p.length() / total : seg.duration / local.size();
            // Zero-length pieces inside a moving segment take no time.
            if (p.duration > 0.0 || total == 0.0)
                out.push_back(p);
        }
    }
    return out;
}

BasePath BasePath::reversed() const
{
    BasePath out = *this;
    out.orientation_ = -orientation_;
    return out;
}

BasePath BasePath::normalized() const
{
    if (orientation_ > 0)
        return *this;
    std::vector<PathSegment> segs;
    segs.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
        segs.push_back(it->reversed());
    return BasePath(std::move(segs), 1);
}

BasePath BasePath::with_time_scale(double factor) const
{
    if (!(factor > 0.0))
        throw std::invalid_argument("time scale must be positive");
    BasePath out = *this;
    for (auto& s : out.segments_)
        s.duration *= factor;
    return out;
}

BasePath BasePath::then(const BasePath& other) const
{
    if (empty())
        return other.normalized();
    if (other.empty())
        return normalized();
    auto segs = normalized().segments_;
    const auto tail = other.normalized().segments_;
    segs.insert(segs.end(), tail.begin(), tail.end());
    return BasePath(std::move(segs), 1);
}

BaseLoop::BaseLoop(BasePath path) : path_(std::move(path))
{
    if (path_.empty())
        throw std::invalid_argument("loop needs at least one segment");
    if (!joins(path_.start(), path_.end()))
        throw std::invalid_argument("loop is not closed: start and end differ by " +
                                    std::to_string((path_.start() - path_.end()).norm()));
}

BaseLoop BaseLoop::point(const Point2& at, double duration) { return BaseLoop(BasePath::stationary(at, duration)); }

BaseLoop BaseLoop::polygon(std::vector<Point2> vertices, double duration)
{
    if (vertices.empty())
        throw std::invalid_argument("polygon needs vertices");
    vertices.push_back(vertices.front());
    return BaseLoop(BasePath({PathSegment{Polyline{std::move(vertices)}, duration}}));
}

BaseLoop BaseLoop::rectangle(const Point2& lower, const Point2& upper, bool ccw, double duration)
{
    auto loop = polygon({lower, {upper.x(), lower.y()}, upper, {lower.x(), upper.y()}}, duration);
    return ccw ? loop : loop.reversed();
}

BaseLoop BaseLoop::circle(const Point2& center, double radius, double start_angle, bool ccw, double duration)
{
    const double sweep = ccw ? 2 * std::numbers::pi : -2 * std::numbers::pi;
    Arc arc{center, radius, start_angle, start_angle + sweep};
    return BaseLoop(BasePath({PathSegment{arc, duration}}));
}

double polygon_signed_area(const std::vector<Point2>& vertices)
{
    double twice = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
    return 0.5 * twice;
}

std::vector<Point2> sample_points(const BasePath& path, int arc_chords)
{
    std::vector<Point2> pts;
    for (const auto& piece : path.pieces()) {
        const int n = piece.kind == PathPiece::Kind::Line
                          ? 1
                          : std::max(8, static_cast<int>(std::ceil(std::abs(piece.theta1 - piece.theta0) /
                                                                   (2 * std::numbers::pi) * arc_chords)));
        if (pts.empty())
            pts.push_back(piece.point(0.0));
        for (int i = 1; i <= n; ++i)
            pts.push_back(piece.point(static_cast<double>(i) / n));
    }
    return pts;
}

bool is_simple(const BaseLoop& loop)
{
    auto raw = sample_points(loop.path(), 128);
    std::vector<Point2> pts;
    for (const auto& p : raw)
        if (pts.empty() || (p - pts.back()).norm() > 0.0)
            pts.push_back(p);
    // pts is closed: front == back (within tolerance).
    const std::size_t chords = pts.size() > 0 ? pts.size() - 1 : 0;
    if (chords < 3)
        return chords == 0;

    for (std::size_t i = 0; i < chords; ++i) {
        const Point2 a1 = pts[i], a2 = pts[i + 1];
        for (std::size_t j = i + 1; j < chords; ++j) {
            const Point2 b1 = pts[j], b2 = pts[j + 1];
            const bool adjacent = (j == i + 1) || (i == 0 && j == chords - 1);
            if (adjacent) {
                // Neighbouring chords may only share their joint; folding back
                // onto each other is an overlap.
                const Point2 da = a2 - a1, db = b2 - b1;
                if (std::abs(cross(da, db)) <= 1e-14 * da.norm() * db.norm() && da.dot(db) < 0.0)
                    return false;
                continue;
            }
            if (segments_intersect(a1, a2, b1, b2))
                return false;
        }
    }
    return true;
}

}  // namespace swimgait
