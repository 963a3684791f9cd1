#ifndef SWIMGAIT_BASE_PATH_HPP
#define SWIMGAIT_BASE_PATH_HPP

#include <Eigen/Dense>

#include <variant>
#include <vector>

namespace swimgait {

using Point2 = Eigen::Vector2d;

struct Polyline {
    std::vector<Point2> vertices;
};

// Circular arc from start_angle to end_angle (radians); end < start runs
// clockwise.
struct Arc {
    Point2 center = Point2::Zero();
    double radius = 0.0;
    double start_angle = 0.0;
    double end_angle = 0.0;
};

struct PathSegment {
    std::variant<Polyline, Arc> geometry;
    double duration = 1.0;

    Point2 start() const;
    Point2 end() const;
    PathSegment reversed() const;
};

/// One smooth piece of a path, parameterized over u in [0, 1] and traversed
/// in `duration` seconds.
struct PathPiece {
    enum class Kind { Line, Arc };

    Kind kind = Kind::Line;
    Point2 from = Point2::Zero();
    Point2 to = Point2::Zero();
    Point2 center = Point2::Zero();
    double radius = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;
    double duration = 0.0;

    Point2 point(double u) const;
    // d point / du.
    Point2 tangent(double u) const;
    double length() const;
};

/// Piecewise curve in a 2-D base space. Segments must join within 1e-12 and
/// carry positive durations; orientation -1 traverses them backwards.
class BasePath {
public:
    static constexpr double kContinuityTolerance = 1e-12;

    BasePath() = default;
    explicit BasePath(std::vector<PathSegment> segments, int orientation = 1);

    static BasePath line(const Point2& from, const Point2& to, double duration = 1.0);
    static BasePath stationary(const Point2& at, double duration = 1.0);

    const std::vector<PathSegment>& segments() const { return segments_; }
    int orientation() const { return orientation_; }
    bool empty() const { return segments_.empty(); }

    Point2 start() const;
    Point2 end() const;
    double duration() const;
    double length() const;

    // Traversal-ordered pieces with the orientation applied; each segment's
    // duration is shared among its pieces in proportion to length.
    std::vector<PathPiece> pieces() const;

    BasePath reversed() const;
    // Same traversal with orientation folded into the segments.
    BasePath normalized() const;
    BasePath with_time_scale(double factor) const;
    // Concatenation; throws if this path's end does not meet other's start.
    BasePath then(const BasePath& other) const;

private:
    std::vector<PathSegment> segments_;
    int orientation_ = 1;
};

class BaseLoop {
public:
    BaseLoop() = default;
    // Throws std::invalid_argument if the path does not close within 1e-12.
    explicit BaseLoop(BasePath path);

    static BaseLoop point(const Point2& at, double duration = 1.0);
    // Closes the vertex list back to its first vertex.
    static BaseLoop polygon(std::vector<Point2> vertices, double duration = 1.0);
    static BaseLoop rectangle(const Point2& lower, const Point2& upper, bool ccw = true, double duration = 1.0);
    static BaseLoop circle(const Point2& center, double radius, double start_angle = 0.0, bool ccw = true,
                           double duration = 1.0);

    const BasePath& path() const { return path_; }
    Point2 start() const { return path_.start(); }
    BaseLoop reversed() const { return BaseLoop(path_.reversed()); }

private:
    BasePath path_;
};

// Signed area of a polygon (positive when counter-clockwise).
double polygon_signed_area(const std::vector<Point2>& vertices);

// Non-self-intersecting test on a chord discretization of the loop.
bool is_simple(const BaseLoop& loop);

// Points along the loop: every vertex plus chord points on arcs.
std::vector<Point2> sample_points(const BasePath& path, int arc_chords = 64);

}  // namespace swimgait

#endif
