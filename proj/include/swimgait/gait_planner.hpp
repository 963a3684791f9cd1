#ifndef SWIMGAIT_GAIT_PLANNER_HPP
#define SWIMGAIT_GAIT_PLANNER_HPP

#include "swimgait/base_path.hpp"
#include "swimgait/holonomy.hpp"
#include "swimgait/kinematic_model.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace swimgait {

// No loop of the requested holonomy fits inside the bounds.
class InfeasiblePlan : public std::runtime_error {
public:
    explicit InfeasiblePlan(const std::string& what) : std::runtime_error(what) {}
};

struct Maneuver {
    std::string label;
    BasePath path;
    int repetitions = 1;
    bool closed = false;
    // Displacement over all repetitions.
    double predicted_holonomy = 0.0;
};

/// Open-loop gait: maneuvers executed in order, loops repeated in place.
struct GaitPlan {
    std::vector<Maneuver> maneuvers;
    double h_comm = 0.0;
    double h_max = 0.0;
    int m = 0;
    double remainder = 0.0;
    // Displacement of the initial transfer (distinct start and end shapes).
    double h1 = 0.0;
    Point2 start = Point2::Zero();
    Point2 end = Point2::Zero();

    double predicted_total() const;
    // All maneuvers concatenated, repetitions unrolled.
    BasePath timed_path() const;
};

struct MaxHolonomyLoop {
    BaseLoop loop;
    // Vertices in traversal order (without the closing repeat).
    std::vector<Point2> vertices;
    double h_max = 0.0;
};

// Loop of largest positive holonomy inside the bounds. Constant-curvature
// models use the bounding rectangle; Purcell uses the positive-curvature
// triangle a1 + a2 <= pi clipped to the bounds.
MaxHolonomyLoop max_holonomy_loop(const KinematicModel& model, const Bounds& bounds);

struct Decomposition {
    int m = 0;
    double remainder = 0.0;
};

// (h_comm - h1) = sign * m * h_max + remainder with |remainder| < h_max.
Decomposition decompose(double h_comm, double h_max, double h1 = 0.0);

// Loop through the anchor whose holonomy equals target.
BaseLoop remainder_loop(const KinematicModel& model, double target, const Point2& anchor, const Bounds& bounds);

GaitPlan plan_gait_same_shape(const KinematicModel& model, const Point2& x0, double h_comm, const Bounds& bounds);

GaitPlan plan_gait_different_shape(const KinematicModel& model, const Point2& x0, const Point2& xf, double h_comm,
                                   const Bounds& bounds);

// True when every sampled plan point lies inside the bounds.
bool plan_within_bounds(const GaitPlan& plan, const Bounds& bounds);

struct Execution {
    Trajectory trajectory;
    double achieved = 0.0;
};

Execution execute_plan(const KinematicModel& model, const GaitPlan& plan, double dt);
Execution execute_plan(const KinematicModel& model, const GaitPlan& plan);

}  // namespace swimgait

#endif
