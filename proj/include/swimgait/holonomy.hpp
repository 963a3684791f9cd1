#ifndef SWIMGAIT_HOLONOMY_HPP
#define SWIMGAIT_HOLONOMY_HPP

#include "swimgait/base_path.hpp"
#include "swimgait/kinematic_model.hpp"

#include <vector>

namespace swimgait {

// Group R of translations along e_z. The exponential map and composition
// reduce to the identity and addition.
namespace translation_group {
inline double exp(double algebra_element) { return algebra_element; }
inline double compose(double g, double increment) { return g + increment; }
}  // namespace translation_group

// Integral of W along a (possibly open) path. Reversing the path negates
// the result exactly.
double path_integral(const KinematicModel& model, const BasePath& path, double abs_tol = 1e-10);

// Net displacement from one traversal of the loop, by line integral.
double line_holonomy(const KinematicModel& model, const BaseLoop& loop, double abs_tol = 1e-10);

// Curvature integrated over the enclosed region, signed by orientation.
// Throws std::invalid_argument for self-intersecting loops.
double area_holonomy(const KinematicModel& model, const BaseLoop& loop, double abs_tol = 1e-8);

// |line_holonomy - area_holonomy|.
double stokes_check(const KinematicModel& model, const BaseLoop& loop);

struct TrajectorySample {
    double t;
    Point2 x;
    double h;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;

    double displacement() const
    {
        return samples.empty() ? 0.0 : samples.back().h - samples.front().h;
    }
};

// Fixed-step RK4 integration of hdot = W(x(t)) . xdot(t) along the timed
// path. Steps are aligned with piece boundaries.
Trajectory reconstruct_trajectory(const KinematicModel& model, const BasePath& path, double dt, double h0 = 0.0);

// Default step: 1e-3 of the path's total duration.
Trajectory reconstruct_trajectory(const KinematicModel& model, const BasePath& path);

}  // namespace swimgait

#endif
