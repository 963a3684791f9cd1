#ifndef SWIMGAIT_IO_HPP
#define SWIMGAIT_IO_HPP

#include "swimgait/curvature.hpp"
#include "swimgait/gait_planner.hpp"
#include "swimgait/holonomy.hpp"
#include "swimgait/kinematic_model.hpp"
#include "swimgait/lie_analysis.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace swimgait::io {

using nlohmann::json;

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Factor from internal shape coordinates to config units. Purcell joint
// angles are written in degrees; spherical coefficients are unscaled.
double shape_scale(const KinematicModel& model);

// {"kind": "spherical-radial" | "spherical-azimuthal" | "spherical-series" |
//  "spherical-full" | "purcell", ...}; applies config-level "bounds" too.
KinematicModel model_from_config(const json& config);

Bounds bounds_from_json(const json& j, const KinematicModel& model);
ShapePoint point_from_json(const json& j, const KinematicModel& model);
json point_to_json(const ShapePoint& x, const KinematicModel& model);

// {"orientation": 1, "segments": [{"type": "polyline", "vertices": [[..], ..],
//  "duration": 1}, {"type": "arc", "center": [..], "radius": r,
//  "start_angle": deg, "end_angle": deg, "duration": 1}]}
BasePath path_from_json(const json& j, const KinematicModel& model);
json path_to_json(const BasePath& path, const KinematicModel& model);

// A full path object, or shorthand {"type": "rectangle" | "polygon" |
// "circle" | "point", ...}.
BaseLoop loop_from_json(const json& j, const KinematicModel& model);

json report_to_json(const ControllabilityReport& report, const KinematicModel& model);

json plan_to_json(const GaitPlan& plan, const KinematicModel& model);
GaitPlan plan_from_json(const json& j, const KinematicModel& model);

// 17 significant digits, '.' decimal separator.
std::string format_number(double v);

void write_grid_csv(std::ostream& os, const CurvatureGrid& grid, const KinematicModel& model);
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const KinematicModel& model);

}  // namespace swimgait::io

#endif
