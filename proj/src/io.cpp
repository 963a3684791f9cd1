#include "swimgait/io.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <numbers>
#include <ostream>
#include <sstream>

namespace swimgait::io {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

const json& require(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw ConfigError(where + ": missing field '" + key + "'");
    return j.at(key);
}

double number(const json& j, const std::string& where)
{
    if (!j.is_number())
        throw ConfigError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw ConfigError(where + ": expected a finite number");
    return v;
}

double number_or(const json& j, const char* key, double fallback, const std::string& where)
{
    if (!j.contains(key))
        return fallback;
    return number(j.at(key), where + "." + key);
}

int integer(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ConfigError(where + ": expected an integer");
    return j.get<int>();
}

Point2 point2(const json& j, double scale, const std::string& where)
{
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(where + ": expected a 2-element array");
    return Point2(number(j[0], where) / scale, number(j[1], where) / scale);
}

json point2_json(const Point2& p, double scale) { return json::array({p.x() * scale, p.y() * scale}); }

PathSegment segment_from_json(const json& j, double scale, const std::string& where)
{
    const auto type = require(j, "type", where);
    if (!type.is_string())
        throw ConfigError(where + ".type: expected a string");
    const double duration = number_or(j, "duration", 1.0, where);
    if (!(duration > 0.0))
        throw ConfigError(where + ".duration: must be positive");

    if (type == "polyline") {
        const auto& verts = require(j, "vertices", where);
        if (!verts.is_array() || verts.empty())
            throw ConfigError(where + ".vertices: expected a nonempty array");
        Polyline pl;
        for (std::size_t i = 0; i < verts.size(); ++i)
            pl.vertices.push_back(point2(verts[i], scale, where + ".vertices[" + std::to_string(i) + "]"));
        return {pl, duration};
    }
    if (type == "arc") {
        Arc arc;
        arc.center = point2(require(j, "center", where), scale, where + ".center");
        arc.radius = number(require(j, "radius", where), where + ".radius") / scale;
        arc.start_angle = number(require(j, "start_angle", where), where + ".start_angle") * kDegree;
        arc.end_angle = number(require(j, "end_angle", where), where + ".end_angle") * kDegree;
        if (!(arc.radius >= 0.0))
            throw ConfigError(where + ".radius: must be non-negative");
        return {arc, duration};
    }
    throw ConfigError(where + ".type: unknown segment type '" + type.get<std::string>() + "'");
}

json segment_to_json(const PathSegment& seg, double scale)
{
    json j;
    if (const auto* pl = std::get_if<Polyline>(&seg.geometry)) {
        j["type"] = "polyline";
        j["vertices"] = json::array();
        for (const auto& v : pl->vertices)
            j["vertices"].push_back(point2_json(v, scale));
    } else {
        const auto& arc = std::get<Arc>(seg.geometry);
        j["type"] = "arc";
        j["center"] = point2_json(arc.center, scale);
        j["radius"] = arc.radius * scale;
        j["start_angle"] = arc.start_angle / kDegree;
        j["end_angle"] = arc.end_angle / kDegree;
    }
    j["duration"] = seg.duration;
    return j;
}

json vector_json(const Eigen::VectorXd& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(v[i]);
    return out;
}

}  // namespace

double shape_scale(const KinematicModel& model) { return model.kind() == ModelKind::Purcell ? 180.0 / std::numbers::pi : 1.0; }

KinematicModel model_from_config(const json& config)
{
    const auto& m = require(config, "model", "config");
    const auto& kind_json = require(m, "kind", "model");
    if (!kind_json.is_string())
        throw ConfigError("model.kind: expected a string");
    const auto kind = kind_json.get<std::string>();
    const double eps = number_or(m, "epsilon", 1.0, "model");

    auto build = [&]() -> KinematicModel {
        try {
            if (kind == "spherical-radial")
                return KinematicModel::spherical_radial(integer(require(m, "n", "model"), "model.n"), eps);
            if (kind == "spherical-azimuthal")
                return KinematicModel::spherical_azimuthal(integer(require(m, "n", "model"), "model.n"), eps);
            if (kind == "spherical-full")
                return KinematicModel::spherical_full(integer(require(m, "order", "model"), "model.order"), eps);
            if (kind == "spherical-series") {
                const auto& coords = require(m, "coordinates", "model");
                if (!coords.is_array())
                    throw ConfigError("model.coordinates: expected an array of names");
                std::vector<SeriesCoordinate> parsed;
                for (const auto& c : coords) {
                    if (!c.is_string())
                        throw ConfigError("model.coordinates: expected strings like \"alpha2\"");
                    parsed.push_back(SeriesCoordinate::parse(c.get<std::string>()));
                }
                return KinematicModel::spherical_series(std::move(parsed), eps);
            }
            if (kind == "purcell")
                return KinematicModel::purcell(number_or(m, "k", 1.0, "model"), number_or(m, "L", 1.0, "model"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("model: ") + e.what());
        }
        throw ConfigError("model.kind: unknown model '" + kind + "'");
    };

    auto model = build();
    if (config.contains("bounds")) {
        try {
            model = model.with_bounds(bounds_from_json(config.at("bounds"), model));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("bounds: ") + e.what());
        }
    }
    return model;
}

Bounds bounds_from_json(const json& j, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    if (!j.is_array() || static_cast<int>(j.size()) != model.dimension())
        throw ConfigError("bounds: expected one [lo, hi] pair per base coordinate");
    Bounds out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "bounds[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2)
            throw ConfigError(where + ": expected [lo, hi]");
        const Interval iv{number(j[i][0], where) / scale, number(j[i][1], where) / scale};
        if (!(iv.lo <= iv.hi))
            throw ConfigError(where + ": empty interval");
        out.push_back(iv);
    }
    return out;
}

ShapePoint point_from_json(const json& j, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    if (!j.is_array() || static_cast<int>(j.size()) != model.dimension())
        throw ConfigError("shape point: expected " + std::to_string(model.dimension()) + " coordinates");
    ShapePoint x(model.dimension());
    for (int i = 0; i < model.dimension(); ++i)
        x[i] = number(j[static_cast<std::size_t>(i)], "shape point") / scale;
    return x;
}

json point_to_json(const ShapePoint& x, const KinematicModel& model)
{
    return vector_json(x * shape_scale(model));
}

BasePath path_from_json(const json& j, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    const auto& segs = require(j, "segments", "path");
    if (!segs.is_array())
        throw ConfigError("path.segments: expected an array");
    std::vector<PathSegment> out;
    for (std::size_t i = 0; i < segs.size(); ++i)
        out.push_back(segment_from_json(segs[i], scale, "path.segments[" + std::to_string(i) + "]"));
    int orientation = 1;
    if (j.contains("orientation")) {
        orientation = integer(j.at("orientation"), "path.orientation");
        if (orientation != 1 && orientation != -1)
            throw ConfigError("path.orientation: must be 1 or -1");
    }
    try {
        return BasePath(std::move(out), orientation);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("path: ") + e.what());
    }
}

json path_to_json(const BasePath& path, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    json j;
    j["orientation"] = path.orientation();
    j["segments"] = json::array();
    for (const auto& s : path.segments())
        j["segments"].push_back(segment_to_json(s, scale));
    return j;
}

BaseLoop loop_from_json(const json& j, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    try {
        if (j.is_object() && j.contains("segments"))
            return BaseLoop(path_from_json(j, model));
        const auto& type_json = require(j, "type", "loop");
        if (!type_json.is_string())
            throw ConfigError("loop.type: expected a string");
        const auto type = type_json.get<std::string>();
        const double duration = number_or(j, "duration", 1.0, "loop");
        const bool ccw = !j.contains("ccw") || j.at("ccw").get<bool>();

        if (type == "rectangle")
            return BaseLoop::rectangle(point2(require(j, "lower", "loop"), scale, "loop.lower"),
                                       point2(require(j, "upper", "loop"), scale, "loop.upper"), ccw, duration);
        if (type == "polygon") {
            const auto& verts = require(j, "vertices", "loop");
            if (!verts.is_array() || verts.empty())
                throw ConfigError("loop.vertices: expected a nonempty array");
            std::vector<Point2> pts;
            for (const auto& v : verts)
                pts.push_back(point2(v, scale, "loop.vertices"));
            auto loop = BaseLoop::polygon(std::move(pts), duration);
            return ccw ? loop : loop.reversed();
        }
        if (type == "circle")
            return BaseLoop::circle(point2(require(j, "center", "loop"), scale, "loop.center"),
                                    number(require(j, "radius", "loop"), "loop.radius") / scale,
                                    number_or(j, "start_angle", 0.0, "loop") * kDegree, ccw, duration);
        if (type == "point")
            return BaseLoop::point(point2(require(j, "at", "loop"), scale, "loop.at"), duration);
        throw ConfigError("loop.type: unknown loop type '" + type + "'");
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("loop: ") + e.what());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("loop: ") + e.what());
    }
}

json report_to_json(const ControllabilityReport& report, const KinematicModel& model)
{
    json j;
    j["model"] = model.name();
    j["point"] = point_to_json(report.point, model);
    j["fields"] = json::array();
    for (const auto& f : report.fields_evaluated)
        j["fields"].push_back(vector_json(f));
    j["brackets"] = json::array();
    for (const auto& b : report.brackets)
        j["brackets"].push_back({{"pair", {b.first, b.second}}, {"vector", vector_json(b.value)}});
    j["singular_values"] = vector_json(report.singular_values);
    j["rank"] = report.rank;
    j["full_space_dim"] = report.full_space_dim;
    j["ill_conditioned"] = report.ill_conditioned;
    j["verdict"] = report.verdict;
    return j;
}

json plan_to_json(const GaitPlan& plan, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    json j;
    j["model"] = model.name();
    j["units"] = scale == 1.0 ? "native" : "deg";
    j["h_comm"] = plan.h_comm;
    j["h_max"] = plan.h_max;
    j["m"] = plan.m;
    j["remainder"] = plan.remainder;
    j["h1"] = plan.h1;
    j["start"] = point2_json(plan.start, scale);
    j["end"] = point2_json(plan.end, scale);
    j["predicted_total"] = plan.predicted_total();
    j["maneuvers"] = json::array();
    for (const auto& mv : plan.maneuvers)
        j["maneuvers"].push_back({{"label", mv.label},
                                  {"repetitions", mv.repetitions},
                                  {"closed", mv.closed},
                                  {"predicted_holonomy", mv.predicted_holonomy},
                                  {"path", path_to_json(mv.path, model)}});
    return j;
}

GaitPlan plan_from_json(const json& j, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    const std::string units = j.value("units", scale == 1.0 ? "native" : "deg");
    if ((units == "deg") != (scale != 1.0))
        throw ConfigError("plan: units '" + units + "' do not match model " + model.name());

    GaitPlan plan;
    plan.h_comm = number(require(j, "h_comm", "plan"), "plan.h_comm");
    plan.h_max = number_or(j, "h_max", 0.0, "plan");
    plan.m = j.contains("m") ? integer(j.at("m"), "plan.m") : 0;
    plan.remainder = number_or(j, "remainder", 0.0, "plan");
    plan.h1 = number_or(j, "h1", 0.0, "plan");
    plan.start = point2(require(j, "start", "plan"), scale, "plan.start");
    plan.end = point2(require(j, "end", "plan"), scale, "plan.end");
    const auto& mvs = require(j, "maneuvers", "plan");
    if (!mvs.is_array())
        throw ConfigError("plan.maneuvers: expected an array");
    for (const auto& mj : mvs) {
        Maneuver mv;
        mv.label = mj.value("label", "");
        mv.repetitions = mj.contains("repetitions") ? integer(mj.at("repetitions"), "maneuver.repetitions") : 1;
        if (mv.repetitions < 1)
            throw ConfigError("maneuver.repetitions: must be >= 1");
        mv.closed = mj.value("closed", false);
        mv.predicted_holonomy = number_or(mj, "predicted_holonomy", 0.0, "maneuver");
        mv.path = path_from_json(require(mj, "path", "maneuver"), model);
        plan.maneuvers.push_back(std::move(mv));
    }
    // Continuity of the whole plan.
    try {
        (void)plan.timed_path();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("plan: ") + e.what());
    }
    return plan;
}

std::string format_number(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << v;
    return os.str();
}

void write_grid_csv(std::ostream& os, const CurvatureGrid& grid, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    os << "x1,x2,kappa\n";
    for (int i = 0; i < grid.resolution1; ++i)
        for (int j = 0; j < grid.resolution2; ++j)
            os << format_number(grid.coordinate1(i) * scale) << ',' << format_number(grid.coordinate2(j) * scale)
               << ',' << format_number(grid.at(i, j)) << '\n';
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const KinematicModel& model)
{
    const double scale = shape_scale(model);
    os << "t,x1,x2,h\n";
    for (const auto& s : traj.samples)
        os << format_number(s.t) << ',' << format_number(s.x.x() * scale) << ',' << format_number(s.x.y() * scale)
           << ',' << format_number(s.h) << '\n';
}

}  // namespace swimgait::io
