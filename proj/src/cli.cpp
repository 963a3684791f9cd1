#include "swimgait/cli.hpp"

#include "swimgait/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace swimgait::cli {

namespace {

using io::ConfigError;
using nlohmann::json;

struct Result {
    int code = kSuccess;
    std::string primary;
    std::optional<std::string> trajectory_csv;
    std::string summary;
};

double positive_dt(double dt)
{
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ConfigError("dt must be positive");
    return dt;
}

std::optional<double> config_dt(const Options& options, const json& config)
{
    if (options.dt)
        return positive_dt(*options.dt);
    if (config.contains("dt")) {
        if (!config.at("dt").is_number())
            throw ConfigError("dt: expected a number");
        return positive_dt(config.at("dt").get<double>());
    }
    return std::nullopt;
}

const json& require(const json& config, const char* key)
{
    if (!config.contains(key))
        throw ConfigError(std::string("config: missing field '") + key + "'");
    return config.at(key);
}

Result cmd_controllability(const Options&, const json& config)
{
    const auto model = io::model_from_config(config);
    const ShapePoint x =
        config.contains("point") ? io::point_from_json(config.at("point"), model) : ShapePoint::Zero(model.dimension());
    RankOptions opts;
    opts.step = config.value("step", opts.step);
    opts.relative_tolerance = config.value("rank_tolerance", opts.relative_tolerance);
    if (!(opts.step > 0.0) || !(opts.relative_tolerance > 0.0))
        throw ConfigError("step and rank_tolerance must be positive");
    if (model.dimension() < 2)
        throw ConfigError("controllability needs at least two control fields");

    const auto report = is_locally_controllable(model, x, opts);
    Result r;
    r.primary = io::report_to_json(report, model).dump(2) + "\n";
    r.code = report.verdict ? kSuccess : kNegative;
    if (report.ill_conditioned)
        r.summary = "warning: a singular value lies near the rank cutoff; verdict is sensitive to rank_tolerance";
    return r;
}

Result cmd_curvature_map(const Options& options, const json& config)
{
    const auto model = io::model_from_config(config);
    if (model.dimension() != 2)
        throw ConfigError("curvature-map needs a 2-D model");

    int n1 = model.kind() == ModelKind::Purcell ? 181 : 41;
    int n2 = n1;
    if (options.resolution) {
        n1 = n2 = *options.resolution;
    } else if (config.contains("resolution")) {
        const auto& res = config.at("resolution");
        if (res.is_number_integer()) {
            n1 = n2 = res.get<int>();
        } else if (res.is_array() && res.size() == 2 && res[0].is_number_integer() && res[1].is_number_integer()) {
            n1 = res[0].get<int>();
            n2 = res[1].get<int>();
        } else {
            throw ConfigError("resolution: expected an integer or [n1, n2]");
        }
    }
    if (n1 < 2 || n2 < 2)
        throw ConfigError("resolution must be at least 2 per axis");

    const auto grid = curvature_grid(model, model.bounds()[0], model.bounds()[1], n1, n2);
    std::ostringstream os;
    io::write_grid_csv(os, grid, model);
    return {kSuccess, os.str(), std::nullopt, {}};
}

Result cmd_holonomy(const Options&, const json& config)
{
    const auto model = io::model_from_config(config);
    if (model.dimension() != 2)
        throw ConfigError("holonomy needs a 2-D model");
    const auto loop = io::loop_from_json(require(config, "loop"), model);

    const double line = line_holonomy(model, loop);
    double area = 0.0;
    try {
        area = area_holonomy(model, loop);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("loop: ") + e.what());
    }
    json j{{"model", model.name()}, {"line", line}, {"area", area}, {"residual", std::abs(line - area)}};
    return {kSuccess, j.dump(2) + "\n", std::nullopt, {}};
}

Result cmd_plan(const Options& options, const json& config)
{
    const auto model = io::model_from_config(config);
    if (model.dimension() != 2)
        throw ConfigError("plan needs a 2-D model");
    const auto& hj = require(config, "h_comm");
    if (!hj.is_number())
        throw ConfigError("h_comm: expected a number");
    const double h_comm = hj.get<double>();
    const Point2 x0 = io::point_from_json(require(config, "x0"), model);
    std::optional<Point2> xf;
    if (config.contains("xf"))
        xf = Point2(io::point_from_json(config.at("xf"), model));
    const auto dt = config_dt(options, config);

    Result r;
    GaitPlan plan;
    try {
        plan = xf ? plan_gait_different_shape(model, x0, *xf, h_comm, model.bounds())
                  : plan_gait_same_shape(model, x0, h_comm, model.bounds());
    } catch (const InfeasiblePlan& e) {
        r.code = kNegative;
        r.summary = std::string("infeasible: ") + e.what();
        return r;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    auto j = io::plan_to_json(plan, model);
    std::ostringstream summary;
    summary << "commanded=" << io::format_number(h_comm) << " predicted=" << io::format_number(plan.predicted_total())
            << " m=" << plan.m << " h_max=" << io::format_number(plan.h_max);
    if (options.execute) {
        const auto exec = dt ? execute_plan(model, plan, *dt) : execute_plan(model, plan);
        j["execution"] = {{"achieved", exec.achieved}, {"error", exec.achieved - h_comm}};
        std::ostringstream csv;
        io::write_trajectory_csv(csv, exec.trajectory, model);
        r.trajectory_csv = csv.str();
        summary << " achieved=" << io::format_number(exec.achieved);
    }
    r.primary = j.dump(2) + "\n";
    r.summary = summary.str();
    return r;
}

Result cmd_simulate(const Options& options, const json& config)
{
    const auto model = io::model_from_config(config);
    if (model.dimension() != 2)
        throw ConfigError("simulate needs a 2-D model");
    const auto dt = config_dt(options, config);

    BasePath path;
    if (config.contains("path")) {
        path = io::path_from_json(config.at("path"), model);
    } else if (config.contains("plan") || config.contains("plan_file")) {
        json plan_json;
        if (config.contains("plan")) {
            plan_json = config.at("plan");
        } else {
            std::ifstream in(config.at("plan_file").get<std::string>());
            if (!in)
                throw ConfigError("cannot open plan_file");
            try {
                in >> plan_json;
            } catch (const json::exception& e) {
                throw ConfigError(std::string("plan_file: ") + e.what());
            }
        }
        path = io::plan_from_json(plan_json, model).timed_path();
    } else {
        throw ConfigError("simulate needs 'path', 'plan' or 'plan_file'");
    }

    const auto traj = path.empty() ? Trajectory{} : dt ? reconstruct_trajectory(model, path, *dt)
                                                       : reconstruct_trajectory(model, path);
    std::ostringstream csv;
    io::write_trajectory_csv(csv, traj, model);
    return {kSuccess, csv.str(), std::nullopt, "displacement=" + io::format_number(traj.displacement())};
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << content;
    if (!f)
        throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int run_command(const Options& options, const json& config, std::ostream& out, std::ostream& err)
{
    Result r;
    try {
        if (!config.is_object())
            throw ConfigError("config must be a JSON object");
        if (options.command == "controllability")
            r = cmd_controllability(options, config);
        else if (options.command == "curvature-map")
            r = cmd_curvature_map(options, config);
        else if (options.command == "holonomy")
            r = cmd_holonomy(options, config);
        else if (options.command == "plan")
            r = cmd_plan(options, config);
        else if (options.command == "simulate")
            r = cmd_simulate(options, config);
        else
            throw ConfigError("unknown subcommand '" + options.command + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    try {
        if (r.code == kNegative && r.primary.empty()) {
            err << r.summary << '\n';
            return r.code;
        }
        if (options.out)
            write_file(*options.out, r.primary);
        else
            out << r.primary;

        if (r.trajectory_csv) {
            std::string dest = options.trajectory.value_or(config.value("trajectory_out", std::string{}));
            if (dest.empty())
                dest = options.out ? *options.out + ".trajectory.csv" : "trajectory.csv";
            write_file(dest, *r.trajectory_csv);
        }
        if (!r.summary.empty())
            (options.out ? out : err) << r.summary << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return r.code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gait analysis and synthesis for low-Reynolds-number swimmers"};
    app.require_subcommand(1);

    Options options;
    const char* names[] = {"controllability", "curvature-map", "holonomy", "plan", "simulate"};
    const char* help[] = {"Lie-bracket rank test at a shape", "CSV grid of the curvature x1,x2,kappa",
                          "line and area holonomy of a loop", "synthesize a gait for a commanded displacement",
                          "integrate the motion along a path or saved plan"};
    for (int i = 0; i < 5; ++i) {
        auto* sub = app.add_subcommand(names[i], help[i]);
        sub->add_option("--config", options.config_path, "JSON config file")->required();
        sub->add_option("--out", options.out, "output file (default: stdout)");
        sub->add_option("--dt", options.dt, "trajectory time step");
        sub->add_option("--resolution", options.resolution, "grid samples per axis");
        sub->add_option("--trajectory", options.trajectory, "trajectory CSV path for plan --execute");
        sub->add_flag("--execute", options.execute, "integrate the plan and report the achieved displacement");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kError;
    }
    for (const auto* sub : app.get_subcommands())
        options.command = sub->get_name();

    json config;
    {
        std::ifstream in(options.config_path);
        if (!in) {
            err << "error: cannot open config '" << options.config_path << "'\n";
            return kError;
        }
        try {
            in >> config;
        } catch (const json::exception& e) {
            err << "error: malformed config: " << e.what() << '\n';
            return kError;
        }
    }
    return run_command(options, config, out, err);
}

}  // namespace swimgait::cli
