#ifndef SWIMGAIT_CLI_HPP
#define SWIMGAIT_CLI_HPP

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace swimgait::cli {

// Exit codes.
constexpr int kSuccess = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

struct Options {
    std::string command;
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::string> trajectory;
    bool execute = false;
    std::optional<double> dt;
    std::optional<int> resolution;
};

// Runs one subcommand on an already-parsed config. Primary output goes to
// options.out when set, else to `out`; diagnostics go to `err`.
int run_command(const Options& options, const nlohmann::json& config, std::ostream& out, std::ostream& err);

// Full command line: swimgait <subcommand> --config <path> [flags].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swimgait::cli

#endif
