#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "heat1d/config.hpp"

namespace heat1d::cli {

enum class Subcommand { solve, bench, sweep, analyze, metrics };

struct Command {
    Subcommand subcommand = Subcommand::solve;
    SolverConfig config;

    // bench / sweep
    std::size_t repetitions = 5;
    std::size_t warmup = 1;
    std::vector<std::size_t> thread_list;
    std::optional<std::filesystem::path> output;
    bool append = false;

    // solve
    std::optional<std::filesystem::path> dump_field;

    // analyze
    std::vector<std::filesystem::path> inputs;
    std::optional<std::filesystem::path> efforts;
    std::vector<std::size_t> average_threads{2, 20, 40};

    // metrics
    std::filesystem::path source_path;
};

/// Bad command line. `help` is set when the user asked for help rather
/// than made a mistake.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& message, std::string usage, bool help = false)
        : std::runtime_error(message), usage_(std::move(usage)), help_(help) {}

    const std::string& usage() const noexcept { return usage_; }
    bool help() const noexcept { return help_; }

private:
    std::string usage_;
    bool help_;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_runtime = 2;

/// `args` includes the program name.
Command parse_args(std::span<const std::string> args);

/// Executes a parsed command. Runtime failures propagate as exceptions.
void run(const Command& command, std::ostream& out);

/// parse_args + run with the exit-status contract: 0 success, 1 usage
/// error, 2 runtime error.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace heat1d::cli
