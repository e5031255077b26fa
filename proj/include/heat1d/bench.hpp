#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heat1d/config.hpp"

namespace heat1d {

/// One timed solver run.
struct BenchRecord {
    std::string strategy;
    std::size_t threads = 0;
    std::size_t nodes = 0;
    std::size_t steps = 0;
    double alpha = 0.0;
    double dt = 0.0;
    double dx = 0.0;
    std::size_t repetition = 0;
    double elapsed_s = 0.0;
    double cells_per_s = 0.0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view csv_header =
    "strategy,threads,nodes,steps,alpha,dt,dx,repetition,elapsed_s,cells_per_s";

/// nodes * steps / elapsed_s.
double cells_per_second(std::size_t nodes, std::size_t steps, double elapsed_s) noexcept;

BenchRecord make_record(const SolverConfig& config, std::size_t repetition, double elapsed_s);

/// Times advance() on a freshly initialised field. Allocation and
/// initialisation are outside the timed region. Rejects steps == 0.
BenchRecord timed_run(const SolverConfig& config, std::size_t repetition = 0);

struct SweepPlan {
    std::vector<std::size_t> thread_list;
    std::size_t repetitions = 5;
    std::size_t warmup = 1;
};

/// For each thread count: `warmup` discarded runs, then `repetitions` timed
/// runs. Records come back in execution order; `on_record` sees each one as
/// soon as it is measured.
std::vector<BenchRecord> sweep(const SolverConfig& base, const SweepPlan& plan,
                               const std::function<void(const BenchRecord&)>& on_record = {});

void write_csv_rows(std::span<const BenchRecord> records, std::ostream& out);

/// Writes records to `path`. The header is emitted only when the file is
/// created (or was empty); appending never repeats it.
void write_csv(std::span<const BenchRecord> records, const std::filesystem::path& path, bool append);

std::vector<BenchRecord> read_csv(std::istream& in, std::string_view source = "<stream>");
std::vector<BenchRecord> read_csv(const std::filesystem::path& path);

/// Human-readable single line for stdout.
std::string summary_line(const BenchRecord& record);

}  // namespace heat1d
