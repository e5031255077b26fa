#include "heat1d/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "heat1d/errors.hpp"
#include "heat1d/field.hpp"
#include "heat1d/solver.hpp"

namespace heat1d {

double cells_per_second(std::size_t nodes, std::size_t steps, double elapsed_s) noexcept {
    return static_cast<double>(nodes) * static_cast<double>(steps) / elapsed_s;
}

BenchRecord make_record(const SolverConfig& config, std::size_t repetition, double elapsed_s) {
    BenchRecord r;
    r.strategy = std::string(to_string(config.strategy));
    r.threads = config.threads;
    r.nodes = config.nodes;
    r.steps = config.steps;
    r.alpha = config.alpha;
    r.dt = config.dt;
    r.dx = config.dx;
    r.repetition = repetition;
    r.elapsed_s = elapsed_s;
    r.cells_per_s = cells_per_second(config.nodes, config.steps, elapsed_s);
    return r;
}

BenchRecord timed_run(const SolverConfig& config, std::size_t repetition) {
    if (config.steps == 0) throw ConfigError("benchmark runs need steps > 0");
    validate_config(config);

    Field field = init_field(config);
    const auto start = std::chrono::steady_clock::now();
    advance(field, config);
    const auto stop = std::chrono::steady_clock::now();

    double elapsed = std::chrono::duration<double>(stop - start).count();
    // Never report a zero interval, whatever the clock granularity.
    elapsed = std::max(elapsed, std::chrono::duration<double>(std::chrono::steady_clock::duration(1)).count());
    return make_record(config, repetition, elapsed);
}

std::vector<BenchRecord> sweep(const SolverConfig& base, const SweepPlan& plan,
                               const std::function<void(const BenchRecord&)>& on_record) {
    if (plan.thread_list.empty()) throw std::invalid_argument("thread list must not be empty");
    if (plan.repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");

    std::vector<BenchRecord> records;
    records.reserve(plan.thread_list.size() * plan.repetitions);
    for (std::size_t threads : plan.thread_list) {
        SolverConfig config = base;
        config.threads = threads;
        for (std::size_t w = 0; w < plan.warmup; ++w) timed_run(config, w);
        for (std::size_t rep = 0; rep < plan.repetitions; ++rep) {
            records.push_back(timed_run(config, rep));
            if (on_record) on_record(records.back());
        }
    }
    return records;
}

void write_csv_rows(std::span<const BenchRecord> records, std::ostream& out) {
    for (const auto& r : records) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.strategy, r.threads, r.nodes, r.steps, r.alpha,
                           r.dt, r.dx, r.repetition, r.elapsed_s, r.cells_per_s);
    }
}

void write_csv(std::span<const BenchRecord> records, const std::filesystem::path& path, bool append) {
    std::error_code ec;
    const bool has_content = append && std::filesystem::exists(path, ec) && std::filesystem::file_size(path, ec) > 0;

    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out) throw IoError(fmt::format("{}: cannot open for writing", path.string()));
    if (!has_content) out << csv_header << '\n';
    write_csv_rows(records, out);
    out.flush();
    if (!out) throw IoError(fmt::format("{}: write failed", path.string()));
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        parts.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view source, std::size_t line, std::string_view column) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw IoError(fmt::format("{}:{}: bad {} value '{}'", source, line, column, text));
    return value;
}

}  // namespace

std::vector<BenchRecord> read_csv(std::istream& in, std::string_view source) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<BenchRecord> records;
    bool seen_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!seen_header) {
            if (line != csv_header) throw IoError(fmt::format("{}:{}: unexpected CSV header", source, line_no));
            seen_header = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 10)
            throw IoError(fmt::format("{}:{}: expected 10 fields, found {}", source, line_no, f.size()));
        BenchRecord r;
        r.strategy = std::string(f[0]);
        r.threads = parse_number<std::size_t>(f[1], source, line_no, "threads");
        r.nodes = parse_number<std::size_t>(f[2], source, line_no, "nodes");
        r.steps = parse_number<std::size_t>(f[3], source, line_no, "steps");
        r.alpha = parse_number<double>(f[4], source, line_no, "alpha");
        r.dt = parse_number<double>(f[5], source, line_no, "dt");
        r.dx = parse_number<double>(f[6], source, line_no, "dx");
        r.repetition = parse_number<std::size_t>(f[7], source, line_no, "repetition");
        r.elapsed_s = parse_number<double>(f[8], source, line_no, "elapsed_s");
        r.cells_per_s = parse_number<double>(f[9], source, line_no, "cells_per_s");
        records.push_back(std::move(r));
    }
    if (in.bad()) throw IoError(fmt::format("{}: read failed", source));
    return records;
}

std::vector<BenchRecord> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("{}: cannot open for reading", path.string()));
    return read_csv(in, path.string());
}

std::string summary_line(const BenchRecord& r) {
    return fmt::format("{:<10} threads={:<3} nodes={} steps={} rep={} elapsed_s={:.6f} cells_per_s={:.4e}",
                       r.strategy, r.threads, r.nodes, r.steps, r.repetition, r.elapsed_s, r.cells_per_s);
}

}  // namespace heat1d
