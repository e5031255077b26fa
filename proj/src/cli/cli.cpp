#include "heat1d/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "heat1d/analysis/classify.hpp"
#include "heat1d/analysis/cocomo.hpp"
#include "heat1d/analysis/loc.hpp"
#include "heat1d/analysis/report.hpp"
#include "heat1d/bench.hpp"
#include "heat1d/errors.hpp"
#include "heat1d/solver.hpp"

namespace heat1d::cli {

namespace {

struct SolverFlags {
    std::string strategy = std::string(to_string(SolverConfig{}.strategy));
    bool paper_denominator = false;
};

void add_solver_options(CLI::App& app, Command& cmd, SolverFlags& flags, bool with_threads) {
    app.add_option("--nodes", cmd.config.nodes, "Number of grid cells")->check(CLI::PositiveNumber);
    app.add_option("--steps", cmd.config.steps, "Number of time steps")->check(CLI::NonNegativeNumber);
    if (with_threads)
        app.add_option("--threads", cmd.config.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--alpha", cmd.config.alpha, "Diffusivity")->check(CLI::NonNegativeNumber);
    app.add_option("--dt", cmd.config.dt, "Time step")->check(CLI::PositiveNumber);
    app.add_option("--dx", cmd.config.dx, "Grid spacing")->check(CLI::PositiveNumber);
    app.add_option("--strategy", flags.strategy, "sequential | barrier | queues")
        ->check(CLI::IsMember({"sequential", "barrier", "queues"}));
    app.add_flag("--paper-denominator", flags.paper_denominator, "Divide the Laplacian by 2*dx instead of dx^2");
    app.add_flag("--allow-unstable", cmd.config.allow_unstable, "Run even if dt*alpha/D > 0.5");
    app.add_flag("--validate", cmd.config.validate, "Tag ghost messages and check conservation");
}

void add_bench_options(CLI::App& app, Command& cmd) {
    app.add_option("--repetitions", cmd.repetitions, "Timed runs per thread count")->check(CLI::PositiveNumber);
    app.add_option("--warmup", cmd.warmup, "Untimed runs per thread count")->check(CLI::NonNegativeNumber);
    app.add_option("--output", cmd.output, "CSV file for the records");
    app.add_flag("--append", cmd.append, "Append to --output instead of overwriting");
}

std::vector<analysis::ClassificationInput> read_efforts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("{}: cannot open for reading", path.string()));
    std::vector<analysis::ClassificationInput> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line_no == 1) continue;  // header: label,effort_months
        const auto comma = line.rfind(',');
        if (comma == std::string::npos) throw IoError(fmt::format("{}:{}: expected label,effort_months", path.string(), line_no));
        const std::string_view number(line.data() + comma + 1, line.size() - comma - 1);
        double effort = 0.0;
        const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), effort);
        if (ec != std::errc() || ptr != number.data() + number.size())
            throw IoError(fmt::format("{}:{}: bad effort value '{}'", path.string(), line_no, number));
        rows.push_back({line.substr(0, comma), effort, 0.0});
    }
    return rows;
}

void write_json_lines(std::ostream& out, const nlohmann::json& row) { out << row.dump() << '\n'; }

void run_solve(const Command& cmd, std::ostream& out) {
    const Field field = solve(cmd.config);
    const auto u = field.current();
    const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    const double heat = total_heat(field);
    out << fmt::format("strategy={} threads={} nodes={} steps={} min={} max={} mean={} total_heat={}\n",
                       to_string(cmd.config.strategy), cmd.config.threads, cmd.config.nodes, field.step(), *lo, *hi,
                       heat / static_cast<double>(u.size()), heat);
    if (cmd.dump_field) {
        std::ofstream dump(*cmd.dump_field, std::ios::trunc);
        if (!dump) throw IoError(fmt::format("{}: cannot open for writing", cmd.dump_field->string()));
        for (double v : u) dump << fmt::format("{}\n", v);
        dump.flush();
        if (!dump) throw IoError(fmt::format("{}: write failed", cmd.dump_field->string()));
    }
}

void run_bench(const Command& cmd, std::ostream& out) {
    SweepPlan plan;
    plan.thread_list = cmd.subcommand == Subcommand::sweep ? cmd.thread_list
                                                           : std::vector<std::size_t>{cmd.config.threads};
    plan.repetitions = cmd.repetitions;
    plan.warmup = cmd.warmup;
    for (std::size_t t : plan.thread_list) {
        if (t > cmd.config.nodes && cmd.config.strategy != Strategy::sequential)
            throw ConfigError(fmt::format("thread count {} exceeds nodes ({})", t, cmd.config.nodes));
    }
    const auto records = sweep(cmd.config, plan, [&](const BenchRecord& r) { out << summary_line(r) << '\n'; });
    if (cmd.output) write_csv(records, *cmd.output, cmd.append);
}

void run_analyze(const Command& cmd, std::ostream& out) {
    std::vector<BenchRecord> records;
    for (const auto& input : cmd.inputs) {
        auto rows = read_csv(input);
        records.insert(records.end(), rows.begin(), rows.end());
    }
    std::ofstream report;
    if (cmd.output) {
        report.open(*cmd.output, std::ios::trunc);
        if (!report) throw IoError(fmt::format("{}: cannot open for writing", cmd.output->string()));
    }

    const auto fits = analysis::fit_by_label(records);
    out << fmt::format("{:<16} {:>8} {:>14} {:>14} {:>10}\n", "strategy", "samples", "serial_s", "parallel_s", "r_squared");
    for (const auto& f : fits) {
        out << fmt::format("{:<16} {:>8} {:>14.6f} {:>14.6f} {:>10.6f}\n", f.label, f.samples, f.fit.serial_s,
                           f.fit.parallel_s, f.fit.r_squared);
        if (report.is_open())
            write_json_lines(report, {{"kind", "fit"},
                                      {"label", f.label},
                                      {"samples", f.samples},
                                      {"serial_s", f.fit.serial_s},
                                      {"parallel_s", f.fit.parallel_s},
                                      {"r_squared", f.fit.r_squared}});
    }
    for (const auto& label : analysis::labels_of(records)) {
        if (std::none_of(fits.begin(), fits.end(), [&](const auto& f) { return f.label == label; }))
            out << fmt::format("{:<16} (not fitted: fewer than two distinct thread counts)\n", label);
    }

    // Speed score per label: mean over the configured thread counts.
    std::map<std::string, double> speed;
    for (const auto& label : analysis::labels_of(records)) {
        double sum = 0.0;
        bool complete = true;
        for (std::size_t t : cmd.average_threads) {
            const auto mean = analysis::mean_elapsed(records, label, t);
            if (!mean) {
                complete = false;
                break;
            }
            sum += *mean;
        }
        if (complete) speed[label] = sum / static_cast<double>(cmd.average_threads.size());
    }
    for (const auto& [label, t] : speed) out << fmt::format("t_average {:<16} {:.6f}\n", label, t);

    if (!cmd.efforts) return;
    std::vector<analysis::ClassificationInput> entries;
    for (auto& row : read_efforts(*cmd.efforts)) {
        const auto it = speed.find(row.label);
        if (it == speed.end()) {
            out << fmt::format("classification: no t_average for '{}', skipped\n", row.label);
            continue;
        }
        row.t_average = it->second;
        entries.push_back(std::move(row));
    }
    for (const auto& p : analysis::classify(entries)) {
        out << fmt::format("classify {:<16} x={:.6f} y={:.6f}\n", p.label, p.x, p.y);
        if (report.is_open())
            write_json_lines(report, {{"kind", "classification"}, {"label", p.label}, {"x", p.x}, {"y", p.y}});
    }
}

void run_metrics(const Command& cmd, std::ostream& out) {
    if (!std::filesystem::exists(cmd.source_path))
        throw IoError(fmt::format("{}: no such file or directory", cmd.source_path.string()));
    const auto report = analysis::count_loc(cmd.source_path);
    out << fmt::format("{:>8} {:>8} {:>8}  {}\n", "code", "comment", "blank", "file");
    for (const auto& f : report.files) {
        out << fmt::format("{:>8} {:>8} {:>8}  {}\n", f.counts.code, f.counts.comment, f.counts.blank,
                           f.path.lexically_relative(cmd.source_path).string());
    }
    for (const auto& [path, reason] : report.skipped) out << fmt::format("skipped {}: {}\n", path.string(), reason);
    const auto total = report.total();
    out << fmt::format("{:>8} {:>8} {:>8}  total ({} files)\n", total.code, total.comment, total.blank,
                       report.files.size());
    const auto estimate = analysis::cocomo(total.code);
    out << fmt::format("cocomo organic: kloc={:.3f} effort_pm={:.4f} schedule_months={:.4f}\n", estimate.kloc,
                       estimate.effort_pm, estimate.schedule_months);
}

}  // namespace

Command parse_args(std::span<const std::string> args) {
    Command cmd;
    SolverFlags flags;

    CLI::App app{"Parallel 1D heat equation benchmark suite", args.empty() ? "heat1d" : args[0]};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "Run the solver and summarise the final field");
    add_solver_options(*solve, cmd, flags, true);
    solve->add_option("--dump-field", cmd.dump_field, "Write the final field, one value per line");

    auto* bench = app.add_subcommand("bench", "Time repeated runs at one thread count");
    add_solver_options(*bench, cmd, flags, true);
    add_bench_options(*bench, cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Time runs over a list of thread counts");
    add_solver_options(*sweep_cmd, cmd, flags, false);
    add_bench_options(*sweep_cmd, cmd);
    sweep_cmd->add_option("--thread-list", cmd.thread_list, "Comma-separated thread counts")
        ->delimiter(',')
        ->required()
        ->check(CLI::PositiveNumber);

    auto* analyze = app.add_subcommand("analyze", "Fit scaling curves and classify approaches");
    analyze->add_option("--input", cmd.inputs, "Benchmark CSV (repeatable)")->required()->check(CLI::ExistingFile);
    analyze->add_option("--output", cmd.output, "JSON-lines report file");
    analyze->add_option("--efforts", cmd.efforts, "CSV of label,effort_months")->check(CLI::ExistingFile);
    analyze->add_option("--average-threads", cmd.average_threads, "Thread counts averaged into t_average")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    auto* metrics = app.add_subcommand("metrics", "Count source lines and estimate COCOMO effort");
    metrics->add_option("--path", cmd.source_path, "Source file or directory")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("heat1d");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto* selected = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        throw UsageError("help requested", selected->help(), true);
    } catch (const CLI::ParseError& e) {
        const auto* selected = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        throw UsageError(e.what(), selected->help());
    }

    if (solve->parsed())
        cmd.subcommand = Subcommand::solve;
    else if (bench->parsed())
        cmd.subcommand = Subcommand::bench;
    else if (sweep_cmd->parsed())
        cmd.subcommand = Subcommand::sweep;
    else if (analyze->parsed())
        cmd.subcommand = Subcommand::analyze;
    else
        cmd.subcommand = Subcommand::metrics;

    cmd.config.strategy = *parse_strategy(flags.strategy);
    cmd.config.denominator_mode = flags.paper_denominator ? DenominatorMode::paper_literal : DenominatorMode::squared;
    if (cmd.subcommand == Subcommand::analyze && cmd.average_threads.empty())
        throw UsageError("--average-threads: needs at least one thread count", analyze->help());
    return cmd;
}

void run(const Command& cmd, std::ostream& out) {
    switch (cmd.subcommand) {
        case Subcommand::solve: run_solve(cmd, out); break;
        case Subcommand::bench:
        case Subcommand::sweep: run_bench(cmd, out); break;
        case Subcommand::analyze: run_analyze(cmd, out); break;
        case Subcommand::metrics: run_metrics(cmd, out); break;
    }
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Command cmd;
    try {
        cmd = parse_args(args);
    } catch (const UsageError& e) {
        if (e.help()) {
            out << e.usage();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n\n" << e.usage();
        return exit_usage;
    }
    try {
        run(cmd, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_ok;
}

}  // namespace heat1d::cli
