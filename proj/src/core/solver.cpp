#include "heat1d/solver.hpp"

#include <barrier>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "heat1d/errors.hpp"
#include "heat1d/partition.hpp"

namespace heat1d {

namespace {

// Updates cells [begin, end) of `next` from `cur` with periodic wrap-around.
void sweep_range(const Stencil& stencil, const double* cur, double* next, std::size_t n, std::size_t begin,
                 std::size_t end) {
    if (begin >= end) return;
    if (n == 1) {
        next[0] = stencil(cur[0], cur[0], cur[0]);
        return;
    }
    std::size_t i = begin;
    if (i == 0) {
        next[0] = stencil(cur[n - 1], cur[0], cur[1]);
        ++i;
    }
    const std::size_t inner_end = end == n ? n - 1 : end;
    for (; i < inner_end; ++i) next[i] = stencil(cur[i - 1], cur[i], cur[i + 1]);
    if (end == n && i == n - 1) next[n - 1] = stencil(cur[n - 2], cur[n - 1], cur[0]);
}

void run_barrier(const SolverConfig& config, Field& field) {
    const Partition partition = make_partition(config.nodes, config.threads);
    const Stencil stencil(config);
    const std::size_t n = config.nodes;
    double* const a = field.current_data();
    double* const b = field.next_data();
    std::barrier sync(static_cast<std::ptrdiff_t>(partition.size()));

    auto worker = [&](const Segment seg) {
        double* cur = a;
        double* next = b;
        for (std::size_t step = 0; step < config.steps; ++step) {
            sweep_range(stencil, cur, next, n, seg.start, seg.end());
            sync.arrive_and_wait();
            std::swap(cur, next);
        }
    };

    std::vector<std::jthread> workers;
    workers.reserve(partition.size());
    for (std::size_t i = 1; i < partition.size(); ++i) workers.emplace_back(worker, partition[i]);
    worker(partition[0]);
    workers.clear();
    field.commit_sweeps(config.steps);
}

double absolute_heat(const Field& field) {
    double sum = 0.0;
    for (double v : field.current()) sum += std::abs(v);
    return sum;
}

}  // namespace

void sweep_sequential(Field& field, const SolverConfig& config) {
    const Stencil stencil(config);
    sweep_range(stencil, field.current_data(), field.next_data(), field.size(), 0, field.size());
    field.commit();
}

ExchangeStats advance(Field& field, const SolverConfig& config, const ExchangeOptions& options) {
    validate_config(config);
    if (field.size() != config.nodes)
        throw ConfigError(fmt::format("field has {} cells, config expects {}", field.size(), config.nodes));

    const bool check_heat = config.validate && config.stable();
    const double heat_before = check_heat ? total_heat(field) : 0.0;
    const double heat_scale = check_heat ? absolute_heat(field) : 0.0;

    ExchangeStats stats;
    switch (config.strategy) {
        case Strategy::sequential:
            for (std::size_t s = 0; s < config.steps; ++s) sweep_sequential(field, config);
            break;
        case Strategy::barrier:
            run_barrier(config, field);
            break;
        case Strategy::queues:
            stats = run_queues(config, std::span<double>(field.current_data(), field.size()),
                               std::span<double>(field.next_data(), field.size()), options);
            field.commit_sweeps(config.steps);
            break;
    }

    if (check_heat) {
        const double drift = std::abs(total_heat(field) - heat_before);
        if (drift > 1e-9 * heat_scale)
            throw ConservationError(fmt::format("total heat drifted by {} (initial {})", drift, heat_before));
    }
    return stats;
}

Field solve(const SolverConfig& config) {
    validate_config(config);
    Field field = init_field(config);
    advance(field, config);
    return field;
}

}  // namespace heat1d
