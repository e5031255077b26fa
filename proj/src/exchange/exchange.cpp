#include "heat1d/exchange.hpp"

#include <exception>
#include <thread>
#include <utility>

#include <fmt/format.h>

#include "heat1d/errors.hpp"
#include "heat1d/stencil.hpp"

namespace heat1d {

namespace {

double receive(GhostConsumer& from, bool validate, std::size_t step, const char* side) {
    GhostMessage msg = from.recv();
    if (validate && msg.step_tag != step) {
        throw ProtocolError(fmt::format("{} ghost for step {} carried tag {}", side, step,
                                        msg.step_tag ? fmt::to_string(*msg.step_tag) : "<none>"));
    }
    return msg.value;
}

GhostMessage tagged(double value, bool validate, std::size_t step) {
    GhostMessage msg{value, std::nullopt};
    if (validate) msg.step_tag = step;
    return msg;
}

}  // namespace

std::vector<SegmentLinks> make_ring(std::size_t segments, std::size_t capacity) {
    std::vector<SegmentLinks> links(segments);
    for (std::size_t i = 0; i < segments; ++i) {
        auto [to_right, from_left] = make_channel<GhostMessage>(capacity);
        links[i].send_right = std::move(to_right);
        links[(i + 1) % segments].recv_left = std::move(from_left);

        auto [to_left, from_right] = make_channel<GhostMessage>(capacity);
        links[i].send_left = std::move(to_left);
        links[(i + segments - 1) % segments].recv_right = std::move(from_right);
    }
    return links;
}

void run_segment(const Segment& segment, SegmentLinks& links, const SolverConfig& config,
                 std::span<double> buffer_a, std::span<double> buffer_b, std::size_t steps,
                 std::size_t segment_index, const std::function<void(std::size_t, std::size_t)>& step_hook) {
    const Stencil stencil(config);
    const bool validate = config.validate;
    const std::size_t first = segment.start;
    const std::size_t last = segment.end() - 1;
    double* cur = buffer_a.data();
    double* next = buffer_b.data();

    for (std::size_t step = 0; step < steps; ++step) {
        if (step_hook) step_hook(segment_index, step);

        links.send_left.send(tagged(cur[first], validate, step));
        links.send_right.send(tagged(cur[last], validate, step));

        for (std::size_t i = first + 1; i < last; ++i) next[i] = stencil(cur[i - 1], cur[i], cur[i + 1]);

        const double right_ghost = receive(links.recv_right, validate, step, "right");
        if (first == last) {
            const double left_ghost = receive(links.recv_left, validate, step, "left");
            next[first] = stencil(left_ghost, cur[first], right_ghost);
        } else {
            next[last] = stencil(cur[last - 1], cur[last], right_ghost);
            const double left_ghost = receive(links.recv_left, validate, step, "left");
            next[first] = stencil(left_ghost, cur[first], cur[first + 1]);
        }
        std::swap(cur, next);
    }
}

ExchangeStats run_queues(const SolverConfig& config, std::span<double> buffer_a, std::span<double> buffer_b,
                         const ExchangeOptions& options) {
    const Partition partition = make_partition(config.nodes, config.threads);
    const std::size_t count = partition.size();
    std::vector<SegmentLinks> links = make_ring(count, options.capacity);
    std::vector<std::exception_ptr> failures(count);

    auto worker = [&](std::size_t i) {
        try {
            run_segment(partition[i], links[i], config, buffer_a, buffer_b, config.steps, i, options.step_hook);
        } catch (...) {
            failures[i] = std::current_exception();
            // Unblocks neighbours; the disconnect cascades around the ring.
            links[i].close();
        }
    };

    {
        std::vector<std::jthread> workers;
        workers.reserve(count);
        for (std::size_t i = 1; i < count; ++i) workers.emplace_back(worker, i);
        worker(0);
    }

    // Report the root cause rather than a Disconnected it triggered elsewhere.
    std::exception_ptr disconnect;
    for (auto& failure : failures) {
        if (!failure) continue;
        try {
            std::rethrow_exception(failure);
        } catch (const Disconnected&) {
            if (!disconnect) disconnect = failure;
        } catch (...) {
            throw;
        }
    }
    if (disconnect) std::rethrow_exception(disconnect);

    ExchangeStats stats;
    stats.sent_left.reserve(count);
    stats.sent_right.reserve(count);
    for (const auto& l : links) {
        stats.sent_left.push_back(l.send_left.sent_count());
        stats.sent_right.push_back(l.send_right.sent_count());
    }
    return stats;
}

}  // namespace heat1d
