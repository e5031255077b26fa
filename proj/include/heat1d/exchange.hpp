#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "heat1d/channel.hpp"
#include "heat1d/config.hpp"
#include "heat1d/partition.hpp"

namespace heat1d {

/// One boundary cell value travelling to a neighbouring segment.
struct GhostMessage {
    double value = 0.0;
    std::optional<std::uint64_t> step_tag;  // only set in validate mode
};

using GhostProducer = Producer<GhostMessage>;
using GhostConsumer = Consumer<GhostMessage>;

inline constexpr std::size_t default_channel_capacity = 4;

/// The four channel endpoints owned by one segment.
struct SegmentLinks {
    GhostProducer send_left;
    GhostProducer send_right;
    GhostConsumer recv_left;
    GhostConsumer recv_right;

    void close() noexcept {
        send_left.close();
        send_right.close();
        recv_left.close();
        recv_right.close();
    }
};

/// Wires 2*segments channels into a ring: segment i's send_right feeds
/// segment (i+1)'s recv_left and its send_left feeds segment (i-1)'s
/// recv_right. With one segment both channels loop back to itself.
std::vector<SegmentLinks> make_ring(std::size_t segments, std::size_t capacity = default_channel_capacity);

struct ExchangeOptions {
    std::size_t capacity = default_channel_capacity;
    /// Called by each worker at the top of every step (segment index, step).
    /// Tests use it to inject delays.
    std::function<void(std::size_t, std::size_t)> step_hook;
};

/// Per-run exchange bookkeeping, indexed by segment.
struct ExchangeStats {
    std::vector<std::size_t> sent_left;
    std::vector<std::size_t> sent_right;
};

/// Advances one segment `steps` times. `buffer_a` holds u(t0) on entry; both
/// buffers span the whole grid but only the segment's slice is touched.
/// Neighbour values arrive exclusively through `links`. Per step the order
/// is fixed: send both boundaries, update the interior, receive the right
/// ghost and update the right edge, receive the left ghost and update the
/// left edge.
void run_segment(const Segment& segment, SegmentLinks& links, const SolverConfig& config,
                 std::span<double> buffer_a, std::span<double> buffer_b, std::size_t steps,
                 std::size_t segment_index = 0,
                 const std::function<void(std::size_t, std::size_t)>& step_hook = {});

/// Runs the full queue-based solve over `threads` forked workers. The final
/// state lands in buffer_a when steps is even and in buffer_b otherwise.
ExchangeStats run_queues(const SolverConfig& config, std::span<double> buffer_a, std::span<double> buffer_b,
                         const ExchangeOptions& options = {});

}  // namespace heat1d
