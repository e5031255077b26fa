#include "heat1d/partition.hpp"

#include <fmt/format.h>

#include "heat1d/errors.hpp"

namespace heat1d {

Partition::Partition(std::size_t nodes, std::size_t threads) {
    if (threads == 0) throw PartitionError("cannot partition into zero segments");
    if (threads > nodes)
        throw PartitionError(fmt::format("cannot split {} cells into {} non-empty segments", nodes, threads));

    const std::size_t base = nodes / threads;
    const std::size_t extra = nodes % threads;
    segments_.reserve(threads);
    std::size_t start = 0;
    for (std::size_t i = 0; i < threads; ++i) {
        const std::size_t length = base + (i < extra ? 1 : 0);
        segments_.push_back({start, length});
        start += length;
    }
}

Partition make_partition(std::size_t nodes, std::size_t threads) { return Partition(nodes, threads); }

}  // namespace heat1d
