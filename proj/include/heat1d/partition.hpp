#pragma once

#include <cstddef>
#include <vector>

namespace heat1d {

struct Segment {
    std::size_t start = 0;
    std::size_t length = 0;

    std::size_t end() const noexcept { return start + length; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Contiguous split of [0, nodes) into `threads` segments. The first
/// nodes % threads segments carry one extra cell.
class Partition {
public:
    Partition(std::size_t nodes, std::size_t threads);

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }
    const Segment& operator[](std::size_t i) const { return segments_[i]; }

private:
    std::vector<Segment> segments_;
};

/// Throws PartitionError when threads > nodes or either is zero.
Partition make_partition(std::size_t nodes, std::size_t threads);

}  // namespace heat1d
