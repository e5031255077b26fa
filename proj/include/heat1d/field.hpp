#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "heat1d/config.hpp"

namespace heat1d {

/// Double-buffered temperature field. `current` holds u(t), `next` receives u(t + dt).
class Field {
public:
    explicit Field(std::size_t nodes) : current_(nodes, 0.0), next_(nodes, 0.0) {}

    std::size_t size() const noexcept { return current_.size(); }
    std::size_t step() const noexcept { return step_; }

    std::span<const double> current() const noexcept { return current_; }
    std::span<double> current() noexcept { return current_; }
    std::span<double> next() noexcept { return next_; }

    /// Makes `next` the current state and advances the step counter by `count`.
    void commit(std::size_t count = 1) noexcept {
        std::swap(current_, next_);
        step_ += count;
    }

    /// Accounts for `count` sweeps done by workers that swap their own views
    /// of the two buffers: the result sits in `next` iff count is odd.
    void commit_sweeps(std::size_t count) noexcept {
        if (count % 2 == 1) std::swap(current_, next_);
        step_ += count;
    }

    double* current_data() noexcept { return current_.data(); }
    double* next_data() noexcept { return next_.data(); }

private:
    std::vector<double> current_;
    std::vector<double> next_;
    std::size_t step_ = 0;
};

/// u(0, x_i) = x_i = i * dx.
Field init_field(const SolverConfig& config);

/// Sum of the current values.
double total_heat(const Field& field) noexcept;

}  // namespace heat1d
