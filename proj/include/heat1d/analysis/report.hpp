#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heat1d/analysis/fit.hpp"
#include "heat1d/bench.hpp"

namespace heat1d::analysis {

struct LabelledFit {
    std::string label;
    std::size_t samples = 0;
    FitResult fit;
};

/// Distinct strategy labels in first-appearance order.
std::vector<std::string> labels_of(std::span<const BenchRecord> records);

/// Fits every strategy label that has at least two distinct thread counts.
/// Labels that cannot be fitted are left out.
std::vector<LabelledFit> fit_by_label(std::span<const BenchRecord> records);

/// Mean elapsed_s over the records of `label` at exactly `threads`.
std::optional<double> mean_elapsed(std::span<const BenchRecord> records, const std::string& label,
                                   std::size_t threads);

}  // namespace heat1d::analysis
