#include "heat1d/analysis/classify.hpp"

#include <algorithm>

namespace heat1d::analysis {

double to_unit_interval(double value, double lo, double hi) noexcept {
    if (hi == lo) return 0.0;
    return -1.0 + 2.0 * (value - lo) / (hi - lo);
}

std::vector<ClassificationPoint> classify(std::span<const ClassificationInput> entries) {
    std::vector<ClassificationPoint> points;
    if (entries.empty()) return points;

    const auto [effort_lo, effort_hi] = std::minmax_element(
        entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.effort_months < b.effort_months; });
    const auto [time_lo, time_hi] = std::minmax_element(
        entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.t_average < b.t_average; });
    // Speed score is -t_average: the slowest run is the minimum score.
    const double speed_lo = -time_hi->t_average;
    const double speed_hi = -time_lo->t_average;

    points.reserve(entries.size());
    for (const auto& e : entries) {
        points.push_back({e.label, to_unit_interval(e.effort_months, effort_lo->effort_months, effort_hi->effort_months),
                          to_unit_interval(-e.t_average, speed_lo, speed_hi)});
    }
    return points;
}

}  // namespace heat1d::analysis
