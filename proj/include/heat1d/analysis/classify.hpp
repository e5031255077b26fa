#pragma once

#include <span>
#include <string>
#include <vector>

namespace heat1d::analysis {

/// Mean elapsed time at 2, 20 and 40 threads; the speed score of an approach.
struct AverageTime {
    double t2 = 0.0;
    double t20 = 0.0;
    double t40 = 0.0;

    double t_average() const noexcept { return (t2 + t20 + t40) / 3.0; }
};

inline double t_average(double t2, double t20, double t40) noexcept { return AverageTime{t2, t20, t40}.t_average(); }

struct ClassificationInput {
    std::string label;
    double effort_months = 0.0;
    double t_average = 0.0;
};

/// x runs easy (-1) to difficult (+1); y runs slow (-1) to fast (+1).
struct ClassificationPoint {
    std::string label;
    double x = 0.0;
    double y = 0.0;
};

/// Linear map of [lo, hi] onto [-1, 1]; a degenerate range maps to 0.
double to_unit_interval(double value, double lo, double hi) noexcept;

/// Effort maps to x directly. Speed maps to y through -t_average, so the
/// fastest entry lands on +1.
std::vector<ClassificationPoint> classify(std::span<const ClassificationInput> entries);

}  // namespace heat1d::analysis
