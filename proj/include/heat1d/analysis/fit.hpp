#pragma once

#include <span>

namespace heat1d::analysis {

struct ScalingSample {
    double threads = 1.0;
    double elapsed_s = 0.0;
};

/// Least-squares fit of t(p) = serial_s + parallel_s / p.
struct FitResult {
    double serial_s = 0.0;
    double parallel_s = 0.0;
    double r_squared = 1.0;
};

/// Coefficient of determination 1 - SS_res / SS_tot. Returns 1 when both
/// sums vanish and -inf when only SS_tot does.
double r_squared(std::span<const double> observed, std::span<const double> predicted);

/// Closed-form fit in the regressor 1/p. Throws DegenerateFit unless at
/// least two distinct thread counts are present.
FitResult fit_scaling(std::span<const ScalingSample> samples);

inline double predict(const FitResult& fit, double threads) noexcept {
    return fit.serial_s + fit.parallel_s / threads;
}

}  // namespace heat1d::analysis
