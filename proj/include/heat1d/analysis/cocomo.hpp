#pragma once

#include <cstddef>

namespace heat1d::analysis {

/// Basic COCOMO: effort = a * KLOC^b person-months, schedule = c * effort^d months.
struct CocomoCoefficients {
    double a;
    double b;
    double c;
    double d;
};

inline constexpr CocomoCoefficients organic{2.4, 1.05, 2.5, 0.38};

struct CocomoEstimate {
    std::size_t loc = 0;
    double kloc = 0.0;
    double effort_pm = 0.0;
    double schedule_months = 0.0;
};

CocomoEstimate cocomo(std::size_t loc, const CocomoCoefficients& coefficients = organic);

}  // namespace heat1d::analysis
