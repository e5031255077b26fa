#include "heat1d/analysis/cocomo.hpp"

#include <cmath>

namespace heat1d::analysis {

CocomoEstimate cocomo(std::size_t loc, const CocomoCoefficients& k) {
    CocomoEstimate e;
    e.loc = loc;
    e.kloc = static_cast<double>(loc) / 1000.0;
    if (loc == 0) return e;
    e.effort_pm = k.a * std::pow(e.kloc, k.b);
    e.schedule_months = k.c * std::pow(e.effort_pm, k.d);
    return e;
}

}  // namespace heat1d::analysis
