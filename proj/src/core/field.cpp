#include "heat1d/field.hpp"

#include <numeric>

namespace heat1d {

Field init_field(const SolverConfig& config) {
    Field field(config.nodes);
    auto u = field.current();
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = static_cast<double>(i) * config.dx;
    return field;
}

double total_heat(const Field& field) noexcept {
    const auto u = field.current();
    return std::accumulate(u.begin(), u.end(), 0.0);
}

}  // namespace heat1d
