#pragma once

#include "heat1d/config.hpp"

namespace heat1d {

/// Three-point explicit Euler update with the coefficient dt*alpha/D folded
/// once. Every strategy goes through this type so all of them evaluate the
/// same expression for each cell.
class Stencil {
public:
    explicit Stencil(const SolverConfig& config) noexcept
        : coefficient_(config.dt * config.alpha / config.denominator()) {}

    double operator()(double left, double mid, double right) const noexcept {
        return mid + coefficient_ * (left - 2.0 * mid + right);
    }

    double coefficient() const noexcept { return coefficient_; }

private:
    double coefficient_;
};

inline double stencil_update(double left, double mid, double right, const SolverConfig& config) noexcept {
    return Stencil(config)(left, mid, right);
}

}  // namespace heat1d
