#pragma once

#include "heat1d/config.hpp"
#include "heat1d/exchange.hpp"
#include "heat1d/field.hpp"
#include "heat1d/stencil.hpp"

namespace heat1d {

/// One periodic sweep over the whole grid, then swap.
void sweep_sequential(Field& field, const SolverConfig& config);

/// Applies config.steps sweeps to `field` with the configured strategy.
/// Queue runs return channel statistics; other strategies return empty stats.
ExchangeStats advance(Field& field, const SolverConfig& config, const ExchangeOptions& options = {});

/// init_field followed by advance.
Field solve(const SolverConfig& config);

}  // namespace heat1d
