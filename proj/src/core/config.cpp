#include "heat1d/config.hpp"

#include <cmath>

#include <fmt/format.h>

#include "heat1d/errors.hpp"

namespace heat1d {

std::string_view to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::sequential: return "sequential";
        case Strategy::barrier: return "barrier";
        case Strategy::queues: return "queues";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view text) noexcept {
    if (text == "sequential") return Strategy::sequential;
    if (text == "barrier") return Strategy::barrier;
    if (text == "queues") return Strategy::queues;
    return std::nullopt;
}

void validate_config(const SolverConfig& config) {
    if (config.nodes == 0) throw ConfigError("nodes must be at least 1");
    if (config.threads == 0) throw ConfigError("threads must be at least 1");
    if (!std::isfinite(config.alpha) || config.alpha < 0.0)
        throw ConfigError(fmt::format("alpha must be finite and non-negative, got {}", config.alpha));
    if (!std::isfinite(config.dt) || config.dt <= 0.0)
        throw ConfigError(fmt::format("dt must be finite and positive, got {}", config.dt));
    if (!std::isfinite(config.dx) || config.dx <= 0.0)
        throw ConfigError(fmt::format("dx must be finite and positive, got {}", config.dx));
    if (config.strategy != Strategy::sequential && config.threads > config.nodes)
        throw ConfigError(fmt::format("threads ({}) exceeds nodes ({})", config.threads, config.nodes));
    if (!config.stable() && !config.allow_unstable)
        throw ConfigError(fmt::format(
            "unstable time step: dt*alpha/D = {} exceeds 0.5 (pass --allow-unstable to run anyway)",
            config.diffusion_number()));
}

}  // namespace heat1d
