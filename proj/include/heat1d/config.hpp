#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace heat1d {

enum class Strategy { sequential, barrier, queues };

/// Which denominator the discrete Laplacian is divided by.
enum class DenominatorMode {
    squared,        ///< h^2, the standard central difference
    paper_literal,  ///< 2h, as the update is sometimes printed
};

std::string_view to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view text) noexcept;

struct SolverConfig {
    std::size_t nodes = 1'000'000;
    std::size_t steps = 1'000;
    std::size_t threads = 1;
    double alpha = 0.25;
    double dt = 1.0;
    double dx = 1.0;
    Strategy strategy = Strategy::queues;
    DenominatorMode denominator_mode = DenominatorMode::squared;
    bool validate = false;
    bool allow_unstable = false;

    double length() const noexcept { return static_cast<double>(nodes) * dx; }

    /// D in u' = u + dt*alpha*(l - 2u + r)/D.
    double denominator() const noexcept {
        return denominator_mode == DenominatorMode::squared ? dx * dx : 2.0 * dx;
    }

    /// Diffusion number dt*alpha/D. Equals the CFL number alpha*dt/dx^2 in squared mode.
    double diffusion_number() const noexcept { return dt * alpha / denominator(); }

    bool stable() const noexcept { return diffusion_number() <= 0.5; }
};

/// Throws ConfigError unless the configuration can be run.
void validate_config(const SolverConfig& config);

}  // namespace heat1d
