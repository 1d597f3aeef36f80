#pragma once

#include <liquidation/rng.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace liquidation {

/// Keyed driving noise: every increment is a pure function of
/// (seed, path index, step index, channel).
struct NoisePlan {
    std::uint64_t seed = 0;
    int n_steps = 0;
    int n_paths = 0;
    double correlation = 0.0;

    void check() const
    {
        if (n_steps < 2) throw std::invalid_argument("n_steps must be >= 2");
        if (n_paths < 1) throw std::invalid_argument("n_paths must be >= 1");
        if (!(correlation >= -1.0 && correlation <= 1.0))
            throw std::invalid_argument("correlation must lie in [-1, 1]");
    }
};

/// Brownian increments for one step: Var = dt each, corr(dW, dZ) = rho,
/// dB independent of both.
struct Increments {
    double dW = 0.0;
    double dZ = 0.0;
    double dB = 0.0;
};

/// Standard normals behind one step, before scaling and correlation.
struct StepNormals {
    double w = 0.0;
    double perp = 0.0;
    double b = 0.0;
};

inline StepNormals draw_normals(std::uint64_t seed, std::uint64_t path, std::uint32_t step)
{
    const auto key = key_from_seed(seed);
    const auto lo = static_cast<std::uint32_t>(path);
    const auto hi = static_cast<std::uint32_t>(path >> 32);
    const auto first = normal_pair({lo, hi, step, 0u}, key);
    const auto second = normal_pair({lo, hi, step, 1u}, key);
    return {first[0], first[1], second[0]};
}

inline Increments draw_increments(const NoisePlan& plan, std::uint64_t path, std::uint32_t step, double dt)
{
    const StepNormals n = draw_normals(plan.seed, path, step);
    const double sd = std::sqrt(dt);
    const double rho = plan.correlation;
    const double dW = sd * n.w;
    return {dW, rho * dW + std::sqrt(1.0 - rho * rho) * sd * n.perp, sd * n.b};
}

} // namespace liquidation
