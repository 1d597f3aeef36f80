#pragma once

// Explicit Euler-Maruyama integration of the holdings SDE
//   dy = -v dt + phi0 sqrt((T-t) v+) dW
// together with the execution-risk process H, dH = chi0 sqrt((T-t) v+) dZ,
// and the market / execution prices
//   S0(t) = S0 + mu t + gamma (y - Y) + psi B(t),   S(t) = S0(t) + kappa (H - v).

#include <liquidation/noise.hpp>
#include <liquidation/parallel.hpp>
#include <liquidation/params.hpp>
#include <liquidation/policy.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace liquidation {

/// Uniform grid t_k = k T / N with the last node pinned to T.
struct TimeGrid {
    double horizon = 0.0;
    int n_steps = 0;

    double dt() const { return horizon / n_steps; }
    double time(int k) const { return k == n_steps ? horizon : k * dt(); }
};

/// Square-root execution-risk magnitude c0 sqrt((T-t) max(v, 0)).
inline double sqrt_risk(double c0, double t, double v, double horizon)
{
    return c0 * std::sqrt(std::max(horizon - t, 0.0) * std::max(v, 0.0));
}

inline double step_state(double y, double v, double dW, double dt, double t, const ModelParams& p)
{
    return y - v * dt + sqrt_risk(p.exec_risk_strategy, t, v, p.horizon) * dW;
}

inline double step_H(double H, double v, double dZ, double /*dt*/, double t, const ModelParams& p)
{
    return H + sqrt_risk(p.exec_risk_price, t, v, p.horizon) * dZ;
}

struct PathRecord {
    std::uint64_t index = 0;
    std::vector<double> y, v, H, S0, S; // N + 1 nodes
    std::vector<double> dW, dZ, dB;     // N increments
};

struct PathEnsemble {
    ModelParams params;
    NoisePlan plan;
    TimeGrid grid;
    PolicyKind policy = PolicyKind::DeterministicVwap;
    std::vector<PathRecord> paths;
};

/// How the rate at t = T is filled in: evaluated, or carried over from the
/// last interior node when the feedback is singular there.
enum class HorizonRate { Evaluate, ReusePrevious };

template <class R>
concept RateRule = std::invocable<const R&, int, double, double>
                   && std::convertible_to<std::invoke_result_t<const R&, int, double, double>, double>;

template <RateRule Rule>
PathRecord simulate_path(const Rule& rule, HorizonRate horizon_rate, const ModelParams& p, const NoisePlan& plan,
                         std::uint64_t path_index)
{
    const TimeGrid grid{p.horizon, plan.n_steps};
    const int n = plan.n_steps;
    const double dt = grid.dt();

    PathRecord rec;
    rec.index = path_index;
    rec.y.resize(n + 1);
    rec.v.resize(n + 1);
    rec.H.resize(n + 1);
    rec.S0.resize(n + 1);
    rec.S.resize(n + 1);
    rec.dW.resize(n);
    rec.dZ.resize(n);
    rec.dB.resize(n);

    rec.y[0] = p.initial_shares;
    rec.H[0] = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t = grid.time(k);
        const double v = rule(k, t, rec.y[k]);
        const Increments inc = draw_increments(plan, path_index, static_cast<std::uint32_t>(k), dt);
        rec.v[k] = v;
        rec.dW[k] = inc.dW;
        rec.dZ[k] = inc.dZ;
        rec.dB[k] = inc.dB;
        rec.y[k + 1] = step_state(rec.y[k], v, inc.dW, dt, t, p);
        rec.H[k + 1] = step_H(rec.H[k], v, inc.dZ, dt, t, p);
    }
    rec.v[n] = horizon_rate == HorizonRate::Evaluate ? rule(n, grid.time(n), rec.y[n]) : rec.v[n - 1];

    double market_noise = 0.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) market_noise += rec.dB[k - 1];
        rec.S0[k] = p.initial_price + p.drift * grid.time(k) + p.permanent_impact * (rec.y[k] - p.initial_shares)
                    + p.market_vol * market_noise;
        rec.S[k] = rec.S0[k] + p.temporary_impact * (rec.H[k] - rec.v[k]);
    }
    return rec;
}

inline PathRecord simulate_path(const Policy& policy, const ModelParams& market, const NoisePlan& plan,
                                std::uint64_t path_index)
{
    auto rule = [&policy](int, double t, double y) { return policy.rate(t, y); };
    return simulate_path(rule, policy.regular_at_horizon() ? HorizonRate::Evaluate : HorizonRate::ReusePrevious,
                         market, plan, path_index);
}

/// Simulates paths [first, first + count) in parallel and hands them to
/// `sink` strictly in index order, `block` paths at a time. Memory stays
/// bounded by one block.
template <class Sink>
void for_each_path(const Policy& policy, const ModelParams& market, const NoisePlan& plan, std::uint64_t first,
                   std::uint64_t count, unsigned threads, Sink&& sink, std::size_t block = 512)
{
    plan.check();
    validate(market);
    std::vector<PathRecord> buffer;
    for (std::uint64_t start = 0; start < count; start += block) {
        const std::size_t size = static_cast<std::size_t>(std::min<std::uint64_t>(block, count - start));
        buffer.assign(size, PathRecord{});
        parallel_for(size, threads, [&](std::size_t i) {
            buffer[i] = simulate_path(policy, market, plan, first + start + i);
        });
        for (const auto& rec : buffer) sink(rec);
    }
}

/// Full ensemble for paths 0 .. n_paths-1. The market parameters drive the
/// dynamics and prices; the policy carries its own snapshot (identical to the
/// market except for the fuel-limit penalty).
inline PathEnsemble simulate_ensemble(const Policy& policy, const ModelParams& market, const NoisePlan& plan,
                                      unsigned threads = 1)
{
    plan.check();
    validate(market);
    PathEnsemble ens{market, plan, TimeGrid{market.horizon, plan.n_steps}, policy.kind(), {}};
    ens.paths.resize(static_cast<std::size_t>(plan.n_paths));
    parallel_for(ens.paths.size(), threads,
                 [&](std::size_t i) { ens.paths[i] = simulate_path(policy, market, plan, i); });
    return ens;
}

/// Time-series standard deviation of the scheduled rate over the nodes with
/// t_k > from_fraction * T, excluding the terminal node.
inline double late_rate_dispersion(const PathRecord& path, const TimeGrid& grid, double from_fraction = 0.9)
{
    double sum = 0.0, sum_sq = 0.0;
    int count = 0;
    for (int k = 0; k < grid.n_steps; ++k) {
        if (grid.time(k) <= from_fraction * grid.horizon) continue;
        sum += path.v[k];
        sum_sq += path.v[k] * path.v[k];
        ++count;
    }
    if (count == 0) return 0.0;
    const double mean = sum / count;
    return std::sqrt(std::max(sum_sq / count - mean * mean, 0.0));
}

/// y~_k = y_k - (mu - B)(T - t_k)^2 / (4 kappa), the shifted fuel-limit state.
inline std::vector<double> transform_tilde(const PathRecord& path, const ModelParams& p, const TimeGrid& grid)
{
    const double shift = derive(p).modified_drift / (4.0 * p.temporary_impact);
    std::vector<double> out(path.y.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double tau = p.horizon - grid.time(static_cast<int>(k));
        out[k] = path.y[k] - shift * tau * tau;
    }
    return out;
}

inline std::vector<std::vector<double>> transform_tilde(const PathEnsemble& ens)
{
    std::vector<std::vector<double>> out;
    out.reserve(ens.paths.size());
    for (const auto& path : ens.paths) out.push_back(transform_tilde(path, ens.params, ens.grid));
    return out;
}

/// Direct Euler integration of the shifted fuel-limit state
///   dy~ = -(y~/(T-t) - (mu-B)(T-t)/(2 kappa)) dt + phi0 sqrt(y~+) dW
/// driven by the same dW stream as simulate_path for `path_index`.
inline std::vector<double> integrate_tilde_path(const ModelParams& p, const NoisePlan& plan, std::uint64_t path_index)
{
    const TimeGrid grid{p.horizon, plan.n_steps};
    const double dt = grid.dt();
    const double drift_coeff = derive(p).modified_drift / (2.0 * p.temporary_impact);
    std::vector<double> yt(plan.n_steps + 1);
    yt[0] = p.initial_shares - drift_coeff / 2.0 * p.horizon * p.horizon;
    for (int k = 0; k < plan.n_steps; ++k) {
        const double tau = p.horizon - grid.time(k);
        const double dW = draw_increments(plan, path_index, static_cast<std::uint32_t>(k), dt).dW;
        yt[k + 1] = yt[k] - (yt[k] / tau - drift_coeff * tau) * dt
                    + p.exec_risk_strategy * std::sqrt(std::max(yt[k], 0.0)) * dW;
    }
    return yt;
}

} // namespace liquidation
