#pragma once

// Pathwise revenue functionals and their Monte Carlo summaries.
//
// raw:        -sum_k (S_k - S0)(y_{k+1} - y_k) + (S0_N - S0) y_N - lambda y_N^2
// rewritten:  -lambda y_N^2 + (gamma/2)(y_N^2 - Y^2)
//             + sum_k (mu y_k + B (T - t_k) v_k+ - kappa v_k^2) dt
// Both use left-point (Ito) sums. Only their means agree; the pathwise
// difference carries martingale terms.

#include <liquidation/params.hpp>
#include <liquidation/simulate.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace liquidation {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

struct RevenueComponents {
    double terminal_penalty = 0.0; // -lambda y(T)^2
    double permanent = 0.0;        // (gamma/2)(y(T)^2 - Y^2)
    double drift = 0.0;            // int mu y dt
    double risk_interaction = 0.0; // int B (T-t) v dt
    double temporary = 0.0;        // -int kappa v^2 dt

    double total() const { return terminal_penalty + permanent + drift + risk_interaction + temporary; }
};

struct PathRevenue {
    double raw = 0.0;
    double rewritten = 0.0;
    RevenueComponents components;
    /// Per-path Ito discretization residual; its mean is the deterministic
    /// part of E[raw - rewritten] for the Euler scheme (O(dt)).
    double ito_residual = 0.0;
};

namespace detail {

inline double penalty_weight(const ModelParams& p)
{
    return p.terminal_penalty.is_finite() ? p.terminal_penalty.value() : 0.0;
}

inline void require_path_shape(const PathRecord& path, const TimeGrid& grid)
{
    const auto nodes = static_cast<std::size_t>(grid.n_steps) + 1;
    if (path.y.size() != nodes || path.v.size() != nodes || path.S.size() != nodes || path.S0.size() != nodes
        || path.H.size() != nodes)
        throw std::invalid_argument("path does not match the time grid");
}

} // namespace detail

inline double raw_objective_path(const PathRecord& path, const ModelParams& p, const TimeGrid& grid)
{
    detail::require_path_shape(path, grid);
    const int n = grid.n_steps;
    CompensatedSum sum;
    for (int k = 0; k < n; ++k) sum.add(-(path.S[k] - p.initial_price) * (path.y[k + 1] - path.y[k]));
    const double yN = path.y[n];
    sum.add((path.S0[n] - p.initial_price) * yN);
    sum.add(-detail::penalty_weight(p) * yN * yN);
    return sum.value();
}

inline RevenueComponents rewritten_components_path(const PathRecord& path, const ModelParams& p,
                                                   const TimeGrid& grid)
{
    detail::require_path_shape(path, grid);
    const int n = grid.n_steps;
    const double dt = grid.dt();
    const double B = derive(p).risk_drift;
    const double yN = path.y[n];
    const double Y = p.initial_shares;

    CompensatedSum drift, risk, temporary;
    for (int k = 0; k < n; ++k) {
        const double tau = p.horizon - grid.time(k);
        const double v = path.v[k];
        drift.add(p.drift * path.y[k] * dt);
        risk.add(B * tau * std::max(v, 0.0) * dt);
        temporary.add(-p.temporary_impact * v * v * dt);
    }
    RevenueComponents c;
    c.terminal_penalty = -detail::penalty_weight(p) * yN * yN;
    c.permanent = 0.5 * p.permanent_impact * (yN * yN - Y * Y);
    c.drift = drift.value();
    c.risk_interaction = risk.value();
    c.temporary = temporary.value();
    return c;
}

inline double rewritten_objective_path(const PathRecord& path, const ModelParams& p, const TimeGrid& grid)
{
    return rewritten_components_path(path, p, grid).total();
}

inline double ito_residual_path(const PathRecord& path, const ModelParams& p, const TimeGrid& grid)
{
    detail::require_path_shape(path, grid);
    const int n = grid.n_steps;
    const double dt = grid.dt();
    const double phi0 = p.exec_risk_strategy;
    CompensatedSum sum;
    for (int k = 0; k < n; ++k) {
        const double tau = p.horizon - grid.time(k);
        const double vp = std::max(path.v[k], 0.0);
        const double dy = path.y[k + 1] - path.y[k];
        const double dH = path.H[k + 1] - path.H[k];
        sum.add(p.drift * dy * dt);
        sum.add(0.5 * p.permanent_impact * (dy * dy - phi0 * phi0 * tau * vp * dt));
        sum.add(p.temporary_impact * (dy * dH - p.correlation * p.exec_risk_price * phi0 * tau * vp * dt));
    }
    return sum.value();
}

inline PathRevenue evaluate_path(const PathRecord& path, const ModelParams& p, const TimeGrid& grid)
{
    PathRevenue r;
    r.raw = raw_objective_path(path, p, grid);
    r.components = rewritten_components_path(path, p, grid);
    r.rewritten = r.components.total();
    r.ito_residual = ito_residual_path(path, p, grid);
    return r;
}

struct RevenueReport {
    double raw_mean = 0.0;
    double raw_se = 0.0;
    double rewritten_mean = 0.0;
    double rewritten_se = 0.0;
    RevenueComponents decomposition; // component means
    double ito_residual_mean = 0.0;
    double ito_residual_se = 0.0;
    std::size_t n_paths = 0;
    bool penalty_included = true;

    double combined_se() const { return std::hypot(raw_se, rewritten_se); }
};

namespace detail {

struct MeanSe {
    double mean;
    double se;
};

/// Fixed-order two-pass mean and standard error (sample std / sqrt(n)).
template <class Get>
MeanSe mean_se(std::span<const PathRevenue> values, Get get)
{
    const auto n = values.size();
    CompensatedSum sum;
    for (const auto& v : values) sum.add(get(v));
    const double mean = sum.value() / static_cast<double>(n);
    CompensatedSum sq;
    for (const auto& v : values) {
        const double d = get(v) - mean;
        sq.add(d * d);
    }
    const double var = sq.value() / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

} // namespace detail

inline RevenueReport summarize(std::span<const PathRevenue> values, const ModelParams& p)
{
    if (values.size() < 2) throw std::invalid_argument("revenue estimate needs at least 2 paths");
    RevenueReport rep;
    rep.n_paths = values.size();
    rep.penalty_included = p.terminal_penalty.is_finite();

    const auto raw = detail::mean_se(values, [](const PathRevenue& r) { return r.raw; });
    const auto rew = detail::mean_se(values, [](const PathRevenue& r) { return r.rewritten; });
    const auto ito = detail::mean_se(values, [](const PathRevenue& r) { return r.ito_residual; });
    rep.raw_mean = raw.mean;
    rep.raw_se = raw.se;
    rep.rewritten_se = rew.se;
    rep.ito_residual_mean = ito.mean;
    rep.ito_residual_se = ito.se;

    auto component_mean = [&](double RevenueComponents::*field) {
        return detail::mean_se(values, [field](const PathRevenue& r) { return r.components.*field; }).mean;
    };
    rep.decomposition.terminal_penalty = component_mean(&RevenueComponents::terminal_penalty);
    rep.decomposition.permanent = component_mean(&RevenueComponents::permanent);
    rep.decomposition.drift = component_mean(&RevenueComponents::drift);
    rep.decomposition.risk_interaction = component_mean(&RevenueComponents::risk_interaction);
    rep.decomposition.temporary = component_mean(&RevenueComponents::temporary);
    rep.rewritten_mean = rep.decomposition.total();
    return rep;
}

inline std::vector<PathRevenue> evaluate_paths(const PathEnsemble& ens)
{
    std::vector<PathRevenue> out;
    out.reserve(ens.paths.size());
    for (const auto& path : ens.paths) out.push_back(evaluate_path(path, ens.params, ens.grid));
    return out;
}

inline RevenueReport estimate(const PathEnsemble& ens)
{
    const auto values = evaluate_paths(ens);
    return summarize(values, ens.params);
}

/// Same estimate without materializing the ensemble.
inline RevenueReport estimate_streaming(const Policy& policy, const ModelParams& market, const NoisePlan& plan,
                                        unsigned threads = 1, std::vector<PathRevenue>* per_path = nullptr)
{
    const TimeGrid grid{market.horizon, plan.n_steps};
    std::vector<PathRevenue> values;
    values.reserve(static_cast<std::size_t>(plan.n_paths));
    for_each_path(policy, market, plan, 0, static_cast<std::uint64_t>(plan.n_paths), threads,
                  [&](const PathRecord& rec) { values.push_back(evaluate_path(rec, market, grid)); });
    auto rep = summarize(values, market);
    if (per_path) *per_path = std::move(values);
    return rep;
}

} // namespace liquidation
