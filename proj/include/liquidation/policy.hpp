#pragma once

// Feedback trading-rate rules (shares/day). Rates are signed: a negative
// value schedules a purchase. No clamping happens here.

#include <liquidation/params.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liquidation {

enum class PolicyKind { PenalizedOptimal, FuelLimitOptimal, AdaptiveVwap, DeterministicVwap };

inline std::string_view policy_name(PolicyKind kind)
{
    switch (kind) {
    case PolicyKind::PenalizedOptimal: return "penalized";
    case PolicyKind::FuelLimitOptimal: return "fuel_limit";
    case PolicyKind::AdaptiveVwap: return "adaptive_vwap";
    case PolicyKind::DeterministicVwap: return "deterministic_vwap";
    }
    return "unknown";
}

inline PolicyKind parse_policy_kind(std::string_view name)
{
    for (auto kind : {PolicyKind::PenalizedOptimal, PolicyKind::FuelLimitOptimal, PolicyKind::AdaptiveVwap,
                      PolicyKind::DeterministicVwap})
        if (policy_name(kind) == name) return kind;
    throw ParameterError("policy: unknown name '" + std::string(name) + "'");
}

namespace detail {

inline void require_time(double t, double horizon, bool allow_horizon)
{
    const bool ok = allow_horizon ? (t >= 0.0 && t <= horizon) : (t >= 0.0 && t < horizon);
    if (!ok)
        throw std::domain_error("rate evaluated at t = " + describe(t) + " outside "
                                + (allow_horizon ? "[0, T]" : "[0, T)"));
}

inline double require_alpha(const DerivedParams& d)
{
    if (!d.alpha) throw ParameterError("terminal_penalty: finite penalty required");
    return *d.alpha;
}

} // namespace detail

/// Optimal feedback for a finite terminal penalty. Finite on the whole of
/// [0, T]; at t = T it equals y / alpha.
inline double rate_penalized(const ModelParams& p, const DerivedParams& d, double t, double y)
{
    const double alpha = detail::require_alpha(d);
    detail::require_time(t, p.horizon, true);
    const double kappa = p.temporary_impact;
    const double B = d.risk_drift;
    const double phi0 = p.exec_risk_strategy;
    const double tau = p.horizon - t;
    const double s = tau + alpha;
    return y / s - (p.drift + B) / (4.0 * kappa) * (s - alpha * alpha / s) + B * tau / (2.0 * kappa)
           + alpha / (2.0 * kappa) * (B * tau / s - kappa * phi0 * phi0 / s * std::log(s / alpha));
}

/// lambda -> infinity limit: y/(T-t) - (mu-B)(T-t)/(4 kappa). Singular at T.
inline double rate_fuel_limit(const ModelParams& p, const DerivedParams& d, double t, double y)
{
    detail::require_time(t, p.horizon, false);
    const double tau = p.horizon - t;
    return y / tau - d.modified_drift * tau / (4.0 * p.temporary_impact);
}

/// The penalized feedback with execution risk switched off (phi0 = chi0 = 0).
inline double rate_adaptive_vwap(const ModelParams& p, const DerivedParams& d, double t, double y)
{
    const double alpha = detail::require_alpha(d);
    detail::require_time(t, p.horizon, true);
    const double s = p.horizon - t + alpha;
    return y / s - p.drift / (4.0 * p.temporary_impact) * (s - alpha * alpha / s);
}

inline double rate_deterministic_vwap(const ModelParams& p) { return p.initial_shares / p.horizon; }

/// E[y*(t)] = (Y/T + (mu-B) t / (4 kappa)) (T - t) under the fuel-limit feedback.
inline double expected_holdings_fuel_limit(const ModelParams& p, const DerivedParams& d, double t)
{
    if (!(t >= 0.0 && t <= p.horizon))
        throw std::domain_error("expected holdings at t = " + detail::describe(t) + " outside [0, T]");
    return (p.initial_shares / p.horizon + d.modified_drift * t / (4.0 * p.temporary_impact)) * (p.horizon - t);
}

/// A feedback rule bound to an immutable parameter snapshot.
class Policy {
public:
    Policy(PolicyKind kind, const ModelParams& params) : kind_(kind), params_(params), derived_(derive(params))
    {
        validate(params_);
        const bool finite = params_.terminal_penalty.is_finite();
        if (kind_ == PolicyKind::FuelLimitOptimal && finite)
            throw ParameterError("fuel_limit policy requires terminal_penalty = inf");
        if ((kind_ == PolicyKind::PenalizedOptimal || kind_ == PolicyKind::AdaptiveVwap) && !finite)
            throw ParameterError(std::string(policy_name(kind_)) + " policy requires a finite terminal_penalty");
    }

    /// Builds the policy, switching to the fuel-limit parameters when the kind needs them.
    static Policy for_market(PolicyKind kind, const ModelParams& params)
    {
        return Policy(kind, kind == PolicyKind::FuelLimitOptimal ? with_fuel_limit(params) : params);
    }

    double rate(double t, double y) const
    {
        switch (kind_) {
        case PolicyKind::PenalizedOptimal: return rate_penalized(params_, derived_, t, y);
        case PolicyKind::FuelLimitOptimal: return rate_fuel_limit(params_, derived_, t, y);
        case PolicyKind::AdaptiveVwap: return rate_adaptive_vwap(params_, derived_, t, y);
        case PolicyKind::DeterministicVwap: return rate_deterministic_vwap(params_);
        }
        return 0.0;
    }

    /// False when the feedback is singular at t = T.
    bool regular_at_horizon() const { return kind_ != PolicyKind::FuelLimitOptimal; }

    PolicyKind kind() const { return kind_; }
    std::string_view name() const { return policy_name(kind_); }
    const ModelParams& params() const { return params_; }
    const DerivedParams& derived() const { return derived_; }

private:
    PolicyKind kind_;
    ModelParams params_;
    DerivedParams derived_;
};

} // namespace liquidation
