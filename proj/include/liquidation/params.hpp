#pragma once

// Model constants of the liquidation problem under execution risk and the
// derived quantities alpha, B and the modified drift.
//
// Units (documented, not machine-checked):
//   initial_shares      Y       shares
//   horizon             T       days
//   initial_price       S0      currency/share
//   drift               mu      currency/(share*day)
//   permanent_impact    gamma   currency/share^2
//   temporary_impact    kappa   (currency/share^2)*day
//   terminal_penalty    lambda  currency/share^2, or infinite (fuel limit)
//   market_vol          psi     currency/(share*sqrt(day))
//   exec_risk_strategy  phi0    share^(1/2)
//   exec_risk_price     chi0    scales sqrt((T-t)v) in the price-noise channel
//   correlation         rho     dimensionless, corr(dW, dZ)

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace liquidation {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Terminal penalty lambda. Infinite is a distinguished state, not a large
/// float, so the fuel-limit formulas are evaluated exactly.
class TerminalPenalty {
public:
    constexpr TerminalPenalty() = default;

    static constexpr TerminalPenalty finite(double lambda) { return TerminalPenalty(lambda); }
    static constexpr TerminalPenalty infinite() { return TerminalPenalty(); }

    /// +inf maps to the infinite state; every other value is kept as finite.
    static TerminalPenalty from_double(double lambda)
    {
        if (std::isinf(lambda) && lambda > 0.0) return infinite();
        return finite(lambda);
    }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }

    double value() const
    {
        if (!value_) throw ParameterError("terminal_penalty: value requested for infinite penalty");
        return *value_;
    }

    double as_double() const { return value_ ? *value_ : std::numeric_limits<double>::infinity(); }

    friend constexpr bool operator==(const TerminalPenalty&, const TerminalPenalty&) = default;

private:
    explicit constexpr TerminalPenalty(double v) : value_(v) {}
    std::optional<double> value_;
};

struct ModelParams {
    double initial_shares = 0.0;
    double horizon = 0.0;
    double initial_price = 0.0;
    double drift = 0.0;
    double permanent_impact = 0.0;
    double temporary_impact = 0.0;
    TerminalPenalty terminal_penalty = TerminalPenalty::infinite();
    double market_vol = 0.0;
    double exec_risk_strategy = 0.0;
    double exec_risk_price = 0.0;
    double correlation = 0.0;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct DerivedParams {
    std::optional<double> alpha; // days; absent for the fuel limit
    double risk_drift = 0.0;     // B
    double modified_drift = 0.0; // mu - B
};

namespace detail {

inline std::string describe(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

[[noreturn]] inline void reject(const std::string& field, double value, const std::string& bound)
{
    throw ParameterError(field + ": value " + describe(value) + " violates " + bound);
}

inline void require_positive(const std::string& field, double v)
{
    if (!(v > 0.0) || !std::isfinite(v)) reject(field, v, "finite and > 0");
}

inline void require_non_negative(const std::string& field, double v)
{
    if (!(v >= 0.0) || !std::isfinite(v)) reject(field, v, "finite and >= 0");
}

} // namespace detail

/// Throws ParameterError naming the field and the violated bound.
inline void validate(const ModelParams& p)
{
    detail::require_positive("initial_shares", p.initial_shares);
    detail::require_positive("horizon", p.horizon);
    detail::require_positive("initial_price", p.initial_price);
    if (!std::isfinite(p.drift)) detail::reject("drift", p.drift, "finite");
    detail::require_positive("permanent_impact", p.permanent_impact);
    detail::require_positive("temporary_impact", p.temporary_impact);
    if (p.terminal_penalty.is_finite()) {
        const double lambda = p.terminal_penalty.value();
        if (!std::isfinite(lambda) || !(2.0 * lambda - p.permanent_impact > 0.0))
            detail::reject("terminal_penalty", lambda, "2*lambda - permanent_impact > 0");
    }
    detail::require_non_negative("market_vol", p.market_vol);
    detail::require_non_negative("exec_risk_strategy", p.exec_risk_strategy);
    detail::require_non_negative("exec_risk_price", p.exec_risk_price);
    if (!(p.correlation >= -1.0 && p.correlation <= 1.0))
        detail::reject("correlation", p.correlation, "range [-1, 1]");
}

/// Builds validated parameters from named scalars. The first seven fields
/// are required; market_vol, exec_risk_strategy, exec_risk_price and
/// correlation default to 0. terminal_penalty = +inf selects the fuel limit.
inline ModelParams build_params(const std::map<std::string, double>& raw)
{
    static const char* const required[] = {"initial_shares", "horizon",          "initial_price",
                                           "drift",          "permanent_impact", "temporary_impact",
                                           "terminal_penalty"};
    static const char* const optional[] = {"market_vol", "exec_risk_strategy", "exec_risk_price",
                                           "correlation"};
    for (const char* key : required)
        if (!raw.contains(key)) throw ParameterError(std::string(key) + ": missing field");
    for (const auto& [key, value] : raw) {
        bool known = false;
        for (const char* k : required) known = known || key == k;
        for (const char* k : optional) known = known || key == k;
        if (!known) throw ParameterError(key + ": unknown field");
    }
    auto get = [&](const char* key) {
        auto it = raw.find(key);
        return it == raw.end() ? 0.0 : it->second;
    };

    ModelParams p;
    p.initial_shares = get("initial_shares");
    p.horizon = get("horizon");
    p.initial_price = get("initial_price");
    p.drift = get("drift");
    p.permanent_impact = get("permanent_impact");
    p.temporary_impact = get("temporary_impact");
    p.terminal_penalty = TerminalPenalty::from_double(get("terminal_penalty"));
    p.market_vol = get("market_vol");
    p.exec_risk_strategy = get("exec_risk_strategy");
    p.exec_risk_price = get("exec_risk_price");
    p.correlation = get("correlation");
    validate(p);
    return p;
}

/// alpha = 2 kappa / (2 lambda - gamma) for finite lambda,
/// B = (gamma/2) phi0^2 + kappa rho chi0 phi0, modified drift mu - B.
inline DerivedParams derive(const ModelParams& p)
{
    DerivedParams d;
    if (p.terminal_penalty.is_finite())
        d.alpha = 2.0 * p.temporary_impact / (2.0 * p.terminal_penalty.value() - p.permanent_impact);
    const double phi0 = p.exec_risk_strategy;
    d.risk_drift = 0.5 * p.permanent_impact * phi0 * phi0
                   + p.temporary_impact * p.correlation * p.exec_risk_price * phi0;
    d.modified_drift = p.drift - d.risk_drift;
    return d;
}

/// Same market with the penalty pushed to the fuel limit.
inline ModelParams with_fuel_limit(ModelParams p)
{
    p.terminal_penalty = TerminalPenalty::infinite();
    return p;
}

} // namespace liquidation
