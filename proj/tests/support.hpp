#pragma once

#include <liquidation/params.hpp>

#include <cmath>

namespace testing_support {

inline constexpr double kY = 1e6;
inline constexpr double kT = 1.0;
inline constexpr double kGamma = 2.5e-7;
inline constexpr double kKappa = 2.5e-6;
inline constexpr double kLambda = 1000.0 * kKappa;

// One-day, 1e6-share desk scenario; phi0 = p0 sqrt(Y/T).
inline liquidation::ModelParams desk(double p0, double chi0 = 0.95, double rho = 0.0, double mu = 0.0)
{
    liquidation::ModelParams p;
    p.initial_shares = kY;
    p.horizon = kT;
    p.initial_price = 50.0;
    p.drift = mu;
    p.permanent_impact = kGamma;
    p.temporary_impact = kKappa;
    p.terminal_penalty = liquidation::TerminalPenalty::finite(kLambda);
    p.market_vol = 0.95;
    p.exec_risk_strategy = p0 * std::sqrt(kY / kT);
    p.exec_risk_price = chi0;
    p.correlation = rho;
    return p;
}

// No execution risk and no market noise.
inline liquidation::ModelParams quiet()
{
    auto p = desk(0.0, 0.0);
    p.market_vol = 0.0;
    return p;
}

} // namespace testing_support
