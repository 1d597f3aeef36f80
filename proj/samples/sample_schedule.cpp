// Prints the penalized-optimal rate along the expected fuel-limit holdings
// curve, next to the VWAP pace, for a one-day liquidation of 1e6 shares.

#include <liquidation/liquidation.hpp>

#include <fmt/format.h>

#include <cmath>

int main()
{
    using namespace liquidation;

    const double Y = 1e6, T = 1.0, p0 = 0.3;
    const ModelParams p = build_params({{"initial_shares", Y},
                                        {"horizon", T},
                                        {"initial_price", 50.0},
                                        {"drift", 0.0},
                                        {"permanent_impact", 2.5e-7},
                                        {"temporary_impact", 2.5e-6},
                                        {"terminal_penalty", 2.5e-3},
                                        {"exec_risk_strategy", p0 * std::sqrt(Y / T)},
                                        {"exec_risk_price", 0.95}});
    const DerivedParams d = derive(p);
    const ModelParams fuel = with_fuel_limit(p);
    const DerivedParams dfuel = derive(fuel);

    fmt::print("alpha = {:.6g} days, B = {:.6g}\n\n", *d.alpha, d.risk_drift);
    fmt::print("{:>5} {:>14} {:>14} {:>14}\n", "t", "E[y*(t)]", "v penalized", "v vwap");
    for (int i = 0; i < 10; ++i) {
        const double t = 0.1 * i;
        const double y = expected_holdings_fuel_limit(fuel, dfuel, t);
        fmt::print("{:>5.1f} {:>14.1f} {:>14.1f} {:>14.1f}\n", t, y, rate_penalized(p, d, t, y),
                   rate_adaptive_vwap(p, d, t, y));
    }
}
