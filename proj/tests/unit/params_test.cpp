#include "support.hpp"

#include <liquidation/params.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <map>
#include <string>

using namespace liquidation;
using namespace testing_support;

namespace {

std::map<std::string, double> desk_map()
{
    return {{"initial_shares", kY},         {"horizon", kT}, {"initial_price", 50.0}, {"drift", 0.0},
            {"permanent_impact", kGamma}, {"temporary_impact", kKappa}, {"terminal_penalty", kLambda}};
}

std::string rejection(std::map<std::string, double> raw)
{
    try {
        build_params(raw);
    } catch (const ParameterError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Params, DeskValuesAccepted)
{
    const ModelParams p = build_params(desk_map());
    EXPECT_EQ(p.initial_shares, kY);
    EXPECT_EQ(p.terminal_penalty.value(), kLambda);
    EXPECT_EQ(p.market_vol, 0.0);
    EXPECT_EQ(p.correlation, 0.0);
}

TEST(Params, CorrelationOutOfRangeRejected)
{
    auto raw = desk_map();
    raw["correlation"] = 1.5;
    const std::string msg = rejection(raw);
    EXPECT_NE(msg.find("correlation"), std::string::npos) << msg;
    EXPECT_NE(msg.find("[-1, 1]"), std::string::npos) << msg;
}

TEST(Params, PenaltyAtHalfGammaRejected)
{
    auto raw = desk_map();
    raw["terminal_penalty"] = kGamma / 2.0;
    const std::string msg = rejection(raw);
    EXPECT_NE(msg.find("terminal_penalty"), std::string::npos) << msg;
}

TEST(Params, EachPositivityBoundIsEnforced)
{
    for (const char* key : {"initial_shares", "horizon", "initial_price", "permanent_impact", "temporary_impact"}) {
        auto raw = desk_map();
        raw[key] = 0.0;
        EXPECT_NE(rejection(raw).find(key), std::string::npos) << key;
    }
    for (const char* key : {"market_vol", "exec_risk_strategy", "exec_risk_price"}) {
        auto raw = desk_map();
        raw[key] = -1e-12;
        EXPECT_NE(rejection(raw).find(key), std::string::npos) << key;
    }
    auto raw = desk_map();
    raw["drift"] = std::nan("");
    EXPECT_NE(rejection(raw).find("drift"), std::string::npos);
}

TEST(Params, MissingAndUnknownKeys)
{
    auto raw = desk_map();
    raw.erase("horizon");
    EXPECT_NE(rejection(raw).find("horizon"), std::string::npos);
    raw = desk_map();
    raw["volatility"] = 1.0;
    EXPECT_NE(rejection(raw).find("volatility"), std::string::npos);
}

TEST(Params, InfinitePenaltySelectsFuelLimit)
{
    auto raw = desk_map();
    raw["terminal_penalty"] = std::numeric_limits<double>::infinity();
    const ModelParams p = build_params(raw);
    EXPECT_TRUE(p.terminal_penalty.is_infinite());
    EXPECT_FALSE(derive(p).alpha.has_value());
    EXPECT_THROW((void)p.terminal_penalty.value(), std::logic_error);
}

TEST(Params, AlphaAtDeskValues)
{
    const DerivedParams d = derive(desk(0.1));
    ASSERT_TRUE(d.alpha.has_value());
    EXPECT_NEAR(*d.alpha, 0.0010000500025001250063, 1e-18);
    EXPECT_NEAR(*d.alpha, 1.000050e-3, 5e-10);
}

TEST(Params, RiskDriftWithUncorrelatedNoise)
{
    const DerivedParams d = derive(desk(0.1, 0.95, 0.0));
    EXPECT_NEAR(d.risk_drift, 1.25e-3, 1e-18);
    EXPECT_NEAR(d.modified_drift, -1.25e-3, 1e-18);
}

TEST(Params, RiskDriftCrossTerm)
{
    const ModelParams p = desk(0.3, 0.95, 0.5, 0.02);
    const DerivedParams d = derive(p);
    EXPECT_NEAR(d.risk_drift, 0.01160625, 1e-15);
    EXPECT_NEAR(d.modified_drift, 0.02 - 0.01160625, 1e-15);
}

TEST(Params, NoStrategyRiskMeansNoRiskDrift)
{
    for (double rho : {-1.0, 0.0, 0.7}) {
        const ModelParams p = desk(0.0, 3.0, rho, 0.01);
        const DerivedParams d = derive(p);
        EXPECT_EQ(d.risk_drift, 0.0);
        EXPECT_EQ(d.modified_drift, p.drift);
    }
}

TEST(Params, AlphaShrinksAsPenaltyGrows)
{
    ModelParams p = desk(0.1);
    double previous = std::numeric_limits<double>::infinity();
    for (double scale : {1e0, 1e1, 1e2, 1e3, 1e4, 1e6, 1e8}) {
        p.terminal_penalty = TerminalPenalty::finite(scale * kKappa);
        const double alpha = *derive(p).alpha;
        EXPECT_GT(alpha, 0.0);
        EXPECT_LT(alpha, previous);
        previous = alpha;
    }
    EXPECT_LT(previous, 1e-7);
}

TEST(Params, ModifiedDriftBelowDriftWhenRiskDriftPositive)
{
    const DerivedParams d = derive(desk(0.3, 0.95, 0.2, 0.05));
    EXPECT_GT(d.risk_drift, 0.0);
    EXPECT_LT(d.modified_drift, 0.05);
}

TEST(Params, FuelLimitCopyKeepsEverythingElse)
{
    const ModelParams p = desk(0.3);
    ModelParams fuel = with_fuel_limit(p);
    EXPECT_TRUE(fuel.terminal_penalty.is_infinite());
    fuel.terminal_penalty = p.terminal_penalty;
    EXPECT_EQ(fuel, p);
}
