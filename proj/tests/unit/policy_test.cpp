#include "support.hpp"

#include <liquidation/policy.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace liquidation;
using namespace testing_support;

// Golden numbers come from tests/oracles/golden_values.py (50-digit mpmath).

TEST(RatePenalized, GoldenEasyOrder)
{
    const ModelParams p = desk(0.1);
    const DerivedParams d = derive(p);
    EXPECT_NEAR(rate_penalized(p, d, 0.0, kY), 999091.56324078116926, 1e-6);
    EXPECT_NEAR(rate_penalized(p, d, 0.5, 5e5), 998004.4725914502699, 1e-6);
}

TEST(RatePenalized, GoldenDifficultOrder)
{
    const ModelParams p = desk(0.3);
    const DerivedParams d = derive(p);
    EXPECT_NEAR(rate_penalized(p, d, 0.0, kY), 999816.47638017803323, 1e-6);
    EXPECT_NEAR(rate_penalized(p, d, 0.5, 5e5), 998009.11404464532293, 1e-6);
}

TEST(RatePenalized, GoldenCorrelatedWithDrift)
{
    const ModelParams p = desk(0.3, 0.95, 0.5, 0.02);
    EXPECT_NEAR(rate_penalized(p, derive(p), 0.25, 7e5), 931063.34217774201212, 1e-6);
}

TEST(RatePenalized, HorizonValueIsHoldingsOverAlpha)
{
    const ModelParams p = desk(0.3, 0.95, 0.4, 0.01);
    const DerivedParams d = derive(p);
    for (double y : {-3e3, 0.0, 1.0, 2.5e4}) EXPECT_NEAR(rate_penalized(p, d, kT, y), y / *d.alpha, 1e-9 * (1 + std::abs(y / *d.alpha)));
}

TEST(RatePenalized, NothingToDoWithoutRiskOrDrift)
{
    const ModelParams p = quiet();
    const DerivedParams d = derive(p);
    for (double t : {0.0, 0.3, 0.99, 1.0}) EXPECT_EQ(rate_penalized(p, d, t, 0.0), 0.0);
}

TEST(RatePenalized, RejectsTimesOutsideHorizon)
{
    const ModelParams p = desk(0.1);
    const DerivedParams d = derive(p);
    EXPECT_THROW(rate_penalized(p, d, -1e-9, kY), std::domain_error);
    EXPECT_THROW(rate_penalized(p, d, kT + 1e-9, kY), std::domain_error);
    EXPECT_THROW(rate_penalized(with_fuel_limit(p), derive(with_fuel_limit(p)), 0.0, kY), std::exception);
}

TEST(RateFuelLimit, ArithmeticExample)
{
    ModelParams p = with_fuel_limit(desk(0.1));
    const DerivedParams d = derive(p);
    ASSERT_NEAR(d.modified_drift, -1.25e-3, 1e-18);
    EXPECT_NEAR(rate_fuel_limit(p, d, 0.5, 5e5), 1.0000625e6, 1e-6);
}

TEST(RateFuelLimit, DriftEqualToRiskDriftGivesVwapPace)
{
    ModelParams p = with_fuel_limit(desk(0.1));
    p.drift = derive(p).risk_drift;
    EXPECT_DOUBLE_EQ(rate_fuel_limit(p, derive(p), 0.0, kY), kY / kT);
}

TEST(RateFuelLimit, NoRiskIsHoldingsOverTimeLeft)
{
    const ModelParams p = with_fuel_limit(quiet());
    const DerivedParams d = derive(p);
    for (double t : {0.0, 0.25, 0.9}) EXPECT_DOUBLE_EQ(rate_fuel_limit(p, d, t, 4e5), 4e5 / (kT - t));
}

TEST(RateFuelLimit, SingularAtHorizon)
{
    const ModelParams p = with_fuel_limit(desk(0.1));
    EXPECT_THROW(rate_fuel_limit(p, derive(p), kT, 1.0), std::domain_error);
}

TEST(RateAdaptiveVwap, Examples)
{
    const ModelParams p = desk(0.3);
    const DerivedParams d = derive(p);
    EXPECT_DOUBLE_EQ(rate_adaptive_vwap(p, d, 0.0, kY), kY / (kT + *d.alpha));
    EXPECT_EQ(rate_adaptive_vwap(p, d, 0.4, 0.0), 0.0);
}

TEST(RateAdaptiveVwap, SmallAlphaRecoversHoldingsOverTimeLeft)
{
    ModelParams p = desk(0.3);
    p.terminal_penalty = TerminalPenalty::finite(1e12);
    const DerivedParams d = derive(p);
    EXPECT_NEAR(rate_adaptive_vwap(p, d, 0.5, 5e5), 1e6, 1e-6);
}

TEST(RateDeterministicVwap, Examples)
{
    ModelParams p = desk(0.1);
    EXPECT_EQ(rate_deterministic_vwap(p), 1e6);
    p.initial_shares = 100.0;
    p.horizon = 4.0;
    EXPECT_EQ(rate_deterministic_vwap(p), 25.0);
    p.initial_shares = 0.0;
    EXPECT_EQ(rate_deterministic_vwap(p), 0.0);
}

TEST(ExpectedHoldings, Examples)
{
    const ModelParams p = with_fuel_limit(desk(0.1));
    const DerivedParams d = derive(p);
    EXPECT_EQ(expected_holdings_fuel_limit(p, d, 0.0), kY);
    EXPECT_EQ(expected_holdings_fuel_limit(p, d, kT), 0.0);
    EXPECT_NEAR(expected_holdings_fuel_limit(p, d, 0.5), 499968.75, 1e-9);
}

TEST(ExpectedHoldings, VwapLineWhenDriftCancels)
{
    ModelParams p = with_fuel_limit(desk(0.3));
    p.drift = derive(p).risk_drift;
    const DerivedParams d = derive(p);
    for (double t : {0.1, 0.5, 0.8}) EXPECT_NEAR(expected_holdings_fuel_limit(p, d, t), kY * (1 - t / kT), 1e-9);
}

TEST(Policy, PenaltyRequirements)
{
    const ModelParams finite = desk(0.3);
    const ModelParams fuel = with_fuel_limit(finite);
    EXPECT_THROW(Policy(PolicyKind::FuelLimitOptimal, finite), ParameterError);
    EXPECT_THROW(Policy(PolicyKind::PenalizedOptimal, fuel), ParameterError);
    EXPECT_THROW(Policy(PolicyKind::AdaptiveVwap, fuel), ParameterError);
    EXPECT_NO_THROW(Policy(PolicyKind::DeterministicVwap, fuel));
    EXPECT_NO_THROW(Policy::for_market(PolicyKind::FuelLimitOptimal, finite));
}

TEST(Policy, DispatchAndNames)
{
    const ModelParams p = desk(0.3);
    for (auto kind : {PolicyKind::PenalizedOptimal, PolicyKind::FuelLimitOptimal, PolicyKind::AdaptiveVwap,
                      PolicyKind::DeterministicVwap})
        EXPECT_EQ(parse_policy_kind(policy_name(kind)), kind);
    EXPECT_THROW(parse_policy_kind("twap"), ParameterError);

    const DerivedParams d = derive(p);
    EXPECT_EQ(Policy(PolicyKind::PenalizedOptimal, p).rate(0.2, 7e5), rate_penalized(p, d, 0.2, 7e5));
    EXPECT_EQ(Policy(PolicyKind::AdaptiveVwap, p).rate(0.2, 7e5), rate_adaptive_vwap(p, d, 0.2, 7e5));
    EXPECT_EQ(Policy(PolicyKind::DeterministicVwap, p).rate(0.2, 7e5), kY / kT);
    const auto fuel = Policy::for_market(PolicyKind::FuelLimitOptimal, p);
    EXPECT_FALSE(fuel.regular_at_horizon());
    EXPECT_EQ(fuel.rate(0.2, 7e5), rate_fuel_limit(fuel.params(), fuel.derived(), 0.2, 7e5));
}

TEST(Policy, PenalizedConvergesToFuelLimit)
{
    ModelParams p = desk(0.3, 0.95, 0.3, 0.01);
    const ModelParams fuel = with_fuel_limit(p);
    const DerivedParams df = derive(fuel);
    double previous = INFINITY;
    for (double scale : {1e2, 1e4, 1e6, 1e8}) {
        p.terminal_penalty = TerminalPenalty::finite(scale * kKappa);
        const DerivedParams d = derive(p);
        double worst = 0.0;
        for (double t : {0.0, 0.2, 0.5, 0.8, 0.95})
            for (double y : {0.0, 2e5, 1e6})
                worst = std::max(worst, std::abs(rate_penalized(p, d, t, y) - rate_fuel_limit(fuel, df, t, y)));
        EXPECT_LT(worst, previous) << scale;
        previous = worst;
    }
    EXPECT_LT(previous, 1e-3 * kY / kT);
}
