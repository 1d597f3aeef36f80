#include <liquidation/io.hpp>
#include <liquidation/scenario.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <string>

using namespace liquidation;

namespace {

const std::string kBase = R"(# comment line
initial_shares = 1e6
horizon = 1
initial_price = 50
drift = 0
permanent_impact = 2.5e-7
temporary_impact = 2.5e-6   # trailing comment
terminal_penalty = 2.5e-3
)";

std::string scenario_error(const std::string& text)
{
    try {
        parse_scenario(text);
    } catch (const ScenarioError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Scenario, DefaultsAndP0)
{
    const Scenario sc = parse_scenario(kBase + "p0 = 0.3\n");
    EXPECT_DOUBLE_EQ(sc.params.exec_risk_strategy, 300.0);
    EXPECT_EQ(sc.policies.size(), 1u);
    EXPECT_EQ(sc.n_steps, 1000);
    EXPECT_EQ(sc.seed, 1u);
}

TEST(Scenario, RunSettings)
{
    const Scenario sc = parse_scenario(kBase
                                       + "policies = penalized , adaptive_vwap,penalized\nn_paths = 7\nn_steps = 20\n"
                                         "seed = 18446744073709551615\noutput_dir = some/where\nthreads = 3\n");
    ASSERT_EQ(sc.policies.size(), 3u);
    EXPECT_EQ(sc.policies[1], PolicyKind::AdaptiveVwap);
    EXPECT_EQ(sc.n_paths, 7);
    EXPECT_EQ(sc.seed, 18446744073709551615ull);
    EXPECT_EQ(sc.output_dir, "some/where");
    EXPECT_EQ(sc.threads, 3u);
}

TEST(Scenario, InfinitePenalty)
{
    std::string text = kBase;
    text.replace(text.find("2.5e-3"), 6, "inf");
    EXPECT_TRUE(parse_scenario(text).params.terminal_penalty.is_infinite());
}

TEST(Scenario, Errors)
{
    EXPECT_NE(scenario_error(kBase + "p0 = 0.1\nexec_risk_strategy = 3\n").find("mutually exclusive"), std::string::npos);
    EXPECT_NE(scenario_error(kBase + "colour = red\n").find("colour"), std::string::npos);
    EXPECT_NE(scenario_error(kBase + "drift = 1\n").find("repeated"), std::string::npos);
    EXPECT_NE(scenario_error(kBase + "n_paths = 1.5\n").find("n_paths"), std::string::npos);
    EXPECT_NE(scenario_error(kBase + "correlation = 1.5\n").find("correlation"), std::string::npos);
    EXPECT_NE(scenario_error(kBase + "policies = twap\n").find("twap"), std::string::npos);
    EXPECT_NE(scenario_error(kBase + "just words\n").find("line 9"), std::string::npos);
    EXPECT_NE(scenario_error(kBase + "n_steps = 1\n").find("n_steps"), std::string::npos);
    EXPECT_NE(scenario_error("horizon = 1\n").find("initial_shares"), std::string::npos);
    EXPECT_THROW(load_scenario("/definitely/not/here.cfg"), ScenarioError);
}

TEST(Io, MetadataRoundTripsByteForByte)
{
    Scenario sc = parse_scenario(kBase + "p0 = 0.3\ncorrelation = -0.25\nexec_risk_price = 0.1\nmarket_vol = 0.3\n");
    EnsembleMetadata meta{sc.params, 99, 1000, 250, {PolicyKind::PenalizedOptimal, PolicyKind::AdaptiveVwap}};
    const std::string text = dump(to_json(meta));
    const EnsembleMetadata back = metadata_from_json(Json::parse(text));
    EXPECT_EQ(back, meta);
    EXPECT_EQ(dump(to_json(back)), text);

    meta.params = with_fuel_limit(meta.params);
    const std::string fuel_text = dump(to_json(meta));
    EXPECT_NE(fuel_text.find("\"terminal_penalty\": \"inf\""), std::string::npos);
    EXPECT_EQ(metadata_from_json(Json::parse(fuel_text)), meta);
}

TEST(Io, CsvRowsCarryFullPrecision)
{
    PathRecord rec;
    rec.index = 3;
    rec.y = {1.0 / 3.0, 0.0};
    rec.v = {2.0, 2.0};
    rec.H = {0.0, 0.1};
    rec.S0 = {50.0, 50.0};
    rec.S = {49.0, 49.5};
    std::string out;
    append_csv_rows(out, rec, TimeGrid{1.0, 1});
    EXPECT_EQ(out, "3,0,0,0.33333333333333331,2,0,50,49\n3,1,1,0,2,0.10000000000000001,50,49.5\n");
    EXPECT_EQ(std::stod("0.33333333333333331"), 1.0 / 3.0);
}

TEST(Io, VerificationReportJson)
{
    VerificationReport r;
    auto e = detail::gate("riccati_a", 1e-9, 1e-6);
    e.at_t = 0.5;
    r.entries.push_back(e);
    r.entries.push_back(detail::info("published", 0.2, "printed form"));
    const Json j = to_json(r);
    EXPECT_TRUE(j["all_passed"].get<bool>());
    EXPECT_EQ(j["entries"][0]["comparison"], "at_most");
    EXPECT_TRUE(j["entries"][0]["y"].is_null());
    EXPECT_TRUE(j["entries"][1]["informational"].get<bool>());
    const std::string table = format_table(r);
    EXPECT_NE(table.find("PASS"), std::string::npos);
    EXPECT_NE(table.find("info"), std::string::npos);
}
