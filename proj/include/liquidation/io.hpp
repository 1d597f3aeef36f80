#pragma once

// File formats: ensemble CSV, JSON sidecars and reports. Every number is
// written with 17 significant digits so values round-trip bit-exactly.

#include <liquidation/objective.hpp>
#include <liquidation/params.hpp>
#include <liquidation/policy.hpp>
#include <liquidation/simulate.hpp>
#include <liquidation/verify.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace liquidation {

using Json = nlohmann::ordered_json;

inline std::string format_number(double x) { return fmt::format("{:.17g}", x); }

inline Json to_json(const ModelParams& p)
{
    Json j;
    j["initial_shares"] = p.initial_shares;
    j["horizon"] = p.horizon;
    j["initial_price"] = p.initial_price;
    j["drift"] = p.drift;
    j["permanent_impact"] = p.permanent_impact;
    j["temporary_impact"] = p.temporary_impact;
    if (p.terminal_penalty.is_infinite())
        j["terminal_penalty"] = "inf";
    else
        j["terminal_penalty"] = p.terminal_penalty.value();
    j["market_vol"] = p.market_vol;
    j["exec_risk_strategy"] = p.exec_risk_strategy;
    j["exec_risk_price"] = p.exec_risk_price;
    j["correlation"] = p.correlation;
    return j;
}

inline ModelParams params_from_json(const Json& j)
{
    ModelParams p;
    p.initial_shares = j.at("initial_shares").get<double>();
    p.horizon = j.at("horizon").get<double>();
    p.initial_price = j.at("initial_price").get<double>();
    p.drift = j.at("drift").get<double>();
    p.permanent_impact = j.at("permanent_impact").get<double>();
    p.temporary_impact = j.at("temporary_impact").get<double>();
    const auto& lambda = j.at("terminal_penalty");
    if (lambda.is_string()) {
        if (lambda.get<std::string>() != "inf") throw ParameterError("terminal_penalty: expected number or \"inf\"");
        p.terminal_penalty = TerminalPenalty::infinite();
    } else {
        p.terminal_penalty = TerminalPenalty::finite(lambda.get<double>());
    }
    p.market_vol = j.at("market_vol").get<double>();
    p.exec_risk_strategy = j.at("exec_risk_strategy").get<double>();
    p.exec_risk_price = j.at("exec_risk_price").get<double>();
    p.correlation = j.at("correlation").get<double>();
    validate(p);
    return p;
}

/// Sidecar describing an ensemble file.
struct EnsembleMetadata {
    ModelParams params;
    std::uint64_t seed = 0;
    int n_steps = 0;
    int n_paths = 0;
    std::vector<PolicyKind> policies;

    friend bool operator==(const EnsembleMetadata&, const EnsembleMetadata&) = default;
};

inline Json to_json(const EnsembleMetadata& m)
{
    Json j;
    j["params"] = to_json(m.params);
    j["seed"] = m.seed;
    j["grid"] = {{"horizon", m.params.horizon}, {"n_steps", m.n_steps}, {"dt", m.params.horizon / m.n_steps}};
    j["n_paths"] = m.n_paths;
    Json policies = Json::array();
    for (auto kind : m.policies) {
        Json pj;
        pj["kind"] = std::string(policy_name(kind));
        pj["regular_at_horizon"] = kind != PolicyKind::FuelLimitOptimal;
        policies.push_back(pj);
    }
    j["policies"] = policies;
    return j;
}

inline EnsembleMetadata metadata_from_json(const Json& j)
{
    EnsembleMetadata m;
    m.params = params_from_json(j.at("params"));
    m.seed = j.at("seed").get<std::uint64_t>();
    m.n_steps = j.at("grid").at("n_steps").get<int>();
    m.n_paths = j.at("n_paths").get<int>();
    for (const auto& pj : j.at("policies")) m.policies.push_back(parse_policy_kind(pj.at("kind").get<std::string>()));
    return m;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

inline EnsembleMetadata read_metadata(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    return metadata_from_json(Json::parse(in));
}

inline constexpr const char* kEnsembleCsvHeader = "path,k,t,y,v,H,S0,S\n";

inline void append_csv_rows(std::string& out, const PathRecord& rec, const TimeGrid& grid)
{
    for (int k = 0; k <= grid.n_steps; ++k) {
        fmt::format_to(std::back_inserter(out), "{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", rec.index,
                       k, grid.time(k), rec.y[k], rec.v[k], rec.H[k], rec.S0[k], rec.S[k]);
    }
}

inline Json to_json(const RevenueComponents& c)
{
    return Json{{"terminal_penalty", c.terminal_penalty},
                {"permanent", c.permanent},
                {"drift", c.drift},
                {"risk_interaction", c.risk_interaction},
                {"temporary", c.temporary}};
}

inline Json to_json(const RevenueReport& r)
{
    Json j;
    j["raw_mean"] = r.raw_mean;
    j["raw_se"] = r.raw_se;
    j["rewritten_mean"] = r.rewritten_mean;
    j["rewritten_se"] = r.rewritten_se;
    j["decomposition"] = to_json(r.decomposition);
    j["ito_residual_mean"] = r.ito_residual_mean;
    j["ito_residual_se"] = r.ito_residual_se;
    j["n_paths"] = r.n_paths;
    j["penalty_included"] = r.penalty_included;
    return j;
}

inline void append_revenue_csv(std::string& out, std::string_view policy, std::uint64_t path, const PathRevenue& r)
{
    const auto& c = r.components;
    fmt::format_to(std::back_inserter(out), "{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n",
                   policy, path, r.raw, r.rewritten, c.terminal_penalty, c.permanent, c.drift, c.risk_interaction,
                   c.temporary, r.ito_residual);
}

inline constexpr const char* kRevenueCsvHeader =
    "policy,path,raw,rewritten,terminal_penalty,permanent,drift,risk_interaction,temporary,ito_residual\n";

namespace detail {

inline Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

} // namespace detail

inline Json to_json(const VerificationReport& report)
{
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json j;
        j["name"] = e.name;
        j["value"] = detail::number_or_null(e.value);
        if (e.informational) {
            j["informational"] = true;
        } else {
            j["tolerance"] = e.tolerance;
            j["comparison"] = e.comparison == Comparison::AtMost ? "at_most" : "at_least";
            j["passed"] = e.passed;
        }
        j["t"] = detail::number_or_null(e.at_t);
        j["y"] = detail::number_or_null(e.at_y);
        if (!e.note.empty()) j["note"] = e.note;
        entries.push_back(j);
    }
    return Json{{"all_passed", report.all_passed()}, {"entries", entries}};
}

inline std::string format_table(const VerificationReport& report)
{
    std::string out = fmt::format("{:<28} {:>10} {:>24} {:>24}  {}\n", "check", "status", "value", "tolerance", "where");
    for (const auto& e : report.entries) {
        const char* status = e.informational ? "info" : (e.passed ? "PASS" : "FAIL");
        std::string tol = e.informational ? "-"
                                          : fmt::format("{}{:.12g}", e.comparison == Comparison::AtMost ? "<= " : ">= ",
                                                        e.tolerance);
        std::string where;
        if (std::isfinite(e.at_t)) where += fmt::format("t={:.12g}", e.at_t);
        if (std::isfinite(e.at_y)) where += fmt::format(" y={:.12g}", e.at_y);
        out += fmt::format("{:<28} {:>10} {:>24.12g} {:>24}  {}\n", e.name, status, e.value, tol, where);
        if (!e.note.empty()) out += fmt::format("{:<28} {}\n", "", e.note);
    }
    return out;
}

} // namespace liquidation
