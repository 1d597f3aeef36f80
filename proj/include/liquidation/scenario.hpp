#pragma once

// Scenario files: flat "key = value" text, one entry per line, '#' starts a
// comment. Model keys use the ModelParams field names; terminal_penalty
// accepts "inf". p0 and exec_risk_strategy are mutually exclusive
// (phi0 = p0 sqrt(Y / T)). Unknown or repeated keys are errors.
//
//   policies    comma-separated: penalized, fuel_limit, adaptive_vwap, deterministic_vwap
//   n_paths     number of Monte Carlo paths
//   n_steps     Euler steps on [0, T]
//   seed        64-bit noise seed
//   output_dir  directory for generated files
//   threads     worker threads (output does not depend on it)

#include <liquidation/params.hpp>
#include <liquidation/policy.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liquidation {

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Scenario {
    ModelParams params;
    std::optional<double> p0;
    std::vector<PolicyKind> policies = {PolicyKind::PenalizedOptimal};
    int n_paths = 1000;
    int n_steps = 1000;
    std::uint64_t seed = 1;
    std::string output_dir = "out";
    unsigned threads = 1;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view key, std::string_view text)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ScenarioError(std::string(key) + ": not a number: '" + std::string(text) + "'");
    return value;
}

template <class Int>
Int parse_integer(std::string_view key, std::string_view text)
{
    Int value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ScenarioError(std::string(key) + ": not an integer: '" + std::string(text) + "'");
    return value;
}

inline const std::set<std::string, std::less<>>& model_keys()
{
    static const std::set<std::string, std::less<>> keys = {
        "initial_shares", "horizon",    "initial_price",      "drift",           "permanent_impact",
        "temporary_impact", "terminal_penalty", "market_vol", "exec_risk_strategy", "exec_risk_price",
        "correlation"};
    return keys;
}

} // namespace detail

inline Scenario parse_scenario(std::istream& in)
{
    std::map<std::string, std::string, std::less<>> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = detail::trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ScenarioError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key(detail::trim(view.substr(0, eq)));
        const std::string value(detail::trim(view.substr(eq + 1)));
        if (key.empty() || value.empty())
            throw ScenarioError("line " + std::to_string(line_no) + ": empty key or value");
        if (!entries.emplace(key, value).second) throw ScenarioError(key + ": repeated key");
    }

    Scenario sc;
    std::map<std::string, double> raw;
    for (const auto& [key, value] : entries) {
        if (detail::model_keys().contains(key)) {
            raw[key] = detail::parse_double(key, value);
        } else if (key == "p0") {
            sc.p0 = detail::parse_double(key, value);
        } else if (key == "policies") {
            sc.policies.clear();
            std::stringstream list(value);
            std::string item;
            while (std::getline(list, item, ',')) {
                try {
                    sc.policies.push_back(parse_policy_kind(detail::trim(item)));
                } catch (const ParameterError& e) {
                    throw ScenarioError(e.what());
                }
            }
            if (sc.policies.empty()) throw ScenarioError("policies: empty list");
        } else if (key == "n_paths") {
            sc.n_paths = detail::parse_integer<int>(key, value);
        } else if (key == "n_steps") {
            sc.n_steps = detail::parse_integer<int>(key, value);
        } else if (key == "seed") {
            sc.seed = detail::parse_integer<std::uint64_t>(key, value);
        } else if (key == "output_dir") {
            sc.output_dir = value;
        } else if (key == "threads") {
            sc.threads = detail::parse_integer<unsigned>(key, value);
        } else {
            throw ScenarioError(key + ": unknown key");
        }
    }

    if (sc.p0) {
        if (raw.contains("exec_risk_strategy")) throw ScenarioError("p0 and exec_risk_strategy are mutually exclusive");
        if (!(*sc.p0 >= 0.0) || !std::isfinite(*sc.p0)) throw ScenarioError("p0: must be finite and >= 0");
        if (!raw.contains("initial_shares") || !raw.contains("horizon"))
            throw ScenarioError("p0 requires initial_shares and horizon");
        raw["exec_risk_strategy"] = *sc.p0 * std::sqrt(raw["initial_shares"] / raw["horizon"]);
    }
    if (sc.n_paths < 1) throw ScenarioError("n_paths: must be >= 1");
    if (sc.n_steps < 2) throw ScenarioError("n_steps: must be >= 2");

    try {
        sc.params = build_params(raw);
    } catch (const ParameterError& e) {
        throw ScenarioError(e.what());
    }
    return sc;
}

inline Scenario parse_scenario(const std::string& text)
{
    std::istringstream in(text);
    return parse_scenario(in);
}

inline Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot read scenario file '" + path + "'");
    return parse_scenario(in);
}

} // namespace liquidation
