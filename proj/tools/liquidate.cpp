// liquidate: scenario-driven simulation, policy comparison, revenue
// estimation and verification for the execution-risk liquidation model.
//
// Exit status: 0 success, 1 runtime failure, 2 configuration/usage error,
// 3 verification failure.

#include <liquidation/liquidation.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace liquidation;

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;

struct Overrides {
    std::string scenario;
    std::optional<std::string> out;
    std::optional<int> paths;
    std::optional<int> steps;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
};

Scenario resolve(const Overrides& o)
{
    Scenario sc = load_scenario(o.scenario);
    if (o.out) sc.output_dir = *o.out;
    if (o.paths) sc.n_paths = *o.paths;
    if (o.steps) sc.n_steps = *o.steps;
    if (o.seed) sc.seed = *o.seed;
    if (o.threads) sc.threads = *o.threads;
    if (sc.n_paths < 1) throw ScenarioError("n_paths: must be >= 1");
    if (sc.n_steps < 2) throw ScenarioError("n_steps: must be >= 2");
    return sc;
}

NoisePlan plan_for(const Scenario& sc) { return {sc.seed, sc.n_steps, sc.n_paths, sc.params.correlation}; }

std::string output_path(const Scenario& sc, const std::string& name)
{
    std::filesystem::create_directories(sc.output_dir);
    return (std::filesystem::path(sc.output_dir) / name).string();
}

void print_revenue(const std::string& label, const RevenueReport& r)
{
    fmt::print("{} revenue over {} paths\n", label, r.n_paths);
    fmt::print("  raw        {:>22.12g} +/- {:.12g}\n", r.raw_mean, r.raw_se);
    fmt::print("  rewritten  {:>22.12g} +/- {:.12g}\n", r.rewritten_mean, r.rewritten_se);
    const auto& c = r.decomposition;
    fmt::print("    terminal_penalty {:>22.12g}\n    permanent        {:>22.12g}\n    drift            {:>22.12g}\n"
               "    risk_interaction {:>22.12g}\n    temporary        {:>22.12g}\n",
               c.terminal_penalty, c.permanent, c.drift, c.risk_interaction, c.temporary);
}

int cmd_simulate(const Overrides& o)
{
    const Scenario sc = resolve(o);
    const auto policy = Policy::for_market(sc.policies.front(), sc.params);
    const NoisePlan plan = plan_for(sc);
    const TimeGrid grid{sc.params.horizon, sc.n_steps};

    std::string csv = kEnsembleCsvHeader;
    std::vector<PathRevenue> revenues;
    CompensatedSum terminal, terminal_sq;
    for_each_path(policy, sc.params, plan, 0, static_cast<std::uint64_t>(sc.n_paths), sc.threads,
                  [&](const PathRecord& rec) {
                      append_csv_rows(csv, rec, grid);
                      revenues.push_back(evaluate_path(rec, sc.params, grid));
                      terminal.add(rec.y.back());
                      terminal_sq.add(rec.y.back() * rec.y.back());
                  });
    write_text(output_path(sc, "ensemble.csv"), csv);
    const EnsembleMetadata meta{sc.params, sc.seed, sc.n_steps, sc.n_paths, {policy.kind()}};
    write_text(output_path(sc, "ensemble.json"), dump(to_json(meta)));

    const double n = sc.n_paths;
    const double mean = terminal.value() / n;
    fmt::print("policy {}: {} paths x {} steps, seed {}\n", policy.name(), sc.n_paths, sc.n_steps, sc.seed);
    fmt::print("terminal holdings: mean {:.12g}, rms {:.12g}\n", mean, std::sqrt(terminal_sq.value() / n));
    if (revenues.size() >= 2) print_revenue(std::string(policy.name()), summarize(revenues, sc.params));
    return 0;
}

int cmd_compare(const Overrides& o)
{
    const Scenario sc = resolve(o);
    if (sc.policies.size() < 2) throw ScenarioError("compare: at least two policies required");
    const NoisePlan plan = plan_for(sc);
    const TimeGrid grid{sc.params.horizon, sc.n_steps};

    std::vector<Policy> policies;
    for (auto kind : sc.policies) policies.push_back(Policy::for_market(kind, sc.params));

    std::string csv = "path,k,t";
    for (std::size_t i = 0; i < policies.size(); ++i)
        csv += fmt::format(",y_{0}_{1},v_{0}_{1}", i, policies[i].name());
    csv += "\n";

    const std::size_t block = 256;
    std::vector<std::vector<PathRevenue>> revenues(policies.size());
    std::vector<CompensatedSum> dispersion(policies.size());
    std::vector<std::vector<PathRecord>> buffers(policies.size());
    for (std::uint64_t start = 0; start < static_cast<std::uint64_t>(sc.n_paths); start += block) {
        const auto count = std::min<std::uint64_t>(block, sc.n_paths - start);
        for (std::size_t i = 0; i < policies.size(); ++i) {
            buffers[i].clear();
            for_each_path(policies[i], sc.params, plan, start, count, sc.threads,
                          [&](const PathRecord& rec) { buffers[i].push_back(rec); });
        }
        for (std::uint64_t j = 0; j < count; ++j) {
            for (int k = 0; k <= sc.n_steps; ++k) {
                fmt::format_to(std::back_inserter(csv), "{},{},{:.17g}", start + j, k, grid.time(k));
                for (std::size_t i = 0; i < policies.size(); ++i)
                    fmt::format_to(std::back_inserter(csv), ",{:.17g},{:.17g}", buffers[i][j].y[k], buffers[i][j].v[k]);
                csv += "\n";
            }
            for (std::size_t i = 0; i < policies.size(); ++i) {
                revenues[i].push_back(evaluate_path(buffers[i][j], sc.params, grid));
                dispersion[i].add(late_rate_dispersion(buffers[i][j], grid, 0.9));
            }
        }
    }
    write_text(output_path(sc, "compare.csv"), csv);

    std::vector<PolicyKind> kinds;
    for (const auto& p : policies) kinds.push_back(p.kind());
    Json summary;
    summary["metadata"] = to_json(EnsembleMetadata{sc.params, sc.seed, sc.n_steps, sc.n_paths, kinds});
    Json per_policy = Json::array();
    for (std::size_t i = 0; i < policies.size(); ++i) {
        Json pj;
        pj["index"] = i;
        pj["policy"] = std::string(policies[i].name());
        pj["late_rate_dispersion"] = dispersion[i].value() / sc.n_paths;
        if (revenues[i].size() >= 2) pj["revenue"] = to_json(summarize(revenues[i], sc.params));
        per_policy.push_back(pj);
        fmt::print("[{}] {}: mean late-interval (t > 0.9T) rate std {:.12g}\n", i, policies[i].name(),
                   dispersion[i].value() / sc.n_paths);
    }
    summary["policies"] = per_policy;
    write_text(output_path(sc, "compare.json"), dump(summary));
    return 0;
}

int cmd_revenue(const Overrides& o, bool per_path)
{
    const Scenario sc = resolve(o);
    const NoisePlan plan = plan_for(sc);
    if (sc.n_paths < 2) throw ScenarioError("revenue: n_paths must be >= 2");
    Json out = Json::object();
    std::string csv = kRevenueCsvHeader;
    for (auto kind : sc.policies) {
        const auto policy = Policy::for_market(kind, sc.params);
        std::vector<PathRevenue> values;
        const auto report = estimate_streaming(policy, sc.params, plan, sc.threads, &values);
        out[std::string(policy.name())] = to_json(report);
        print_revenue(std::string(policy.name()), report);
        if (per_path)
            for (std::size_t i = 0; i < values.size(); ++i) append_revenue_csv(csv, policy.name(), i, values[i]);
    }
    write_text(output_path(sc, "revenue.json"), dump(out));
    if (per_path) write_text(output_path(sc, "revenue_paths.csv"), csv);
    return 0;
}

int cmd_verify(const Overrides& o, double alpha_scale)
{
    const Scenario sc = resolve(o);
    VerifySettings settings;
    settings.params = sc.params;
    settings.fuel.n_paths = sc.n_paths;
    settings.fuel.n_steps = sc.n_steps;
    settings.fuel.seed = sc.seed;
    settings.fuel.threads = sc.threads;
    settings.alpha_scale = alpha_scale;
    const auto report = run_verification_suite(settings);
    write_text(output_path(sc, "verification.json"), dump(to_json(report)));
    std::fputs(format_table(report).c_str(), stdout);
    const bool ok = report.all_passed();
    fmt::print("verification {}\n", ok ? "PASSED" : "FAILED");
    return ok ? 0 : kExitVerification;
}

void add_common(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--scenario", o.scenario, "scenario file")->required();
    cmd->add_option("--out", o.out, "output directory (overrides output_dir)");
    cmd->add_option("--paths", o.paths, "number of paths (overrides n_paths)");
    cmd->add_option("--steps", o.steps, "number of Euler steps (overrides n_steps)");
    cmd->add_option("--seed", o.seed, "noise seed (overrides seed)");
    cmd->add_option("--threads", o.threads, "worker threads (overrides threads)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Optimal liquidation under execution risk"};
    app.require_subcommand(1);

    Overrides o;
    bool per_path = false;
    double alpha_scale = 1.0;
    auto* simulate = app.add_subcommand("simulate", "simulate an ensemble and write CSV + JSON sidecar");
    auto* compare = app.add_subcommand("compare", "simulate several policies on shared noise");
    auto* revenue = app.add_subcommand("revenue", "Monte Carlo revenue reports per policy");
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    for (auto* cmd : {simulate, compare, revenue, verify}) add_common(cmd, o);
    revenue->add_flag("--per-path", per_path, "also write per-path functionals");
    verify->add_option("--fault-alpha-scale", alpha_scale, "multiply alpha by this factor (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*simulate) return cmd_simulate(o);
        if (*compare) return cmd_compare(o);
        if (*revenue) return cmd_revenue(o, per_path);
        if (*verify) return cmd_verify(o, alpha_scale);
    } catch (const ScenarioError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParameterError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitRuntime;
}
