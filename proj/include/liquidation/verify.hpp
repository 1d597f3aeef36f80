#pragma once

// Numerical certification of the quadratic value function
//   V(t, y) = a(t) y^2 + b(t) y + c(t),   V(T, y) = -lambda y^2
// against the Riccati system, the HJB equation, the closed-form optimal
// feedback, and the fuel-limit holdings law.
//
// With s = T - t + alpha and tau = T - t:
//   a(t) = -gamma/2 - kappa/s
//   b(t) = [(mu+B) tau^2/2 + alpha mu tau - kappa phi0^2 tau + alpha kappa phi0^2 ln(s/alpha)] / s
//   c(t) = int_t^T (1/4kappa) ((-kappa phi0^2/s + B) tau - b)^2 ds
// b is the solution of b' = (a + gamma/2)(phi0^2 tau (a + gamma/2) + B tau - b)/kappa - mu with
// b(T) = 0. The HJB bracket carries (B + (gamma/2) phi0^2)(T - t): the Ito term
// of (gamma/2) y^2 contributes the extra (gamma/2) phi0^2.
//
// The published variants (a with 1/(T-t), b = -kappa f1 with the printed f1,
// and the HJB bracket with B alone) are evaluated alongside and reported as
// informational entries.

#include <liquidation/noise.hpp>
#include <liquidation/objective.hpp>
#include <liquidation/params.hpp>
#include <liquidation/policy.hpp>
#include <liquidation/rng.hpp>
#include <liquidation/simulate.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liquidation {

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValueFunction {
public:
    /// `alpha_scale` != 1 corrupts alpha on purpose (negative-control runs).
    explicit ValueFunction(const ModelParams& p, double alpha_scale = 1.0, double quad_tol = 1e-10)
        : p_(p), d_(derive(p)), quad_tol_(quad_tol)
    {
        validate(p_);
        if (!d_.alpha) throw ParameterError("value function requires a finite terminal_penalty");
        alpha_ = *d_.alpha * alpha_scale;
    }

    const ModelParams& params() const { return p_; }
    const DerivedParams& derived() const { return d_; }
    double alpha() const { return alpha_; }

    double a(double t) const { return -0.5 * gamma() - kappa() / s(t); }
    double a_prime(double t) const { return -kappa() / (s(t) * s(t)); }

    /// Published form -gamma/2 - kappa/(T-t); singular at T.
    double a_printed(double t) const { return -0.5 * gamma() - kappa() / (p_.horizon - t); }
    double a_printed_prime(double t) const
    {
        const double tau = p_.horizon - t;
        return -kappa() / (tau * tau);
    }

    double b(double t) const { return b_numerator(t) / s(t); }
    double b_prime(double t) const
    {
        const double tau = p_.horizon - t;
        const double st = s(t);
        const double num_prime = -(mu() + B()) * tau - alpha_ * mu() + kappa() * phi0_sq() - alpha_ * kappa() * phi0_sq() / st;
        return num_prime / st + b_numerator(t) / (st * st);
    }

    /// f1 exactly as published; b_printed = -kappa f1.
    double f1_printed(double t) const
    {
        const double tau = p_.horizon - t;
        const double st = s(t);
        return -(mu() + B()) / (2.0 * kappa()) * (st - alpha_ * alpha_ / st) + phi0_sq() / st * tau
               + alpha_ * (B() * tau / kappa() + phi0_sq() / st) * std::log(st / alpha_);
    }
    double b_printed(double t) const { return -kappa() * f1_printed(t); }
    double f2(double t) const { return 1.0 / s(t) - 1.0 / alpha_; }

    double c_prime(double t) const
    {
        const double tau = p_.horizon - t;
        const double inner = (-kappa() * phi0_sq() / s(t) + B()) * tau - b(t);
        return -inner * inner / (4.0 * kappa());
    }

    /// c(t) = -int_t^T c'(s) ds by adaptive Gauss-Kronrod; throws
    /// QuadratureError when the error estimate misses the tolerance.
    double c(double t) const
    {
        if (t >= p_.horizon) return 0.0;
        double error = 0.0;
        auto integrand = [this](double u) { return -c_prime(u); };
        const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            integrand, t, p_.horizon, 20, quad_tol_, &error);
        if (!(error <= quad_tol_ * std::max(std::abs(value), 1.0)))
            throw QuadratureError("c(t) quadrature did not converge at t = " + detail::describe(t));
        return value;
    }

    double value(double t, double y) const { return a(t) * y * y + b(t) * y + c(t); }

    /// Analytic dV/dt with c' from its closed form.
    double value_time_derivative(double t, double y) const { return a_prime(t) * y * y + b_prime(t) * y + c_prime(t); }

    /// Maximizer slope: the Hamiltonian in v is v K - kappa v^2, so v* = K / (2 kappa).
    double control_slope(double t, double y) const
    {
        const double tau = p_.horizon - t;
        const double vy = 2.0 * a(t) * y + b(t);
        const double vyy = 2.0 * a(t);
        return 0.5 * phi0_sq() * tau * vyy + (B() + 0.5 * gamma() * phi0_sq()) * tau - (vy + gamma() * y);
    }

    /// Same slope with the published HJB bracket (no (gamma/2) phi0^2 tau).
    double control_slope_printed(double t, double y) const
    {
        return control_slope(t, y) - 0.5 * gamma() * phi0_sq() * (p_.horizon - t);
    }

    /// v K - kappa v^2, the quantity maximized pointwise by the optimal rate.
    double hamiltonian(double t, double y, double v) const { return v * control_slope(t, y) - kappa() * v * v; }

private:
    double s(double t) const { return p_.horizon - t + alpha_; }
    double gamma() const { return p_.permanent_impact; }
    double kappa() const { return p_.temporary_impact; }
    double mu() const { return p_.drift; }
    double B() const { return d_.risk_drift; }
    double phi0_sq() const { return p_.exec_risk_strategy * p_.exec_risk_strategy; }

    double b_numerator(double t) const
    {
        const double tau = p_.horizon - t;
        return 0.5 * (mu() + B()) * tau * tau + alpha_ * mu() * tau - kappa() * phi0_sq() * tau
               + alpha_ * kappa() * phi0_sq() * std::log(s(t) / alpha_);
    }

    ModelParams p_;
    DerivedParams d_;
    double alpha_ = 0.0;
    double quad_tol_ = 1e-10;
};

enum class Comparison { AtMost, AtLeast };

struct CheckEntry {
    std::string name;
    double value = 0.0;     // measured statistic (relative residual, |z|, ratio, ...)
    double tolerance = 0.0; // threshold the statistic is compared against
    Comparison comparison = Comparison::AtMost;
    bool informational = false; // reported, never gating
    bool passed = true;
    double at_t = std::numeric_limits<double>::quiet_NaN();
    double at_y = std::numeric_limits<double>::quiet_NaN();
    std::string note;
};

struct VerificationReport {
    std::vector<CheckEntry> entries;

    bool all_passed() const
    {
        return std::all_of(entries.begin(), entries.end(),
                           [](const CheckEntry& e) { return e.informational || e.passed; });
    }
    const CheckEntry* find(const std::string& name) const
    {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
    void append(const std::vector<CheckEntry>& more) { entries.insert(entries.end(), more.begin(), more.end()); }
};

namespace detail {

inline CheckEntry gate(std::string name, double value, double tolerance, Comparison cmp = Comparison::AtMost)
{
    CheckEntry e;
    e.name = std::move(name);
    e.value = value;
    e.tolerance = tolerance;
    e.comparison = cmp;
    e.passed = cmp == Comparison::AtMost ? value <= tolerance : value >= tolerance;
    if (std::isnan(value)) e.passed = false;
    return e;
}

inline CheckEntry info(std::string name, double value, std::string note)
{
    CheckEntry e;
    e.name = std::move(name);
    e.value = value;
    e.informational = true;
    e.note = std::move(note);
    return e;
}

/// Fourth-order central difference with step h.
template <class F>
double derivative5(const F& f, double t, double h)
{
    return (f(t - 2.0 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2.0 * h)) / (12.0 * h);
}

/// Tracks max |residual| / scale where scale is the largest term magnitude seen.
class ResidualTracker {
public:
    void observe(double residual, std::initializer_list<double> terms, double t, double y = std::nan(""))
    {
        for (double x : terms) scale_ = std::max(scale_, std::abs(x));
        if (std::abs(residual) > max_abs_ || std::isnan(residual)) {
            max_abs_ = std::isnan(residual) ? std::numeric_limits<double>::infinity() : std::abs(residual);
            at_t_ = t;
            at_y_ = y;
        }
    }
    double relative() const { return scale_ > 0.0 ? max_abs_ / scale_ : max_abs_; }
    double at_t() const { return at_t_; }
    double at_y() const { return at_y_; }

private:
    double max_abs_ = 0.0;
    double scale_ = 0.0;
    double at_t_ = std::nan("");
    double at_y_ = std::nan("");
};

inline std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return out;
}

} // namespace detail

/// Riccati system on [0, T - 10 alpha] by fourth-order central differences
/// of the closed forms, plus the final conditions at T.
inline std::vector<CheckEntry> check_riccati(const ValueFunction& vf, int n_points = 10000, double tol = 1e-6)
{
    const auto& p = vf.params();
    const double kappa = p.temporary_impact;
    const double half_gamma = 0.5 * p.permanent_impact;
    const double phi0_sq = p.exec_risk_strategy * p.exec_risk_strategy;
    const double B = vf.derived().risk_drift;
    const double t_end = p.horizon - 10.0 * vf.alpha();
    const double true_alpha = *vf.derived().alpha;

    detail::ResidualTracker ra, rb, rb_printed, ra_printed;
    auto a_fn = [&](double t) { return vf.a(t); };
    auto b_fn = [&](double t) { return vf.b(t); };
    auto bp_fn = [&](double t) { return vf.b_printed(t); };
    auto ap_fn = [&](double t) { return vf.a_printed(t); };

    auto b_rhs = [&](double t, double a, double b, double& t1, double& t2, double& t3) {
        const double tau = p.horizon - t;
        const double shifted = a + half_gamma;
        t1 = shifted * phi0_sq * tau * shifted / kappa;
        t2 = shifted * B * tau / kappa;
        t3 = -shifted * b / kappa;
        return t1 + t2 + t3 - p.drift;
    };

    for (double t : detail::linspace(0.0, t_end, n_points)) {
        const double h = 1e-3 * (p.horizon - t + vf.alpha());
        const double a = vf.a(t);
        const double da = detail::derivative5(a_fn, t, h);
        const double rhs_a = -(a + half_gamma) * (a + half_gamma) / kappa;
        ra.observe(da - rhs_a, {da, rhs_a}, t);

        double t1, t2, t3;
        const double db = detail::derivative5(b_fn, t, h);
        const double rhs_b = b_rhs(t, a, vf.b(t), t1, t2, t3);
        rb.observe(db - rhs_b, {db, t1, t2, t3, p.drift}, t);

        const double dbp = detail::derivative5(bp_fn, t, h);
        const double rhs_bp = b_rhs(t, a, vf.b_printed(t), t1, t2, t3);
        rb_printed.observe(dbp - rhs_bp, {dbp, t1, t2, t3, p.drift}, t);

        const double hp = 1e-3 * (p.horizon - t);
        const double ap = vf.a_printed(t);
        const double dap = detail::derivative5(ap_fn, t, hp);
        const double rhs_ap = -(ap + half_gamma) * (ap + half_gamma) / kappa;
        ra_printed.observe(dap - rhs_ap, {dap, rhs_ap}, t);
    }

    std::vector<CheckEntry> out;
    auto e = detail::gate("riccati_a", ra.relative(), tol);
    e.at_t = ra.at_t();
    out.push_back(e);
    e = detail::gate("riccati_b", rb.relative(), tol);
    e.at_t = rb.at_t();
    out.push_back(e);

    const double lambda = p.terminal_penalty.value();
    e = detail::gate("final_a", std::abs(vf.a(p.horizon) + lambda) / lambda, 1e-12);
    e.at_t = p.horizon;
    e.note = "|a(T) + lambda| / lambda";
    if (vf.alpha() != true_alpha) e.note += "; alpha corrupted";
    out.push_back(e);
    e = detail::gate("final_b", std::abs(vf.b(p.horizon)), 0.0);
    e.at_t = p.horizon;
    out.push_back(e);

    out.push_back(detail::info("riccati_a_published", ra_printed.relative(),
                               "a = -gamma/2 - kappa/(T-t) solves the a-equation but a(T-) diverges instead of "
                               "meeting a(T) = -lambda; a(T-10alpha) = "
                                   + detail::describe(vf.a_printed(t_end))));
    out.push_back(detail::info("riccati_b_published_f1", rb_printed.relative(),
                               "b = -kappa f1 with the published f1; relative residual of the b-equation"));
    return out;
}

/// HJB residual on an nt x ny grid over [0, t_max] x [y_min, y_max], the
/// final condition, the time derivative of V including the quadrature c(t),
/// and monotonicity of c.
inline std::vector<CheckEntry> check_hjb(const ValueFunction& vf, int nt = 200, int ny = 200, double t_max_fraction = 0.99,
                                         double y_min = std::nan(""), double y_max = std::nan(""),
                                         double tol = 1e-6)
{
    const auto& p = vf.params();
    const double kappa = p.temporary_impact;
    if (std::isnan(y_min)) y_min = -p.initial_shares;
    if (std::isnan(y_max)) y_max = p.initial_shares;

    const auto ts = detail::linspace(0.0, t_max_fraction * p.horizon, nt);
    const auto ys = detail::linspace(y_min, y_max, ny);

    std::vector<double> c_values(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) c_values[i] = vf.c(ts[i]);

    detail::ResidualTracker hjb, hjb_printed, dvdt;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double t = ts[i];
        const double h = 1e-4 * (p.horizon - t + vf.alpha());
        const double c_lo = vf.c(t - h);
        const double c_hi = vf.c(t + h);
        for (double y : ys) {
            const double vt = vf.value_time_derivative(t, y);
            const double k = vf.control_slope(t, y);
            const double gain = k * k / (4.0 * kappa);
            hjb.observe(vt + gain + p.drift * y, {vt, gain, p.drift * y}, t, y);

            const double kp = vf.control_slope_printed(t, y);
            const double gain_p = kp * kp / (4.0 * kappa);
            hjb_printed.observe(vt + gain_p + p.drift * y, {vt, gain_p, p.drift * y}, t, y);

            const double v_lo = vf.a(t - h) * y * y + vf.b(t - h) * y + c_lo;
            const double v_hi = vf.a(t + h) * y * y + vf.b(t + h) * y + c_hi;
            const double fd = (v_hi - v_lo) / (2.0 * h);
            dvdt.observe(fd - vt, {fd, vt, gain, p.drift * y}, t, y);
        }
    }

    std::vector<CheckEntry> out;
    auto e = detail::gate("hjb", hjb.relative(), tol);
    e.at_t = hjb.at_t();
    e.at_y = hjb.at_y();
    out.push_back(e);

    e = detail::gate("hjb_time_derivative", dvdt.relative(), tol);
    e.at_t = dvdt.at_t();
    e.at_y = dvdt.at_y();
    e.note = "central difference of V with c(t) by quadrature vs analytic dV/dt";
    out.push_back(e);

    const double lambda = p.terminal_penalty.value();
    double final_worst = 0.0;
    for (double y : {-p.initial_shares, 0.0, p.initial_shares}) {
        const double r = vf.value(p.horizon, y) + lambda * y * y;
        final_worst = std::max(final_worst, std::abs(r) / std::max(lambda * y * y, 1.0));
    }
    e = detail::gate("hjb_final_condition", final_worst, 1e-12);
    e.at_t = p.horizon;
    out.push_back(e);

    double worst_increase = 0.0;
    double min_c = 0.0;
    for (std::size_t i = 0; i + 1 < c_values.size(); ++i)
        worst_increase = std::max(worst_increase, c_values[i + 1] - c_values[i]);
    for (double c : c_values) min_c = std::min(min_c, c);
    e = detail::gate("c_monotone", std::max(worst_increase, -min_c), 0.0);
    e.note = "max increase of c along the grid and max negative excursion";
    out.push_back(e);

    auto pe = detail::info("hjb_published", hjb_printed.relative(),
                           "relative residual with the published bracket (B only, no (gamma/2)phi0^2 term)");
    pe.at_t = hjb_printed.at_t();
    pe.at_y = hjb_printed.at_y();
    out.push_back(pe);
    return out;
}

/// Pointwise: numeric maximization of the Hamiltonian v K - kappa v^2 at
/// random (t, y) must land on rate_penalized, and v* must beat v* +/- delta.
inline std::vector<CheckEntry> check_argmax_consistency(const ValueFunction& vf, int n_points = 100, double tol = 1e-6,
                                                        std::uint64_t seed = 0x5eed, double t_max_fraction = 0.99)
{
    const auto& p = vf.params();
    const auto key = key_from_seed(seed);
    double worst = 0.0, worst_t = 0.0, worst_y = 0.0;
    double worst_printed_gap = 0.0;
    int local_failures = 0;
    for (int i = 0; i < n_points; ++i) {
        const auto w = Philox4x32::generate({static_cast<std::uint32_t>(i), 0u, 0u, 7u}, key);
        const double t = to_unit_interval(w[0], w[1]) * t_max_fraction * p.horizon;
        const double y = (2.0 * to_unit_interval(w[2], w[3]) - 1.0) * p.initial_shares;

        auto loss = [&](double v) { return -vf.hamiltonian(t, y, v); };
        double bound = 1.0;
        while (loss(bound) < loss(0.0) || loss(-bound) < loss(0.0)) bound *= 2.0;
        const auto [v_num, loss_min] =
            boost::math::tools::brent_find_minima(loss, -bound, bound, std::numeric_limits<double>::digits / 2);
        (void)loss_min;

        DerivedParams d = vf.derived();
        d.alpha = vf.alpha();
        const double v_star = rate_penalized(p, d, t, y);
        const double gap = std::abs(v_num - v_star) / (1.0 + std::abs(v_star));
        if (gap > worst) {
            worst = gap;
            worst_t = t;
            worst_y = y;
        }
        const double delta = 1e-3 * (1.0 + std::abs(v_star));
        if (!(loss(v_star) < loss(v_star + delta) && loss(v_star) < loss(v_star - delta))) ++local_failures;

        const double v_printed = vf.control_slope_printed(t, y) / (2.0 * p.temporary_impact);
        worst_printed_gap = std::max(worst_printed_gap, std::abs(v_printed - v_star) / (1.0 + std::abs(v_star)));
    }
    std::vector<CheckEntry> out;
    auto e = detail::gate("argmax_consistency", worst, tol);
    e.at_t = worst_t;
    e.at_y = worst_y;
    out.push_back(e);
    e = detail::gate("argmax_local_optimality", local_failures, 0.0);
    e.note = "points where v* +/- 1e-3(1+|v*|) did better";
    out.push_back(e);
    out.push_back(detail::info("argmax_published_hjb", worst_printed_gap,
                               "max relative gap between the published-HJB maximizer and rate_penalized"));
    return out;
}

struct FuelLimitStudy {
    int n_paths = 10000;
    int n_steps = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::vector<double> checkpoints = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    double z_tolerance = 3.0;
    double rms_ratio_min = 1.4;
};

struct HoldingsStatistics {
    std::vector<double> times, mean, se;
    double terminal_rms = 0.0;
};

/// Monte Carlo mean and standard error of y at grid nodes nearest to `times`,
/// plus the RMS of y(T).
inline HoldingsStatistics holdings_statistics(const Policy& policy, const ModelParams& market, const NoisePlan& plan,
                                              const std::vector<double>& times, unsigned threads)
{
    const TimeGrid grid{market.horizon, plan.n_steps};
    std::vector<int> nodes;
    for (double t : times) nodes.push_back(static_cast<int>(std::lround(t / grid.dt())));
    std::vector<std::vector<double>> samples(nodes.size());
    CompensatedSum terminal_sq;
    for_each_path(policy, market, plan, 0, static_cast<std::uint64_t>(plan.n_paths), threads, [&](const PathRecord& rec) {
        for (std::size_t j = 0; j < nodes.size(); ++j) samples[j].push_back(rec.y[nodes[j]]);
        const double yN = rec.y.back();
        terminal_sq.add(yN * yN);
    });
    HoldingsStatistics st;
    const double n = plan.n_paths;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        CompensatedSum s;
        for (double x : samples[j]) s.add(x);
        const double mean = s.value() / n;
        CompensatedSum sq;
        for (double x : samples[j]) sq.add((x - mean) * (x - mean));
        st.times.push_back(grid.time(nodes[j]));
        st.mean.push_back(mean);
        st.se.push_back(n > 1 ? std::sqrt(sq.value() / (n - 1) / n) : 0.0);
    }
    st.terminal_rms = std::sqrt(terminal_sq.value() / n);
    return st;
}

/// Fuel-limit law: mean holdings against E[y*(t)] at the checkpoints, and
/// shrinkage of the terminal RMS when dt halves.
inline std::vector<CheckEntry> check_fuel_limit_statistics(const ModelParams& market, const FuelLimitStudy& study)
{
    const ModelParams fuel = with_fuel_limit(market);
    const Policy policy(PolicyKind::FuelLimitOptimal, fuel);
    const DerivedParams d = derive(fuel);
    const NoisePlan fine{study.seed, study.n_steps, study.n_paths, market.correlation};
    const auto st = holdings_statistics(policy, market, fine, study.checkpoints, study.threads);

    std::vector<CheckEntry> out;
    for (std::size_t j = 0; j < st.times.size(); ++j) {
        const double t = st.times[j];
        const double expected = expected_holdings_fuel_limit(fuel, d, t);
        const double gap = st.mean[j] - expected;
        CheckEntry e;
        if (st.se[j] == 0.0) {
            e = detail::gate(fmt::format("fuel_mean_t={:g}", t), std::abs(gap), 0.0);
            e.note = "zero standard error: exact match required";
        } else {
            e = detail::gate(fmt::format("fuel_mean_t={:g}", t), std::abs(gap) / st.se[j], study.z_tolerance);
            e.note = "|z| of MC mean vs E[y*(t)]; mean " + detail::describe(st.mean[j]) + ", expected "
                     + detail::describe(expected) + ", se " + detail::describe(st.se[j]);
        }
        e.at_t = t;
        out.push_back(e);
    }

    NoisePlan coarse = fine;
    coarse.n_steps = study.n_steps / 2;
    const auto st_coarse = holdings_statistics(policy, market, coarse, {}, study.threads);
    const double ratio = st_coarse.terminal_rms / st.terminal_rms;
    auto e = detail::gate("fuel_terminal_rms_ratio", ratio, study.rms_ratio_min, Comparison::AtLeast);
    e.at_t = market.horizon;
    e.note = "terminal RMS " + detail::describe(st_coarse.terminal_rms) + " at dt = "
             + detail::describe(market.horizon / coarse.n_steps) + " vs " + detail::describe(st.terminal_rms)
             + " at dt = " + detail::describe(market.horizon / fine.n_steps);
    out.push_back(e);
    return out;
}

struct VerifySettings {
    ModelParams params;
    FuelLimitStudy fuel;
    int riccati_points = 10000;
    int hjb_t_points = 200;
    int hjb_y_points = 200;
    int argmax_points = 100;
    double tolerance = 1e-6;
    double quadrature_tolerance = 1e-10;
    double alpha_scale = 1.0;
};

/// Finite lambda runs every check; the fuel limit runs only the statistics.
inline VerificationReport run_verification_suite(const VerifySettings& s)
{
    VerificationReport report;
    if (s.params.terminal_penalty.is_finite()) {
        const ValueFunction vf(s.params, s.alpha_scale, s.quadrature_tolerance);
        report.append(check_riccati(vf, s.riccati_points, s.tolerance));
        report.append(check_hjb(vf, s.hjb_t_points, s.hjb_y_points, 0.99, std::nan(""), std::nan(""), s.tolerance));
        report.append(check_argmax_consistency(vf, s.argmax_points, s.tolerance, s.fuel.seed));
    }
    report.append(check_fuel_limit_statistics(s.params, s.fuel));
    return report;
}

} // namespace liquidation
