#include "flns/solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <utility>

#include "flns/errors.hpp"
#include "flns/fft.hpp"

namespace flns {
namespace {

int ceil_ratio(int d, double p) {
    return static_cast<int>(std::ceil(static_cast<double>(d) / p - 1e-9));
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

Regime regime_of(const RunConfig& cfg) {
    if (cfg.p == 1.0) return Regime::p_one;
    if (cfg.p <= static_cast<double>(cfg.d)) return Regime::low_p;
    return Regime::high_p;
}

double effective_s_aux(const RunConfig& cfg) {
    return cfg.s_aux > 0.0 ? cfg.s_aux : static_cast<double>(cfg.d) - 0.5;
}

double regime_alpha(const RunConfig& cfg) {
    switch (regime_of(cfg)) {
        case Regime::low_p:
            return ceil_ratio(cfg.d, cfg.p) - cfg.d / cfg.p_tilde;
        case Regime::high_p:
            return 1.0 - cfg.d / cfg.p_tilde;
        case Regime::p_one:
            return effective_s_aux(cfg) + 1.0 - cfg.d;
    }
    return 0.0;
}

NormSpec aux_norm_spec(const RunConfig& cfg) {
    NormSpec spec;
    spec.r = kInf;
    switch (regime_of(cfg)) {
        case Regime::low_p:
            spec.s = ceil_ratio(cfg.d, cfg.p) - 1;
            spec.p = cfg.p_tilde;
            break;
        case Regime::high_p:
            spec.s = 0.0;
            spec.p = cfg.p_tilde;
            break;
        case Regime::p_one:
            spec.s = effective_s_aux(cfg);
            spec.p = 1.0;
            break;
    }
    return spec;
}

NormSpec critical_norm_spec(const RunConfig& cfg) {
    NormSpec spec;
    spec.s = cfg.d / cfg.p - 1.0;
    spec.p = cfg.p;
    spec.r = cfg.r;
    // p = 1 with finite fine index is the divergent Lorentz pair; report the
    // sup surrogate instead of a wall of infinities.
    if (cfg.p == 1.0 && cfg.r != kInf) spec.policy = InfinityPolicy::sup_surrogate;
    return spec;
}

void validate_config(const RunConfig& cfg) {
    Grid g{cfg.d, cfg.n, cfg.L}; // throws on bad grid parameters
    (void)g;
    if (!(cfg.p >= 1.0) || !std::isfinite(cfg.p))
        throw ConfigError("integrability p must satisfy 1 <= p < infinity; got p = " + fmt(cfg.p));
    if (!(cfg.r >= 1.0) || !std::isfinite(cfg.r))
        throw ConfigError("fine index r must satisfy 1 <= r < infinity; got r = " + fmt(cfg.r));
    if (!(cfg.T > 0.0)) throw ConfigError("horizon T must be > 0; got T = " + fmt(cfg.T));
    if (cfg.M < 1) throw ConfigError("time steps M must be >= 1; got M = " + std::to_string(cfg.M));
    if (!(cfg.gamma > 0.0)) throw ConfigError("grading gamma must be > 0; got gamma = " + fmt(cfg.gamma));
    if (!(cfg.tol > 0.0)) throw ConfigError("tol must be > 0; got tol = " + fmt(cfg.tol));
    if (cfg.max_iter < 1) throw ConfigError("max_iter must be >= 1; got " + std::to_string(cfg.max_iter));
    if (cfg.eta_trials < 0) throw ConfigError("eta_trials must be >= 0; got " + std::to_string(cfg.eta_trials));
    if (!(cfg.limit_fraction > 0.0 && cfg.limit_fraction <= 1.0))
        throw ConfigError("limit_fraction must lie in (0, 1]; got " + fmt(cfg.limit_fraction));
    if (cfg.initial.kind != "taylor-green" && cfg.initial.kind != "random-divfree")
        throw ConfigError("initial kind must be taylor-green or random-divfree; got '" + cfg.initial.kind + "'");
    if (cfg.initial.kind == "taylor-green" && cfg.d != 2)
        throw ConfigError("taylor-green initial data requires d = 2; got d = " + std::to_string(cfg.d));
    if (!(cfg.initial.amp >= 0.0) || !std::isfinite(cfg.initial.amp))
        throw ConfigError("initial amplitude must be finite and >= 0; got " + fmt(cfg.initial.amp));
    if (cfg.initial.slope < 0.0)
        throw ConfigError("initial slope must be >= 0 (0 selects the default d - 1); got " + fmt(cfg.initial.slope));

    const double d = cfg.d;
    // At p = d the two integrability regimes overlap and either auxiliary
    // window qualifies; their union is p_tilde > d (the alpha and auxiliary
    // space formulas coincide there).
    if (cfg.p == d) {
        if (!std::isfinite(cfg.p_tilde) || !(cfg.p_tilde > cfg.p))
            throw ConfigError("auxiliary window (p = d): need p_tilde > p = " + fmt(cfg.p) +
                              "; got p_tilde = " + fmt(cfg.p_tilde));
        aux_norm_spec(cfg).validate();
        critical_norm_spec(cfg).validate();
        return;
    }
    switch (regime_of(cfg)) {
        case Regime::low_p: {
            const int m = ceil_ratio(cfg.d, cfg.p);
            if (!(cfg.p_tilde > 0.0) || !std::isfinite(cfg.p_tilde))
                throw ConfigError("p_tilde must be finite and > 0; got " + fmt(cfg.p_tilde));
            const double inv = 1.0 / cfg.p_tilde;
            const double lo = 1.0 / (2.0 * cfg.p) + (m - 1) / (2.0 * d);
            const double hi = std::min(m / d, 0.5 + (m - 1) / (2.0 * d));
            if (!(inv > lo))
                throw ConfigError("auxiliary window (1 < p <= d): need 1/p_tilde > 1/(2p) + (ceil(d/p)-1)/(2d) = " +
                                  fmt(lo) + "; got 1/p_tilde = " + fmt(inv) + " (p_tilde = " + fmt(cfg.p_tilde) + ")");
            if (!(inv < hi))
                throw ConfigError("auxiliary window (1 < p <= d): need 1/p_tilde < min(ceil(d/p)/d, 1/2 + (ceil(d/p)-1)/(2d)) = " +
                                  fmt(hi) + "; got 1/p_tilde = " + fmt(inv) + " (p_tilde = " + fmt(cfg.p_tilde) + ")");
            break;
        }
        case Regime::high_p:
            if (!std::isfinite(cfg.p_tilde) || !(cfg.p_tilde > cfg.p))
                throw ConfigError("auxiliary window (p > d): need p_tilde > p = " + fmt(cfg.p) +
                                  "; got p_tilde = " + fmt(cfg.p_tilde));
            break;
        case Regime::p_one: {
            const double s = effective_s_aux(cfg);
            if (!(s > d - 1.0) || !(s < d))
                throw ConfigError("auxiliary window (p = 1): need d - 1 < s_aux < d, i.e. " + fmt(d - 1.0) +
                                  " < s_aux < " + fmt(d) + "; got s_aux = " + fmt(s));
            break;
        }
    }
    aux_norm_spec(cfg).validate();
    critical_norm_spec(cfg).validate();
}

SpectralField make_initial_data(const RunConfig& cfg) {
    Grid g{cfg.d, cfg.n, cfg.L};
    if (cfg.initial.kind == "taylor-green") return taylor_green(g, cfg.initial.amp);
    if (cfg.initial.kind == "random-divfree") {
        FieldSampler s;
        s.grid = g;
        s.components = cfg.d;
        s.envelope = cfg.initial.slope > 0.0 ? cfg.initial.slope : static_cast<double>(cfg.d) - 1.0;
        s.divergence_free = true;
        s.amplitude = cfg.initial.amp;
        s.seed = cfg.initial.seed;
        return sample_field(s);
    }
    throw ConfigError("initial kind must be taylor-green or random-divfree; got '" + cfg.initial.kind + "'");
}

double caloric_smallness(const SpectralField& u0, const RunConfig& cfg) {
    const auto times = graded_times(cfg.T, cfg.M, cfg.gamma);
    const Trajectory y = heat_trajectory(u0, times);
    return weighted_sup_norm(y, aux_norm_spec(cfg), 0.5 * regime_alpha(cfg)).value;
}

EtaEstimate estimate_nse_eta(const RunConfig& cfg, int trials, std::uint64_t seed) {
    const Grid g{cfg.d, cfg.n, cfg.L};
    const auto times = graded_times(cfg.T, cfg.M, cfg.gamma);
    const NormSpec aux = aux_norm_spec(cfg);
    const double w = 0.5 * regime_alpha(cfg);

    auto norm = [&](const Trajectory& x) { return weighted_sup_norm(x, aux, w).value; };
    auto bilin = [&](const Trajectory& a, const Trajectory& b) { return bilinear_B(a, b, cfg.quadrature); };
    auto scale = [](double s, const Trajectory& x) { return scale_trajectory(s, x); };
    // Band n/6 keeps quadratic interactions inside the retained spectrum, so
    // the estimate probes the operator rather than the dealiasing filter.
    auto sampler = [&](int stream) {
        FieldSampler s;
        s.grid = g;
        s.components = cfg.d;
        s.envelope = static_cast<double>(cfg.d) - 1.0;
        s.band = std::max(1, cfg.n / 6);
        s.divergence_free = true;
        s.seed = mix_seed(seed, static_cast<std::uint64_t>(stream));
        return heat_trajectory(sample_field(s), times);
    };
    return estimate_bilinear_bound<Trajectory>(bilin, norm, scale, sampler, trials);
}

std::pair<Trajectory, SolveReport> run_mild_solution(const RunConfig& cfg, const SpectralField& u0) {
    const auto t_start = std::chrono::steady_clock::now();
    validate_config(cfg);
    if (u0.grid.d != cfg.d || u0.grid.n != cfg.n || u0.grid.L != cfg.L)
        throw ConfigError("initial datum grid does not match the configured grid");
    if (u0.components != cfg.d)
        throw ConfigError("initial datum must have d = " + std::to_string(cfg.d) + " components; got " +
                          std::to_string(u0.components));

    // The iteration lives in the mean-free divergence-free class; projecting
    // is a no-op on data already there.
    SpectralField v0 = u0;
    v0.zero_mean();
    v0 = leray_project(v0);

    const auto times = graded_times(cfg.T, cfg.M, cfg.gamma);
    const NormSpec aux = aux_norm_spec(cfg);
    const NormSpec crit = critical_norm_spec(cfg);
    const double alpha = regime_alpha(cfg);
    const double w = 0.5 * alpha;

    const Trajectory y = heat_trajectory(v0, times);

    auto norm = [&](const Trajectory& x) { return weighted_sup_norm(x, aux, w).value; };
    auto bilin = [&](const Trajectory& a, const Trajectory& b) { return bilinear_B(a, b, cfg.quadrature); };
    auto sub = [](const Trajectory& a, const Trajectory& b) { return a - b; };

    SolveReport rep;
    rep.alpha = alpha;
    rep.caloric = weighted_sup_norm(y, aux, w).value;
    rep.lorentz_surrogate_used = crit.policy == InfinityPolicy::sup_surrogate;

    std::optional<double> eta;
    if (cfg.eta_trials > 0) {
        const EtaEstimate est = estimate_nse_eta(cfg, cfg.eta_trials, mix_seed(cfg.initial.seed, 0x0e7a));
        if (est.eta_hat > 0.0) {
            eta = est.eta_hat;
            rep.eta_hat = est.eta_hat;
            rep.threshold = 1.0 / (4.0 * est.eta_hat);
            rep.below_threshold = rep.caloric <= rep.threshold;
        }
    }

    auto [x, picard] = solve_quadratic_fixed_point<Trajectory>(y, bilin, norm, sub, eta, cfg.tol, cfg.max_iter);
    rep.picard = picard;

    rep.table.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        SolveRow row;
        row.t = times[i];
        const double aux_val = sfl_norm_ex(x.fields[i], aux).value;
        row.weighted_norm = row.t > 0.0 ? std::pow(row.t, w) * aux_val : (w == 0.0 ? aux_val : 0.0);
        row.critical_norm = sfl_norm_ex(x.fields[i], crit).value;
        row.div_residual = divergence_residual(x.fields[i]);
        if (row.div_residual > rep.div_residual_max) rep.div_residual_max = row.div_residual;
        if (row.critical_norm > rep.critical_sup) rep.critical_sup = row.critical_norm;
        rep.table.push_back(row);
    }

    const WeightedSup ws = weighted_sup_norm(x, aux, w);
    rep.limit_condition_ok = ws.value == 0.0 || ws.earliest_value <= cfg.limit_fraction * ws.value;

    if (picard.verdict == PicardVerdict::diverged) {
        // First time sample whose coefficients went non-finite; if the norms
        // merely grew without overflow, point at the weighted-norm argmax.
        rep.blowup_time = ws.argmax_time;
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (!std::isfinite(x.fields[i].max_abs())) {
                rep.blowup_time = times[i];
                break;
            }
        }
    }

    if (picard.verdict == PicardVerdict::converged) {
        const Trajectory resid = sub(x, sub(y, bilin(x, x)));
        rep.mild_residual = weighted_sup_norm(resid, aux, w).value;
    }

    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return {std::move(x), std::move(rep)};
}

std::pair<Trajectory, SolveReport> run_mild_solution(const RunConfig& cfg) {
    validate_config(cfg);
    return run_mild_solution(cfg, make_initial_data(cfg));
}

std::vector<SweepPoint> amplitude_sweep(const RunConfig& cfg, const SpectralField& u0_unit,
                                        const std::vector<double>& amps) {
    std::vector<SweepPoint> out;
    out.reserve(amps.size());
    for (double a : amps) {
        SweepPoint pt;
        pt.amp = a;
        auto [x, rep] = run_mild_solution(cfg, a * u0_unit);
        (void)x;
        // ||B(y, y)|| / ||y||: the relative size of the first correction.
        // B is exactly bilinear, so for a fixed unit datum this is linear in
        // the amplitude.
        if (!rep.picard.diff_norms.empty() && rep.picard.y_norm > 0.0)
            pt.first_ratio = rep.picard.diff_norms.front() / rep.picard.y_norm;
        pt.report = std::move(rep);
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace flns
