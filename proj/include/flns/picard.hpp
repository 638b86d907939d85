#pragma once
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flns {

// Quadratic fixed-point engine for x = y - B(x, x) in any normed space,
// following the small-data contraction scheme: if ||B(x,y)|| <= eta ||x|| ||y||
// and ||y|| <= 1/(4 eta), the iteration converges to the unique solution with
// ||x|| <= 1/(2 eta).

enum class PicardVerdict { converged, diverged, max_iter };

struct PicardReport {
    PicardVerdict verdict = PicardVerdict::max_iter;
    int iterations = 0;
    double tol = 0.0;
    double y_norm = 0.0;
    double final_norm = 0.0;
    std::vector<double> iterate_norms; // ||x_0||, ||x_1||, ...
    std::vector<double> diff_norms;    // ||x_{k+1} - x_k||
    std::vector<double> ratios;        // diff_norms[k] / diff_norms[k-1]
    std::optional<double> eta_used;
    std::optional<bool> threshold_check; // ||y|| <= 1/(4 eta)
    std::optional<bool> bound_check;     // final norm <= 1/(2 eta) + tol
    std::optional<int> failure_index;    // first non-finite iterate
};

inline const char* to_string(PicardVerdict v) {
    switch (v) {
        case PicardVerdict::converged: return "converged";
        case PicardVerdict::diverged: return "diverged";
        case PicardVerdict::max_iter: return "max_iter";
    }
    return "unknown";
}

inline constexpr double kInfRatio = 1e300;

// B(x, x) via `bilin`, subtraction via `sub(a, b) = a - b`, norm via `norm`.
// Stops when ||x_{k+1} - x_k|| <= tol * max(1, ||y||).  Divergence is a
// diagnostic verdict: a non-finite norm, or three consecutive ratios >= 1
// with growing differences.
template <class X, class BilinFn, class NormFn, class SubFn>
std::pair<X, PicardReport> solve_quadratic_fixed_point(const X& y, BilinFn&& bilin, NormFn&& norm,
                                                       SubFn&& sub, std::optional<double> eta,
                                                       double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve_quadratic_fixed_point: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("solve_quadratic_fixed_point: max_iter must be >= 1");

    PicardReport rep;
    rep.tol = tol;
    rep.eta_used = eta;
    rep.y_norm = norm(y);
    rep.iterate_norms.push_back(rep.y_norm);

    X x = y;
    if (!std::isfinite(rep.y_norm)) {
        rep.verdict = PicardVerdict::diverged;
        rep.failure_index = 0;
        rep.final_norm = rep.y_norm;
        return {std::move(x), rep};
    }

    double stop = tol * std::max(1.0, rep.y_norm);
    int growing = 0;

    for (int k = 1; k <= max_iter; ++k) {
        X next = sub(y, bilin(x, x));
        double diff = norm(sub(next, x));
        double xn = norm(next);
        rep.diff_norms.push_back(diff);
        rep.iterate_norms.push_back(xn);
        rep.iterations = k;
        if (rep.diff_norms.size() >= 2) {
            double prev = rep.diff_norms[rep.diff_norms.size() - 2];
            double ratio = prev > 0.0 ? diff / prev : (diff > 0.0 ? kInfRatio : 0.0);
            rep.ratios.push_back(ratio);
            growing = (ratio >= 1.0 && diff > prev) ? growing + 1 : 0;
        }
        x = std::move(next);
        rep.final_norm = xn;
        if (!std::isfinite(diff) || !std::isfinite(xn)) {
            rep.verdict = PicardVerdict::diverged;
            rep.failure_index = k;
            break;
        }
        if (diff <= stop) {
            rep.verdict = PicardVerdict::converged;
            break;
        }
        if (growing >= 3) {
            rep.verdict = PicardVerdict::diverged;
            break;
        }
        if (k == max_iter) rep.verdict = PicardVerdict::max_iter;
    }

    if (eta) {
        rep.threshold_check = rep.y_norm <= 1.0 / (4.0 * *eta);
        rep.bound_check = rep.final_norm <= 1.0 / (2.0 * *eta) + tol;
    }
    return {std::move(x), rep};
}

struct EtaEstimate {
    double eta_hat = 0.0;
    int trials = 0;
    int skipped = 0; // zero-norm samples
};

// Empirical bilinear bound: max over sampled pairs of ||B(u/||u||, v/||v||)||.
template <class X, class BilinFn, class NormFn, class ScaleFn, class SamplerFn>
EtaEstimate estimate_bilinear_bound(BilinFn&& bilin, NormFn&& norm, ScaleFn&& scale,
                                    SamplerFn&& sampler, int trials) {
    if (trials < 1) throw std::invalid_argument("estimate_bilinear_bound: trials must be >= 1");
    EtaEstimate est;
    est.trials = trials;
    for (int i = 0; i < trials; ++i) {
        X u = sampler(2 * i);
        X v = sampler(2 * i + 1);
        double nu = norm(u);
        double nv = norm(v);
        if (nu == 0.0 || nv == 0.0) {
            ++est.skipped;
            continue;
        }
        double b = norm(bilin(scale(1.0 / nu, u), scale(1.0 / nv, v)));
        if (b > est.eta_hat) est.eta_hat = b;
    }
    return est;
}

} // namespace flns
