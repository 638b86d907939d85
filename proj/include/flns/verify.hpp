#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flns/field.hpp"
#include "flns/lorentz_norms.hpp"

namespace flns {

// Randomized verification harness: ratio suites (inequalities with unknown
// constants -> finiteness plus grid stability), identity suites (exact
// constants), exponent suites (log-log slope fits against analytic targets),
// and the spectral tail suite.

struct SuiteOptions {
    int n = 32;
    int d = 2;
    double L = kTwoPi;
    int trials = 100;
    std::uint64_t seed = 1;

    double p = 2.0;       // integrability knob (heat_decay*, nesting, classical)
    double r = 2.0;       // Lorentz fine index where applicable
    double p_tilde = 4.0; // heat_decay* target integrability
    double s_aux = 1.5;   // caloric_1 auxiliary regularity

    // sobolev ratio suite: || u ||_{(s_to, q_to, r)} <= C || u ||_{(s_from, q_from, r)}
    double s_from = 1.0;
    double q_from = 2.0;
    double s_to = 0.5;
    double q_to = 4.0;

    // product ratio suite: k-th order Leibniz estimate at integrability prod_p
    int k = 1;
    double prod_p = 1.5;
};

struct SuiteResult {
    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<double> xs;     // fit abscissae (exponent / tail suites)
    std::vector<double> values; // per-trial ratios or fit ordinates
    double empirical_max = 0.0;
    double median = 0.0;
    std::optional<double> fitted_exponent;
    std::optional<double> target_exponent;
    std::optional<double> tolerance;
    bool pass = false;
    std::string detail;
};

// Inequality suites with unknowable constants; pass = all ratios finite and
// the empirical max drifts <= x2 between grid n and 2n (both directions).
// Names: holder, young, sobolev, product, nesting, classical.
SuiteResult run_ratio_suite(const std::string& name, const SuiteOptions& opt);

// Exact-constant suites; pass = zero violations at the stated tolerance.
// Names: lpp (1e-12), heat (ratio <= 1 + 1e-12), deriv_equiv (1e-10).
SuiteResult run_identity_suite(const std::string& name, const SuiteOptions& opt);

// Slope-fit suites; pass = |fitted - target| <= tolerance.
// Names: kernel_scaling (0.02), heat_decay, heat_decay_p_ge_d, caloric_1
// (0.05), beta_integral (constancy 1e-6).
SuiteResult run_exponent_suite(const std::string& name, const SuiteOptions& opt);

// Truncated spectral tails: nonincreasing in the radius, exactly zero past
// the band limit, and the heavy-tail synthetic profile decays at its
// closed-form rate d/q - a within 0.05.
SuiteResult run_tail_suite(const SuiteOptions& opt);

// Dispatch by suite name across the four families ("tail" included).
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();

// Pointwise physical product u * v on the shared grid.  Exact (alias-free)
// whenever the input bands sum to less than n/2; no filtering is applied.
SpectralField pointwise_product(const SpectralField& u, const SpectralField& v);

// Periodic convolution: coefficients L^d u^(k) v^(k).
SpectralField convolve(const SpectralField& u, const SpectralField& v);

// Deterministic synthetic profile u^(xi) = |xi|^{-a} on 0 < |k| <= band,
// Hermitian by construction (real even symbol), mean-zero.
SpectralField envelope_field(const Grid& grid, double a, int band);

// Least-squares slope of log(ys) against log(xs).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace flns
