#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flns/duhamel.hpp"
#include "flns/picard.hpp"
#include "flns/sampler.hpp"

namespace flns {

// Initial datum descriptor shared by the CLI and the solver.
struct InitialSpec {
    std::string kind = "taylor-green"; // or "random-divfree"
    double amp = 1.0;
    double slope = 0.0; // spectral envelope exponent; 0 -> d-1 default
    std::uint64_t seed = 1;
};

// Integrability regimes of the well-posedness theory, dispatched on p.
enum class Regime { low_p, high_p, p_one };

struct RunConfig {
    int d = 2;
    int n = 32;
    double L = kTwoPi;

    // critical data space: s = d/p - 1 over integrability p, fine index r
    double p = 2.0;
    double r = 2.0;
    double p_tilde = 3.0; // auxiliary integrability (regimes p > 1)
    double s_aux = 0.0;   // auxiliary regularity (p = 1 regime); 0 -> d - 0.5

    double T = 0.5;
    int M = 64;
    double gamma = 2.0;

    double tol = 1e-10;
    int max_iter = 64;
    int eta_trials = 4;
    double limit_fraction = 0.5; // vanishing-at-0 proxy threshold
    double tol_exact = 1e-12;

    InitialSpec initial;
    QuadratureRule quadrature;
};

Regime regime_of(const RunConfig& cfg);
double regime_alpha(const RunConfig& cfg);   // weight exponent alpha (norms carry alpha/2)
NormSpec aux_norm_spec(const RunConfig& cfg);
NormSpec critical_norm_spec(const RunConfig& cfg);
double effective_s_aux(const RunConfig& cfg);

// Throws ConfigError naming the violated hypothesis inequality.
void validate_config(const RunConfig& cfg);

SpectralField make_initial_data(const RunConfig& cfg);

// sup over the graded grid of t^{alpha/2} || e^{t Lap} u0 || in the auxiliary
// space; the smallness quantity the fixed-point threshold is compared against.
double caloric_smallness(const SpectralField& u0, const RunConfig& cfg);

struct SolveRow {
    double t = 0.0;
    double weighted_norm = 0.0; // t^{alpha/2} ||u(t)||_aux
    double critical_norm = 0.0;
    double div_residual = 0.0;
};

struct SolveReport {
    PicardReport picard;
    std::vector<SolveRow> table;
    double alpha = 0.0;
    double critical_sup = 0.0; // sup over grid times of the critical norm
    std::optional<double> blowup_time; // diverged: first non-finite time sample
    double caloric = 0.0;    // = ||y||_K, the weighted heat norm
    double eta_hat = 0.0;    // empirical bilinear bound (0 when estimation disabled)
    double threshold = 0.0;  // 1/(4 eta_hat)
    bool below_threshold = false;
    double mild_residual = -1.0; // ||u - y + B(u,u)||_K when converged, else -1
    double div_residual_max = 0.0;
    bool limit_condition_ok = false; // weighted norm at t_1 <= fraction * sup
    bool lorentz_surrogate_used = false;
    double wall_time_s = 0.0;
};

// Picard iteration x_{k+1} = y - B(x_k, x_k) on trajectories, y the heat
// evolution of u0, measured in the regime's weighted auxiliary norm.
std::pair<Trajectory, SolveReport> run_mild_solution(const RunConfig& cfg, const SpectralField& u0);
std::pair<Trajectory, SolveReport> run_mild_solution(const RunConfig& cfg);

// Empirical bilinear bound of the Duhamel operator over heat trajectories of
// seeded divergence-free data, in the configured weighted norm.
EtaEstimate estimate_nse_eta(const RunConfig& cfg, int trials, std::uint64_t seed);

struct SweepPoint {
    double amp = 0.0;
    SolveReport report;
    double first_ratio = 0.0; // ||B(y,y)|| / ||y||, linear in the amplitude
};

std::vector<SweepPoint> amplitude_sweep(const RunConfig& cfg, const SpectralField& u0_unit,
                                        const std::vector<double>& amps);

} // namespace flns
