#include "flns/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flns/duhamel.hpp"
#include "flns/errors.hpp"
#include "flns/fft.hpp"
#include "flns/multipliers.hpp"
#include "flns/quadrature.hpp"
#include "flns/sampler.hpp"

namespace flns {
namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v)
        if (!(x <= m)) m = x; // propagates NaN/inf upward
    return m;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

std::vector<double> geomspace(double lo, double hi, int count) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(lo * std::pow(hi / lo, count == 1 ? 0.0 : static_cast<double>(i) / (count - 1)));
    return out;
}

double unit_draw(std::uint64_t seed, std::uint64_t stream) {
    return static_cast<double>(mix_seed(seed, stream) >> 11) * 0x1.0p-53;
}

// Per-trial spectral envelope exponent in [0.5, 2.5]: spans rough to smooth.
double trial_envelope(std::uint64_t seed, std::uint64_t stream) {
    return 0.5 + 2.0 * unit_draw(seed, stream);
}

SpectralField random_scalar(const Grid& g, double envelope, int band, std::uint64_t seed) {
    FieldSampler s;
    s.grid = g;
    s.components = 1;
    s.envelope = envelope;
    s.band = band;
    s.seed = seed;
    return sample_field(s);
}

double safe_ratio(double num, double den) {
    if (den > 0.0) return num / den;
    return num == 0.0 ? 0.0 : kInf;
}

void validate_sobolev(const SuiteOptions& opt) {
    if (!(opt.q_from >= 1.0) || !(opt.q_to >= 1.0))
        throw ConfigError("sobolev suite: integrabilities must be >= 1; got q_from = " + fmt(opt.q_from) +
                          ", q_to = " + fmt(opt.q_to));
    if (!(opt.q_to >= opt.q_from))
        throw ConfigError("sobolev suite: need q_to >= q_from; got q_to = " + fmt(opt.q_to) +
                          " < q_from = " + fmt(opt.q_from));
    const double need = opt.d * (1.0 / opt.q_from - 1.0 / opt.q_to);
    if (opt.s_from - opt.s_to < need - 1e-12)
        throw ConfigError("sobolev suite: need s_from - s_to >= d(1/q_from - 1/q_to) = " + fmt(need) +
                          "; got s_from - s_to = " + fmt(opt.s_from - opt.s_to));
}

double product_q(const SuiteOptions& opt) {
    const double d = opt.d;
    if (opt.k < 0 || opt.k > opt.d - 1)
        throw ConfigError("product suite: need 0 <= k <= d - 1 = " + std::to_string(opt.d - 1) +
                          "; got k = " + std::to_string(opt.k));
    const double lo = opt.k / d;
    const double hi = 0.5 + opt.k / (2.0 * d);
    const double inv = 1.0 / opt.prod_p;
    if (!(inv > lo) || !(inv < hi))
        throw ConfigError("product suite: need k/d < 1/p < 1/2 + k/(2d), i.e. " + fmt(lo) + " < 1/p < " + fmt(hi) +
                          "; got 1/p = " + fmt(inv) + " (p = " + fmt(opt.prod_p) + ", k = " + std::to_string(opt.k) +
                          ", d = " + std::to_string(opt.d) + ")");
    return 1.0 / (2.0 * inv - opt.k / d);
}

// One pass of a ratio suite on a specific grid; trial seeds depend only on
// the suite seed and trial index, so the n and 2n passes use matched draws.
std::vector<double> ratio_values(const std::string& name, const Grid& g, const SuiteOptions& opt) {
    const int band = std::max(1, g.n / 4 - 1); // alias-free quadratic products
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(opt.trials));

    for (int trial = 0; trial < opt.trials; ++trial) {
        const std::uint64_t su = mix_seed(opt.seed, 2 * static_cast<std::uint64_t>(trial));
        const std::uint64_t sv = mix_seed(opt.seed, 2 * static_cast<std::uint64_t>(trial) + 1);
        const double eu = trial_envelope(opt.seed, 50000 + static_cast<std::uint64_t>(trial));
        const double ev = trial_envelope(opt.seed, 70000 + static_cast<std::uint64_t>(trial));

        if (name == "holder") {
            // || f g ||_{L(1.5,1)} <= C || f ||_{L(3,2)} || g ||_{L(3,2)};
            // 1/1.5 = 1/3 + 1/3, 1/1 = 1/2 + 1/2.
            SpectralField f = random_scalar(g, eu, band, su);
            SpectralField h = random_scalar(g, ev, band, sv);
            SpectralField prod = pointwise_product(f, h);
            prod.zero_mean();
            const double num = sfl_norm(prod, NormSpec{0.0, 1.5, 1.0});
            const double den = sfl_norm(f, NormSpec{0.0, 3.0, 2.0}) * sfl_norm(h, NormSpec{0.0, 3.0, 2.0});
            out.push_back(safe_ratio(num, den));
        } else if (name == "young") {
            // || f * g ||_{L(3)} <= C || f ||_{L(1.5)} || g ||_{L(1.5)};
            // 1 + 1/3 = 1/1.5 + 1/1.5.
            SpectralField f = random_scalar(g, eu, band, su);
            SpectralField h = random_scalar(g, ev, band, sv);
            SpectralField conv = convolve(f, h);
            conv.zero_mean();
            const double num = fourier_lebesgue_norm(conv, 0.0, 3.0);
            const double den = fourier_lebesgue_norm(f, 0.0, 1.5) * fourier_lebesgue_norm(h, 0.0, 1.5);
            out.push_back(safe_ratio(num, den));
        } else if (name == "sobolev") {
            SpectralField f = random_scalar(g, eu, band, su);
            const double num = sfl_norm(f, NormSpec{opt.s_to, opt.q_to, opt.r});
            const double den = sfl_norm(f, NormSpec{opt.s_from, opt.q_from, opt.r});
            out.push_back(safe_ratio(num, den));
        } else if (name == "product") {
            const double q = product_q(opt);
            const double k = opt.k;
            SpectralField f = random_scalar(g, eu, band, su);
            SpectralField h = random_scalar(g, ev, band, sv);
            SpectralField prod = pointwise_product(f, h);
            prod.zero_mean();
            const double num = sfl_norm(prod, NormSpec{k, q, opt.r});
            const double den =
                sfl_norm(f, NormSpec{k, opt.prod_p, opt.r}) * sfl_norm(h, NormSpec{k, opt.prod_p, opt.r});
            out.push_back(safe_ratio(num, den));
        } else if (name == "nesting") {
            SpectralField f = random_scalar(g, eu, band, su);
            const double num = sfl_norm(f, NormSpec{0.0, opt.p, kInf});
            const double den = sfl_norm(f, NormSpec{0.0, opt.p, 1.0});
            out.push_back(safe_ratio(num, den));
        } else if (name == "classical") {
            // Two directions per trial: spectral <= C physical at q = 1.5
            // (below the self-dual exponent), physical <= C spectral at q = 3.
            SpectralField f = random_scalar(g, eu, band, su);
            const double qa = 1.5, qb = 3.0;
            const double num_a = sfl_norm(f, NormSpec{1.0, qa, NormSpec{0.0, qa, 1.0}.conjugate()});
            const double den_a = classical_sobolev_norm(f, 1.0, qa);
            out.push_back(safe_ratio(num_a, den_a));
            const double num_b = classical_sobolev_norm(f, 1.0, qb);
            const double den_b = sfl_norm(f, NormSpec{1.0, qb, NormSpec{0.0, qb, 1.0}.conjugate()});
            out.push_back(safe_ratio(num_b, den_b));
        } else {
            throw ConfigError("unknown ratio suite '" + name + "'");
        }
    }
    return out;
}

// Multi-indices of total order k in d variables.
std::vector<std::array<int, 3>> multi_indices(int d, int k) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a <= k; ++a) {
        if (d == 2) {
            out.push_back({a, k - a, 0});
        } else {
            for (int b = 0; b <= k - a; ++b) out.push_back({a, b, k - a - b});
        }
    }
    return out;
}

double tail_norm(const SpectralField& f, double radius, double q, double r) {
    WeightedAtoms atoms;
    const double w = f.grid.spectral_weight();
    const double mu = f.grid.mode_measure();
    const double r2 = radius * radius;
    for (int c = 0; c < f.components; ++c) {
        for (std::size_t m = 0; m < f.modes(); ++m) {
            const auto k = f.grid.wavevector(m);
            const double k2 = static_cast<double>(k[0]) * k[0] + static_cast<double>(k[1]) * k[1] +
                              static_cast<double>(k[2]) * k[2];
            if (k2 <= r2) continue;
            atoms.add(w * std::abs(f.at(c, m)), mu);
        }
    }
    return lorentz_norm(rearrange(atoms), q, r);
}

} // namespace

SpectralField pointwise_product(const SpectralField& u, const SpectralField& v) {
    require_same_shape(u, v, "pointwise_product");
    const std::vector<double> a = to_physical(u);
    const std::vector<double> b = to_physical(v);
    std::vector<double> prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
    return to_spectral(prod, u.grid, u.components);
}

SpectralField convolve(const SpectralField& u, const SpectralField& v) {
    require_same_shape(u, v, "convolve");
    SpectralField out(u.grid, u.components);
    const double scale = std::pow(u.grid.L, u.grid.d);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = scale * u.coeffs[i] * v.coeffs[i];
    out.refresh_mean_flag();
    return out;
}

SpectralField envelope_field(const Grid& grid, double a, int band) {
    SpectralField f(grid, 1);
    const double b2 = static_cast<double>(band) * band;
    for (std::size_t m = 0; m < f.modes(); ++m) {
        const auto k = grid.wavevector(m);
        const double k2 =
            static_cast<double>(k[0]) * k[0] + static_cast<double>(k[1]) * k[1] + static_cast<double>(k[2]) * k[2];
        if (k2 == 0.0 || k2 > b2) continue;
        f.at(0, m) = std::pow(grid.xi_norm2(m), -0.5 * a);
    }
    f.zero_mean();
    return f;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("loglog_slope: need matching xs/ys with at least 2 points");
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

SuiteResult run_ratio_suite(const std::string& name, const SuiteOptions& opt) {
    if (opt.trials < 1) throw ConfigError("ratio suite: trials must be >= 1");
    if (name == "sobolev") validate_sobolev(opt);
    if (name == "product") (void)product_q(opt);
    if (name == "nesting" && !(opt.p > 1.0 && std::isfinite(opt.p)))
        throw ConfigError("nesting suite: need 1 < p < infinity; got p = " + fmt(opt.p));

    SuiteResult res;
    res.suite = name;
    res.trials = opt.trials;
    res.seed = opt.seed;
    res.values = ratio_values(name, Grid{opt.d, opt.n, opt.L}, opt);
    const std::vector<double> refined = ratio_values(name, Grid{opt.d, 2 * opt.n, opt.L}, opt);

    const double m1 = max_of(res.values);
    const double m2 = max_of(refined);
    const bool finite = all_finite(res.values) && all_finite(refined);
    const bool stable = finite && m2 <= 2.0 * m1 && m1 <= 2.0 * m2;
    res.empirical_max = std::max(m1, m2);
    res.median = median_of(res.values);
    res.pass = finite && stable;
    res.detail = "empirical max " + fmt(m1) + " at n=" + std::to_string(opt.n) + ", " + fmt(m2) +
                 " at n=" + std::to_string(2 * opt.n) + (finite ? "" : "; non-finite ratio encountered") +
                 (stable || !finite ? "" : "; drift exceeds x2");
    return res;
}

SuiteResult run_identity_suite(const std::string& name, const SuiteOptions& opt) {
    if (opt.trials < 1) throw ConfigError("identity suite: trials must be >= 1");
    const Grid g{opt.d, opt.n, opt.L};

    SuiteResult res;
    res.suite = name;
    res.trials = opt.trials;
    res.seed = opt.seed;

    if (name == "lpp") {
        const double ps[] = {1.5, 2.0, 3.0};
        const double ss[] = {0.0, 1.0, 0.5};
        double tol = 1e-12;
        for (int trial = 0; trial < opt.trials; ++trial) {
            const double p = ps[trial % 3];
            const double s = ss[(trial / 3) % 3];
            SpectralField f = random_scalar(g, trial_envelope(opt.seed, 50000 + static_cast<std::uint64_t>(trial)), 0,
                                            mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
            NormSpec spec{s, p, 0.0};
            spec.r = spec.conjugate();
            const double a = sfl_norm(f, spec);
            const double b = fourier_lebesgue_norm(f, s, p);
            res.values.push_back(std::abs(a - b) / std::max(b, 1e-300));
        }
        res.tolerance = tol;
        res.pass = all_finite(res.values) && max_of(res.values) <= tol;
    } else if (name == "heat") {
        const double ss[] = {0.0, 1.0};
        const double ps[] = {1.5, 2.0, 3.0};
        const double rs[] = {1.0, 2.0, kInf};
        double tol = 1e-12;
        for (int trial = 0; trial < opt.trials; ++trial) {
            const double t = trial == 0 ? 0.0 : unit_draw(opt.seed, 90000 + static_cast<std::uint64_t>(trial));
            SpectralField f = random_scalar(g, trial_envelope(opt.seed, 50000 + static_cast<std::uint64_t>(trial)), 0,
                                            mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
            const NormSpec spec{ss[trial % 2], ps[trial % 3], rs[(trial / 2) % 3]};
            res.values.push_back(safe_ratio(sfl_norm(heat_evolve(f, t), spec), sfl_norm(f, spec)));
        }
        res.tolerance = tol;
        res.pass = all_finite(res.values) && max_of(res.values) <= 1.0 + tol;
    } else if (name == "deriv_equiv") {
        // Two-sided derivative-sum comparison at integrability 2: the sum of
        // k-th derivatives against the k-th regularity norm, with constants
        // #(multi-indices) upward and d^{k/2} downward; the downward bound
        // leans on the Lorentz triangle inequality, honest for r <= p' = 2.
        double tol = 1e-10;
        for (int trial = 0; trial < opt.trials; ++trial) {
            const int k = trial % 2 == 0 ? 1 : 2;
            const double r = (trial / 2) % 2 == 0 ? 1.0 : 2.0;
            SpectralField f = random_scalar(g, trial_envelope(opt.seed, 50000 + static_cast<std::uint64_t>(trial)), 0,
                                            mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
            const auto alphas = multi_indices(opt.d, k);
            double sum = 0.0;
            for (const auto& alpha : alphas) sum += sfl_norm(derivative(f, alpha), NormSpec{0.0, 2.0, r});
            const double mid = sfl_norm(f, NormSpec{static_cast<double>(k), 2.0, r});
            res.values.push_back(safe_ratio(sum, static_cast<double>(alphas.size()) * mid));
            res.values.push_back(safe_ratio(mid, std::pow(opt.d, 0.5 * k) * sum));
        }
        res.tolerance = tol;
        res.pass = all_finite(res.values) && max_of(res.values) <= 1.0 + tol;
    } else {
        throw ConfigError("unknown identity suite '" + name + "'");
    }
    res.empirical_max = max_of(res.values);
    res.median = median_of(res.values);
    res.detail = "max observed " + fmt(res.empirical_max) + " over " + std::to_string(res.values.size()) + " checks";
    return res;
}

SuiteResult run_exponent_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = name;
    res.trials = opt.trials;
    res.seed = opt.seed;
    const Grid g{opt.d, opt.n, opt.L};

    if (name == "kernel_scaling") {
        bool resolved = true;
        std::string bad;
        for (double h = 0.004; h <= 0.256 * 1.0001; h *= 2.0) {
            const KernelNorm kn = kernel_fl_norm_ex(0.0, opt.r, h, g);
            res.xs.push_back(h);
            res.values.push_back(kn.value);
            if (!kn.resolved) {
                resolved = false;
                bad += (bad.empty() ? "" : ", ") + fmt(h);
            }
        }
        res.fitted_exponent = loglog_slope(res.xs, res.values);
        res.target_exponent = opt.d / (2.0 * opt.r);
        res.tolerance = 0.02;
        const bool on_target = std::abs(*res.fitted_exponent - *res.target_exponent) <= *res.tolerance;
        res.pass = resolved && on_target;
        res.detail = resolved ? ("slope " + fmt(*res.fitted_exponent) + " vs target " + fmt(*res.target_exponent))
                              : ("warning: scale(s) h = " + bad + " not resolved on n = " + std::to_string(opt.n) +
                                 "; increase n or shrink the window");
    } else if (name == "heat_decay" || name == "heat_decay_p_ge_d") {
        // Both suites evolve a datum sitting on the borderline of the scale-critical
        // class (coefficient envelope |xi|^{1-d}) and fit the decay rate of a
        // smoothness-p_tilde norm of the heat flow.  The decay exponent alpha/2 is the
        // same for every Lorentz fine index; we measure with fine index 2.5/alpha so
        // that the rearrangement integral concentrates at |xi| ~ sqrt(alpha/t), an
        // interior scale of the lattice.  With fine index near 1 the integral is
        // dominated by the absent |xi| < 1 continuum modes and the fitted slope is
        // biased at any feasible resolution.
        double alpha, s_weight;
        if (name == "heat_decay") {
            const double lo = 1.0 / opt.p - 1.0 / opt.d;
            const double hi = 1.0 / opt.p;
            const double inv = 1.0 / opt.p_tilde;
            if (!(inv > lo) || !(inv < hi))
                throw ConfigError("heat decay window: need 1/p - 1/d < 1/p_tilde < 1/p, i.e. " + fmt(lo) +
                                  " < 1/p_tilde < " + fmt(hi) + "; got 1/p_tilde = " + fmt(inv));
            alpha = opt.d * (1.0 / opt.p - 1.0 / opt.p_tilde);
            s_weight = opt.d / opt.p - 1.0;
        } else {
            if (!(opt.p >= opt.d))
                throw ConfigError("heat decay window (p >= d): need p >= d = " + std::to_string(opt.d) +
                                  "; got p = " + fmt(opt.p));
            if (!(opt.p_tilde > opt.p) || !std::isfinite(opt.p_tilde))
                throw ConfigError("heat decay window (p >= d): need p_tilde > p = " + fmt(opt.p) +
                                  "; got p_tilde = " + fmt(opt.p_tilde));
            alpha = 1.0 - opt.d / opt.p_tilde;
            s_weight = 0.0;
        }
        const double envelope = opt.d - 1.0; // borderline critical-regularity profile
        const double r_meas = 2.5 / alpha;
        if (r_meas > 40.0)
            throw ConfigError("heat decay: exponent gap alpha = " + fmt(alpha) +
                              " is too small to resolve (need alpha >= 0.0625)");
        const double e_r = r_meas * alpha - 1.0; // = 1.5: rearrangement integrand ~ rho^{e_r}
        const int band = g.n / 3;
        const double t_lo = 8.0 / (r_meas * static_cast<double>(band) * band);
        const double t_hi = e_r / (18.0 * r_meas); // integrand peak at |xi| = 3
        res.target_exponent = -0.5 * alpha;
        res.tolerance = 0.05;
        if (!(4.0 * t_lo <= t_hi)) { // demand at least two octaves of usable window
            res.pass = false;
            res.detail = "warning: decay window [" + fmt(t_lo) + ", " + fmt(t_hi) + "] is not resolved on n = " +
                         std::to_string(opt.n) + "; increase n";
        } else {
            res.xs = geomspace(t_lo, t_hi, 10);
            const NormSpec spec{s_weight, opt.p_tilde, r_meas};
            const int draws = 4;
            std::vector<SpectralField> us;
            for (int j = 0; j < draws; ++j)
                us.push_back(random_scalar(g, envelope, band, mix_seed(opt.seed, 100 + static_cast<std::uint64_t>(j))));
            for (double t : res.xs) {
                double acc = 0.0;
                for (const SpectralField& u : us) acc += std::log(sfl_norm(heat_evolve(u, t), spec));
                res.values.push_back(std::exp(acc / draws));
            }
            res.fitted_exponent = loglog_slope(res.xs, res.values);
            res.pass = std::abs(*res.fitted_exponent - *res.target_exponent) <= *res.tolerance;
            res.detail = "slope " + fmt(*res.fitted_exponent) + " vs target " + fmt(*res.target_exponent);
        }
    } else if (name == "caloric_1") {
        const double d = opt.d;
        if (!(opt.s_aux > d - 1.0) || !(opt.s_aux < d))
            throw ConfigError("caloric window (p = 1): need d - 1 < s_aux < d, i.e. " + fmt(d - 1.0) + " < s_aux < " +
                              fmt(d) + "; got s_aux = " + fmt(opt.s_aux));
        const double alpha = opt.s_aux + 1.0 - d;
        const int band = g.n / 3;
        // e^{-t|xi|^2} |xi|^{s_aux - (d-1)} peaks at |xi*| = sqrt(alpha/(2t));
        // keep the maximizer between radius 2 and band/2.
        const double t_lo = alpha / (2.0 * 0.25 * band * band);
        const double t_hi = alpha / 8.0;
        res.xs = geomspace(t_lo, t_hi, 10);
        const SpectralField u = envelope_field(g, d - 1.0, band);
        const NormSpec spec{opt.s_aux, 1.0, kInf};
        for (double t : res.xs) res.values.push_back(sfl_norm(heat_evolve(u, t), spec));
        res.fitted_exponent = loglog_slope(res.xs, res.values);
        res.target_exponent = -0.5 * alpha;
        res.tolerance = 0.05;
        res.pass = std::abs(*res.fitted_exponent - *res.target_exponent) <= *res.tolerance;
        res.detail = "slope " + fmt(*res.fitted_exponent) + " vs target " + fmt(*res.target_exponent);
    } else if (name == "beta_integral") {
        const double alphas[] = {0.25, 0.5, 0.75};
        const double ts[] = {0.5, 1.0, 2.0};
        res.tolerance = 1e-6;
        res.pass = true;
        for (double a : alphas) {
            double vals[3];
            double mean = 0.0;
            for (int i = 0; i < 3; ++i) {
                vals[i] = beta_weight_integral(a, ts[i]);
                res.xs.push_back(ts[i]);
                res.values.push_back(vals[i]);
                mean += vals[i] / 3.0;
            }
            double dev = 0.0;
            for (double v : vals) dev = std::max(dev, std::abs(v - mean) / mean);
            if (dev > *res.tolerance) res.pass = false;
            if (a == 0.5 && std::abs(mean - 3.14159265358979323846) > *res.tolerance * 3.14159265358979323846)
                res.pass = false;
            res.detail += (res.detail.empty() ? "" : "; ") + ("alpha " + fmt(a) + ": mean " + fmt(mean) +
                                                              ", max rel dev " + fmt(dev));
        }
    } else {
        throw ConfigError("unknown exponent suite '" + name + "'");
    }
    res.empirical_max = max_of(res.values);
    res.median = median_of(res.values);
    return res;
}

SuiteResult run_tail_suite(const SuiteOptions& opt) {
    if (opt.trials < 1) throw ConfigError("tail suite: trials must be >= 1");
    const Grid g{opt.d, opt.n, opt.L};
    const int band = g.n / 3;

    SuiteResult res;
    res.suite = "tail";
    res.trials = opt.trials;
    res.seed = opt.seed;

    // Random band-limited fields: tail nonincreasing in the radius, exactly
    // zero once the radius reaches the band.
    bool monotone = true, terminal_zero = true;
    for (int trial = 0; trial < opt.trials; ++trial) {
        SpectralField f = random_scalar(g, trial_envelope(opt.seed, 50000 + static_cast<std::uint64_t>(trial)), band,
                                        mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
        double prev = kInf;
        for (double frac : {0.25, 0.5, 0.75, 1.0}) {
            const double tn = tail_norm(f, frac * band, 2.0, 2.0);
            if (tn > prev * (1.0 + 1e-12)) monotone = false;
            prev = tn;
        }
        if (prev != 0.0) terminal_zero = false;
    }

    // Heavy-tail synthetic profile: closed-form tail rate d/q - a.  The exponent
    // a = (d + 3)/2 equalizes the truncation error across dimensions, and the profile
    // fills the whole lattice cube: the corner modes beyond the inscribed ball stand
    // in for the continuum tail the lattice cannot carry, keeping the fitted window
    // [2, n/4] on the continuum rate.
    const double a = 0.5 * (opt.d + 3.0), q = 2.0;
    const SpectralField heavy = envelope_field(g, a, g.n);
    res.xs = geomspace(2.0, g.n / 4.0, 6);
    for (double radius : res.xs) res.values.push_back(tail_norm(heavy, radius, q, 2.0));
    res.fitted_exponent = loglog_slope(res.xs, res.values);
    res.target_exponent = opt.d / q - a;
    res.tolerance = 0.05;
    const bool slope_ok = std::abs(*res.fitted_exponent - *res.target_exponent) <= *res.tolerance;

    res.pass = monotone && terminal_zero && slope_ok;
    res.empirical_max = max_of(res.values);
    res.median = median_of(res.values);
    res.detail = std::string("monotone: ") + (monotone ? "yes" : "NO") + "; terminal zero: " +
                 (terminal_zero ? "yes" : "NO") + "; heavy-tail slope " + fmt(*res.fitted_exponent) + " vs target " +
                 fmt(*res.target_exponent);
    return res;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    for (const char* s : {"holder", "young", "sobolev", "product", "nesting", "classical"})
        if (name == s) return run_ratio_suite(name, opt);
    for (const char* s : {"lpp", "heat", "deriv_equiv"})
        if (name == s) return run_identity_suite(name, opt);
    for (const char* s : {"kernel_scaling", "heat_decay", "heat_decay_p_ge_d", "beta_integral", "caloric_1"})
        if (name == s) return run_exponent_suite(name, opt);
    if (name == "tail") return run_tail_suite(opt);
    std::string all;
    for (const auto& s : suite_names()) all += (all.empty() ? "" : ", ") + s;
    throw ConfigError("unknown suite '" + name + "'; valid names: " + all);
}

std::vector<std::string> suite_names() {
    return {"holder",         "young",      "sobolev",           "product",       "nesting",
            "classical",      "lpp",        "heat",              "deriv_equiv",   "kernel_scaling",
            "heat_decay",     "heat_decay_p_ge_d", "beta_integral", "caloric_1",  "tail"};
}

} // namespace flns
