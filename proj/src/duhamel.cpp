#include "flns/duhamel.hpp"

#include <cmath>
#include <stdexcept>

#include "flns/errors.hpp"
#include "flns/fft.hpp"
#include "flns/parallel.hpp"

namespace flns {

Trajectory heat_trajectory(const SpectralField& u0, const std::vector<double>& times) {
    Trajectory out;
    out.times = times;
    out.fields.reserve(times.size());
    for (double t : times) out.fields.push_back(heat_evolve(u0, t));
    out.validate("heat_trajectory");
    return out;
}

SpectralField nonlinear_tensor(const SpectralField& u, const SpectralField& v) {
    require_same_shape(u, v, "nonlinear_tensor");
    int d = u.grid.d;
    if (u.components != d) throw std::invalid_argument("nonlinear_tensor: need components == d");

    std::vector<double> up = to_physical(dealias_two_thirds(u));
    std::vector<double> vp = to_physical(dealias_two_thirds(v));

    std::size_t nm = u.modes();
    std::vector<double> prod(nm * static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i) {
        const double* ui = up.data() + static_cast<std::size_t>(i) * nm;
        for (int j = 0; j < d; ++j) {
            const double* vj = vp.data() + static_cast<std::size_t>(j) * nm;
            double* dst = prod.data() + static_cast<std::size_t>(i * d + j) * nm;
            for (std::size_t x = 0; x < nm; ++x) dst[x] = ui[x] * vj[x];
        }
    }

    SpectralField w = dealias_two_thirds(to_spectral(prod, u.grid, d * d));
    w.zero_mean();
    return w;
}

Trajectory bilinear_B(const Trajectory& u, const Trajectory& v, const QuadratureRule& rule) {
    u.validate("bilinear_B");
    v.validate("bilinear_B");
    if (u.times != v.times) throw std::invalid_argument("bilinear_B: trajectories use different time grids");
    require_same_shape(u.fields[0], v.fields[0], "bilinear_B");
    if (u.times.front() != 0.0) throw std::invalid_argument("bilinear_B: time grid must start at 0");
    int d = u.fields[0].grid.d;
    if (u.fields[0].components != d) throw std::invalid_argument("bilinear_B: need velocity trajectories (components == d)");

    const Grid& grid = u.fields[0].grid;
    std::size_t nm = grid.modes();
    std::size_t steps = u.size();

    // Projected tensor divergence of each sample; the multiplier does not
    // depend on tau, so it commutes with the time integral.
    std::vector<SpectralField> g;
    g.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i)
        g.push_back(projected_tensor_divergence(nonlinear_tensor(u.fields[i], v.fields[i])));

    Trajectory out;
    out.times = u.times;
    out.fields.assign(steps, SpectralField(grid, d));
    for (SpectralField& f : out.fields) f.mean_zero = true;

    // Semigroup recurrence: B(t_i) = e^{-h lam} B(t_{i-1}) + panel(t_{i-1}, t_i),
    // exact for the panelwise closed-form quadrature.
    for (std::size_t i = 1; i < steps; ++i) {
        double a = out.times[i - 1];
        double b = out.times[i];
        const SpectralField& ga = g[i - 1];
        const SpectralField& gb = g[i];
        const SpectralField& prev = out.fields[i - 1];
        SpectralField& cur = out.fields[i];
        parallel_for(nm, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t k = lo; k < hi; ++k) {
                double lam = grid.xi_norm2(k);
                PanelWeights pw = heat_panel_weights(lam, a, b, b, rule);
                double decay = std::exp(-lam * (b - a));
                for (int c = 0; c < d; ++c)
                    cur.at(c, k) = decay * prev.at(c, k) + pw.wa * ga.at(c, k) + pw.wb * gb.at(c, k);
            }
        });
        cur.zero_mean();
    }
    return out;
}

std::complex<double> kernel_symbol(int d, double frac_s, int l, int k, int j,
                                   const std::array<double, 3>& eta) {
    double x2 = 0.0;
    for (int a = 0; a < d; ++a) x2 += eta[static_cast<std::size_t>(a)] * eta[static_cast<std::size_t>(a)];
    if (x2 == 0.0) return {0.0, 0.0};
    double proj = (j == k ? 1.0 : 0.0) -
                  eta[static_cast<std::size_t>(j)] * eta[static_cast<std::size_t>(k)] / x2;
    double mag = std::pow(kTwoPi, -0.5 * d) * std::pow(std::sqrt(x2), frac_s) * std::exp(-x2) * proj;
    return std::complex<double>(0.0, eta[static_cast<std::size_t>(l)] * mag);
}

KernelNorm kernel_fl_norm_ex(double frac_s, double r, double h, const Grid& grid) {
    if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("kernel_fl_norm: h must be positive and finite");
    if (!(r > 1.0) || std::isinf(r)) throw std::invalid_argument("kernel_fl_norm: r must lie in (1, infinity)");
    if (frac_s < 0.0) throw std::invalid_argument("kernel_fl_norm: frac_s must be >= 0");

    int d = grid.d;
    double rprime = r / (r - 1.0);
    double root_h = std::sqrt(h);
    double meas = grid.mode_measure();
    double scale = std::pow(h, 0.5 * d);
    std::size_t nm = grid.modes();

    KernelNorm out;
    // Resolved when the scaled Gaussian decays inside the band and spans more
    // than one cell: e^{-h xi_max^2} small and h (2 pi / L)^2 not huge.
    double step = kTwoPi / grid.L;
    out.resolved = (h * grid.xi_max() * grid.xi_max() >= 23.0) && (h * step * step <= 1.0);

    std::vector<double> comp_norms;
    comp_norms.reserve(static_cast<std::size_t>(d * d * d));
    for (int l = 0; l < d; ++l) {
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < d; ++j) {
                WeightedAtoms atoms;
                atoms.items.reserve(nm);
                for (std::size_t m = 1; m < nm; ++m) {
                    std::array<double, 3> xi = grid.xi(m);
                    std::array<double, 3> eta{root_h * xi[0], root_h * xi[1], root_h * xi[2]};
                    double val = scale * std::abs(kernel_symbol(d, frac_s, l, k, j, eta));
                    if (val > 0.0) atoms.add(val, meas);
                }
                comp_norms.push_back(lorentz_norm(rearrange(atoms), rprime, 1.0));
            }
        }
    }
    CompensatedSum acc;
    for (double v : comp_norms) acc.add(v * v);
    out.value = std::sqrt(acc.value());
    return out;
}

double kernel_fl_norm(double frac_s, double r, double h, const Grid& grid) {
    return kernel_fl_norm_ex(frac_s, r, h, grid).value;
}

} // namespace flns
