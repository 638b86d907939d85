#pragma once
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace flns {

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Uniform periodic grid on [0,L)^d with n points per axis.  Modes per axis are
// stored in transform order (0, 1, ..., n/2-1, -n/2, ..., -1); the frequency of
// wavenumber k is xi = (2*pi/L) * k.  Flat mode indices are row-major with the
// last axis fastest, matching the sample layout on the physical side.
struct Grid {
    int d = 2;
    int n = 32;
    double L = kTwoPi;

    Grid() = default;
    Grid(int d_, int n_, double L_ = kTwoPi) : d(d_), n(n_), L(L_) {
        if (d < 2 || d > 3) throw std::invalid_argument("Grid: d must be 2 or 3");
        if (n < 8 || n % 2 != 0) throw std::invalid_argument("Grid: n must be even and >= 8");
        if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("Grid: L must be positive and finite");
    }

    bool operator==(const Grid&) const = default;

    std::size_t modes() const {
        std::size_t m = 1;
        for (int i = 0; i < d; ++i) m *= static_cast<std::size_t>(n);
        return m;
    }

    int wavenumber(int idx) const { return idx < n / 2 ? idx : idx - n; }

    // Axis indices of a flat mode index.
    std::array<int, 3> axis_indices(std::size_t flat) const {
        std::array<int, 3> ix{0, 0, 0};
        for (int a = d - 1; a >= 0; --a) {
            ix[static_cast<std::size_t>(a)] = static_cast<int>(flat % static_cast<std::size_t>(n));
            flat /= static_cast<std::size_t>(n);
        }
        return ix;
    }

    std::array<int, 3> wavevector(std::size_t flat) const {
        std::array<int, 3> k = axis_indices(flat);
        for (int a = 0; a < d; ++a) k[static_cast<std::size_t>(a)] = wavenumber(k[static_cast<std::size_t>(a)]);
        return k;
    }

    std::array<double, 3> xi(std::size_t flat) const {
        std::array<int, 3> k = wavevector(flat);
        double step = kTwoPi / L;
        return {step * k[0], step * k[1], step * k[2]};
    }

    double xi_norm2(std::size_t flat) const {
        std::array<double, 3> f = xi(flat);
        return f[0] * f[0] + f[1] * f[1] + f[2] * f[2];
    }

    // Flat index of the negated wavevector (-k mod n on every axis).
    std::size_t conjugate_index(std::size_t flat) const {
        std::array<int, 3> ix = axis_indices(flat);
        std::size_t out = 0;
        for (int a = 0; a < d; ++a) {
            int neg = (n - ix[static_cast<std::size_t>(a)]) % n;
            out = out * static_cast<std::size_t>(n) + static_cast<std::size_t>(neg);
        }
        return out;
    }

    // Quadrature weight of one physical cell and of one spectral mode.
    double cell_measure() const { return std::pow(L / n, d); }
    double mode_measure() const { return std::pow(kTwoPi / L, d); }

    // Weight turning a stored coefficient into the value of the unitary
    // continuum transform at xi; synthesis itself carries no prefactor.
    double spectral_weight() const { return std::pow(kTwoPi, -0.5 * d) * std::pow(L, d); }

    // Largest per-axis frequency magnitude, (2*pi/L)*(n/2).
    double xi_max() const { return (kTwoPi / L) * (n / 2); }
};

} // namespace flns
