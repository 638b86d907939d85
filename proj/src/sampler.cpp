#include "flns/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "flns/multipliers.hpp"

namespace flns {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

struct Gaussian {
    std::mt19937_64 rng;
    explicit Gaussian(std::uint64_t seed) : rng(seed) {}
    double uniform01() {
        // (0, 1], 53-bit resolution; portable across standard libraries
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    }
    // Box-Muller, one value per call (pairs drawn eagerly for determinism)
    bool have_spare = false;
    double spare = 0.0;
    double operator()() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double rad = std::sqrt(-2.0 * std::log(u1));
        double ang = kTwoPi * u2;
        spare = rad * std::sin(ang);
        have_spare = true;
        return rad * std::cos(ang);
    }
};

} // namespace

SpectralField sample_field(const FieldSampler& s) {
    if (s.components < 1) throw std::invalid_argument("sample_field: components must be >= 1");
    if (s.divergence_free && s.components != s.grid.d)
        throw std::invalid_argument("sample_field: divergence_free needs components == d");
    int band = s.band > 0 ? s.band : s.grid.n / 3;
    if (band >= s.grid.n / 2) throw std::invalid_argument("sample_field: band must stay below n/2");

    SpectralField f(s.grid, s.components);
    Gaussian gauss(s.seed);
    std::size_t nm = s.grid.modes();
    double step = kTwoPi / s.grid.L;

    for (int c = 0; c < s.components; ++c) {
        for (std::size_t m = 0; m < nm; ++m) {
            std::array<int, 3> k = s.grid.wavevector(m);
            double k2 = 0.0;
            for (int a = 0; a < s.grid.d; ++a) k2 += static_cast<double>(k[static_cast<std::size_t>(a)]) * k[static_cast<std::size_t>(a)];
            if (k2 == 0.0 || k2 > static_cast<double>(band) * band) continue;
            double g1 = gauss();
            double g2 = gauss();
            double env = std::pow(step * std::sqrt(k2), -s.envelope);
            f.at(c, m) = Complex(g1, g2) * env;
        }
    }

    // Hermitian symmetrization; self-conjugate modes become real.
    for (int c = 0; c < s.components; ++c) {
        for (std::size_t m = 0; m < nm; ++m) {
            std::size_t p = s.grid.conjugate_index(m);
            if (p == m) {
                f.at(c, m) = Complex(f.at(c, m).real(), 0.0);
            } else if (m < p) {
                Complex h = 0.5 * (f.at(c, m) + std::conj(f.at(c, p)));
                f.at(c, m) = h;
                f.at(c, p) = std::conj(h);
            }
        }
    }

    f.zero_mean();
    if (s.divergence_free) f = leray_project(f);
    if (s.amplitude != 1.0) f = s.amplitude * f;
    f.mean_zero = true;
    return f;
}

SpectralField taylor_green(const Grid& grid, double amplitude) {
    if (grid.d != 2) throw std::invalid_argument("taylor_green: defined for d = 2");
    SpectralField f(grid, 2);
    int n = grid.n;
    auto flat = [&](int k0, int k1) {
        std::size_t i0 = static_cast<std::size_t>((k0 % n + n) % n);
        std::size_t i1 = static_cast<std::size_t>((k1 % n + n) % n);
        return i0 * static_cast<std::size_t>(n) + i1;
    };
    Complex quarter_i(0.0, 0.25 * amplitude);
    // sin x1 cos x2: (1/4i) [e^{i(x1+x2)} + e^{i(x1-x2)} - e^{i(-x1+x2)} - e^{-i(x1+x2)}]
    f.at(0, flat(1, 1)) = -quarter_i;
    f.at(0, flat(1, -1)) = -quarter_i;
    f.at(0, flat(-1, 1)) = quarter_i;
    f.at(0, flat(-1, -1)) = quarter_i;
    // -cos x1 sin x2: -(1/4i) [e^{i(x1+x2)} - e^{i(x1-x2)} + e^{i(-x1+x2)} - e^{-i(x1+x2)}]
    f.at(1, flat(1, 1)) = quarter_i;
    f.at(1, flat(1, -1)) = -quarter_i;
    f.at(1, flat(-1, 1)) = quarter_i;
    f.at(1, flat(-1, -1)) = -quarter_i;
    f.mean_zero = true;
    return f;
}

} // namespace flns
