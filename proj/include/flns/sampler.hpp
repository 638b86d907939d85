#pragma once
#include <cstdint>

#include "flns/field.hpp"

namespace flns {

// Deterministic seeded random fields: independent complex Gaussians shaped by
// an |xi|^{-envelope} spectral envelope on 0 < |k| <= band (Nyquist rows are
// never populated), Hermitian-symmetrized, exactly mean-zero, optionally Leray
// projected.  Identical seeds give bit-identical fields.
struct FieldSampler {
    Grid grid;
    int components = 1;
    double envelope = 1.0;
    int band = 0; // 0 -> floor(n/3)
    bool divergence_free = false;
    double amplitude = 1.0;
    std::uint64_t seed = 1;
};

SpectralField sample_field(const FieldSampler& s);

// Stream-splitting hash so per-trial seeds are decorrelated.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Stationary vortex array test datum on [0, L)^2: components
// (sin x1 cos x2, -cos x1 sin x2) in grid units, exactly four modes per
// component, exactly divergence-free, |xi|^2 = 2 (2 pi / L)^2 on every mode.
SpectralField taylor_green(const Grid& grid, double amplitude = 1.0);

} // namespace flns
