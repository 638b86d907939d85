#pragma once
#include <vector>

#include "flns/field.hpp"

namespace flns {

// Forward transform of real samples (component-major, row-major, x_j = j*L/n).
// The forward side carries the 1/n^d factor, so a coefficient c at mode k
// contributes c * exp(i xi_k . x) to the synthesized field with no prefactor.
SpectralField to_spectral(const std::vector<double>& samples, const Grid& grid, int components);

// Synthesis back to real samples.  Requires Hermitian symmetry within
// hermitian_tol (relative); throws NumericError reporting the worst asymmetry
// otherwise.  Round-trips with to_spectral to ~1e-15 relative.
std::vector<double> to_physical(const SpectralField& f, double hermitian_tol = 1e-10);

// In-place unnormalized DFT of one component buffer (sign -1 forward, +1
// backward), exposed for tests.
void dft_inplace(const Grid& grid, Complex* data, int sign);

} // namespace flns
