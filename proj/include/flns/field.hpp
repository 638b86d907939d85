#pragma once
#include <complex>
#include <vector>

#include "flns/grid.hpp"

namespace flns {

using Complex = std::complex<double>;

// Truncated Fourier coefficients of a components-valued field on a Grid.
// Storage is component-major; within a component, modes are flat-indexed in
// the grid's row-major transform order.  A field marked mean_zero has a
// vanishing k=0 coefficient in every component (enforced exactly).
struct SpectralField {
    Grid grid;
    int components = 0;
    std::vector<Complex> coeffs;
    bool mean_zero = false;

    SpectralField() = default;
    SpectralField(const Grid& g, int c)
        : grid(g), components(c), coeffs(g.modes() * static_cast<std::size_t>(c), Complex(0.0, 0.0)) {
        if (c < 1) throw std::invalid_argument("SpectralField: components must be >= 1");
    }

    std::size_t modes() const { return grid.modes(); }

    Complex& at(int comp, std::size_t flat) {
        return coeffs[static_cast<std::size_t>(comp) * modes() + flat];
    }
    const Complex& at(int comp, std::size_t flat) const {
        return coeffs[static_cast<std::size_t>(comp) * modes() + flat];
    }

    double max_abs() const;

    // max_k |u(-k) - conj(u(k))| over all components, divided by max |u| (0 for
    // the zero field).
    double relative_hermitian_asymmetry() const;

    bool stored_mean_is_zero() const;
    void zero_mean(); // zero the k=0 coefficient of every component, set the flag

    void refresh_mean_flag() { mean_zero = stored_mean_is_zero(); }
};

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double s, const SpectralField& f);

double max_abs_diff(const SpectralField& a, const SpectralField& b);

// max_k |xi . u(k)| / max |u| for a velocity field (components == grid.d).
double divergence_residual(const SpectralField& u);

void require_same_shape(const SpectralField& a, const SpectralField& b, const char* who);

} // namespace flns
