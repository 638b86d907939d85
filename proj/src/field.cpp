#include "flns/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flns {

double SpectralField::max_abs() const {
    double m = 0.0;
    for (const Complex& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

double SpectralField::relative_hermitian_asymmetry() const {
    double scale = max_abs();
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    std::size_t nm = modes();
    for (int c = 0; c < components; ++c) {
        for (std::size_t f = 0; f < nm; ++f) {
            std::size_t g = grid.conjugate_index(f);
            if (g < f) continue; // each unordered pair once
            Complex diff = at(c, f) - std::conj(at(c, g));
            worst = std::max(worst, std::abs(diff));
        }
    }
    return worst / scale;
}

bool SpectralField::stored_mean_is_zero() const {
    for (int c = 0; c < components; ++c) {
        if (at(c, 0) != Complex(0.0, 0.0)) return false;
    }
    return true;
}

void SpectralField::zero_mean() {
    for (int c = 0; c < components; ++c) at(c, 0) = Complex(0.0, 0.0);
    mean_zero = true;
}

void require_same_shape(const SpectralField& a, const SpectralField& b, const char* who) {
    if (!(a.grid == b.grid)) throw std::invalid_argument(std::string(who) + ": grid mismatch");
    if (a.components != b.components) throw std::invalid_argument(std::string(who) + ": component count mismatch");
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    require_same_shape(a, b, "operator+");
    SpectralField out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    out.mean_zero = a.mean_zero && b.mean_zero;
    return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    require_same_shape(a, b, "operator-");
    SpectralField out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    out.mean_zero = a.mean_zero && b.mean_zero;
    return out;
}

SpectralField operator*(double s, const SpectralField& f) {
    SpectralField out = f;
    for (Complex& c : out.coeffs) c *= s;
    return out;
}

double max_abs_diff(const SpectralField& a, const SpectralField& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
    return m;
}

double divergence_residual(const SpectralField& u) {
    if (u.components != u.grid.d) throw std::invalid_argument("divergence_residual: need components == d");
    double scale = u.max_abs();
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    std::size_t nm = u.modes();
    for (std::size_t f = 0; f < nm; ++f) {
        std::array<double, 3> xi = u.grid.xi(f);
        Complex dot(0.0, 0.0);
        for (int c = 0; c < u.components; ++c) dot += xi[static_cast<std::size_t>(c)] * u.at(c, f);
        worst = std::max(worst, std::abs(dot));
    }
    return worst / scale;
}

} // namespace flns
