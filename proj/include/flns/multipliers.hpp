#pragma once
#include <array>

#include "flns/field.hpp"

namespace flns {

// Fourier multiplier operators.  Homogeneous symbols (|xi|^s, i xi_j/|xi|, the
// projection) take the value 0 at xi = 0; operators whose symbol is singular
// at the origin require an exactly mean-zero input.

enum class SymbolKind { lambda_power, heat, riesz, leray, derivative, projected_divergence };

struct MultiplierSymbol {
    SymbolKind kind = SymbolKind::lambda_power;
    double s = 0.0;                  // lambda_power exponent
    double t = 0.0;                  // heat time
    int j = 0;                       // riesz / projected_divergence component
    std::array<int, 3> alpha{0, 0, 0}; // derivative multi-index

    static MultiplierSymbol lambda_power(double s);
    static MultiplierSymbol heat(double t);
    static MultiplierSymbol riesz(int j);
    static MultiplierSymbol leray();
    static MultiplierSymbol derivative(std::array<int, 3> alpha);
    static MultiplierSymbol projected_divergence(int j);
};

// Coefficientwise application.  leray dispatches to leray_project (needs
// components == d); projected_divergence(j) yields the j-th component of
// projected_tensor_divergence (needs components == d*d).
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& m);

// Lambda^s = |xi|^s, componentwise.  s < 0 requires mean_zero.
SpectralField lambda_power(const SpectralField& f, double s);

// Heat semigroup e^{t Laplacian}: multiplier e^{-t |xi|^2}, t >= 0.
SpectralField heat_evolve(const SpectralField& f, double t);

// partial^alpha, symbol (i xi)^alpha.
SpectralField derivative(const SpectralField& f, std::array<int, 3> alpha);

// Riesz transform R_j, symbol i xi_j / |xi|.  Requires mean_zero.
SpectralField riesz(const SpectralField& f, int j);

// Leray projection onto divergence-free fields: P_{jk} = delta_jk - xi_j xi_k/|xi|^2.
// Requires components == d and mean_zero.
SpectralField leray_project(const SpectralField& u);

// j-th output of the projected tensor divergence:
//   out_j = sum_{l,k} (delta_jk - xi_j xi_k/|xi|^2) (i xi_l) w_{lk},
// where the tensor component (l,k) is stored at index l*d + k.  Requires
// components == d*d; the result is divergence-free and mean-zero.
SpectralField projected_tensor_divergence(const SpectralField& w);

// Two-thirds rule: zero every mode with any |k_i| > n/3.
SpectralField dealias_two_thirds(const SpectralField& f);

} // namespace flns
