#pragma once
#include <complex>

#include "flns/multipliers.hpp"
#include "flns/quadrature.hpp"
#include "flns/trajectory.hpp"

namespace flns {

// Heat evolution of initial data sampled on a time grid.
Trajectory heat_trajectory(const SpectralField& u0, const std::vector<double>& times);

// Dealiased tensor product (u (x) v)_{ij} = u_i v_j, component index i*d + j.
// Both inputs are two-thirds filtered, the pointwise product is taken on the
// physical grid, and the result is filtered again and mean-subtracted.
SpectralField nonlinear_tensor(const SpectralField& u, const SpectralField& v);

// Duhamel bilinear operator on trajectories sharing one time grid
// (t_0 = 0 < ... < t_M):
//   B(u, v)(t_i) = integral_0^{t_i} e^{-(t_i - tau)|xi|^2} [P div (u (x) v)]^(tau) dtau,
// with the integrand piecewise linear in tau between samples and every panel
// integrated exactly against the heat factor (phi1/phi2 weights).  B(t_0) = 0;
// outputs are divergence-free and mean-zero.
Trajectory bilinear_B(const Trajectory& u, const Trajectory& v, const QuadratureRule& rule = {});

// Oseen-type kernel symbol
//   K^_{l,k,j}(eta) = (2 pi)^{-d/2} |eta|^{frac_s} e^{-|eta|^2}
//                     (delta_jk - eta_j eta_k / |eta|^2) (i eta_l),
// the frac_s = 0 case being the first-derivative heat-projection kernel.
std::complex<double> kernel_symbol(int d, double frac_s, int l, int k, int j,
                                   const std::array<double, 3>& eta);

struct KernelNorm {
    double value = 0.0;
    bool resolved = true; // grid captures the Gaussian decay of the scaled symbol
};

// Discretization of || K(. / sqrt(h)) ||_{FL^{r,1}} = h^{d/2} || K^(sqrt(h) .) ||_{L^{r',1}}:
// per tensor component, atoms (h^{d/2} |K^(sqrt(h) xi)|, (2 pi/L)^d) over
// nonzero modes measured in L^{r',1}; components combine in l2.  Scales like
// h^{d/(2r)} while the grid resolves the scaled Gaussian.
KernelNorm kernel_fl_norm_ex(double frac_s, double r, double h, const Grid& grid);
double kernel_fl_norm(double frac_s, double r, double h, const Grid& grid);

} // namespace flns
