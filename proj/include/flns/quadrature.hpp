#pragma once

namespace flns {

// Exponential moments used by the piecewise-linear-in-time heat quadrature:
//   phi1(z) = (e^z - 1)/z,   phi2(z) = (e^z - 1 - z)/z^2,
// evaluated by Taylor series for |z| below series_threshold and in closed form
// (expm1-based) otherwise; the two branches agree to 1e-13 at the switch.
struct QuadratureRule {
    double series_threshold = 1e-3;
};

double phi1(double z, const QuadratureRule& rule = {});
double phi2(double z, const QuadratureRule& rule = {});

// Closed-form weights for one quadrature panel: with g piecewise linear on
// [a, b] (0 <= a < b <= t) and lam >= 0,
//   integral_a^b e^{-(t - tau) lam} g(tau) dtau = wa * g(a) + wb * g(b).
struct PanelWeights {
    double wa = 0.0;
    double wb = 0.0;
};
PanelWeights heat_panel_weights(double lam, double a, double b, double t, const QuadratureRule& rule = {});

// integral_0^t (t - tau)^{alpha-1} tau^{-alpha} dtau for alpha in (0, 1),
// evaluated by adaptive quadrature after substitutions that remove both
// endpoint singularities.  Analytically constant in t, = pi / sin(pi alpha).
double beta_weight_integral(double alpha, double t, double rel_tol = 1e-9);

} // namespace flns
