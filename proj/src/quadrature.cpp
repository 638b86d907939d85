#include "flns/quadrature.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace flns {

double phi1(double z, const QuadratureRule& rule) {
    if (std::abs(z) < rule.series_threshold) {
        // sum z^k/(k+1)!  -- next omitted term is z^5/720 < 1.4e-18 at the switch
        return 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
    }
    return std::expm1(z) / z;
}

double phi2(double z, const QuadratureRule& rule) {
    if (std::abs(z) < rule.series_threshold) {
        // sum z^k/(k+2)!
        return 1.0 / 2.0 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z * (1.0 / 120.0 + z / 720.0)));
    }
    return (std::expm1(z) - z) / (z * z);
}

PanelWeights heat_panel_weights(double lam, double a, double b, double t, const QuadratureRule& rule) {
    if (!(b > a) || a < 0.0 || b > t) throw std::invalid_argument("heat_panel_weights: need 0 <= a < b <= t");
    if (lam < 0.0) throw std::invalid_argument("heat_panel_weights: lam must be >= 0");
    double h = b - a;
    double w = lam * h;
    double tail = std::exp(-lam * (t - b));
    double p1 = phi1(-w, rule);
    double p2 = phi2(-w, rule);
    return {tail * h * (p1 - p2), tail * h * p2};
}

namespace {

// Adaptive Simpson on a smooth integrand.
double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    return adapt(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 48);
}

} // namespace

double beta_weight_integral(double alpha, double t, double rel_tol) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw std::invalid_argument("beta_weight_integral: alpha must lie in (0, 1)");
    if (!(t > 0.0)) throw std::invalid_argument("beta_weight_integral: t must be > 0");

    // Split at t/2.  On [0, t/2] substitute tau = v^{1/(1-alpha)}: the factor
    // tau^{-alpha} d tau becomes dv/(1-alpha) and the rest is smooth.  On
    // [t/2, t] substitute t - tau = u^{1/alpha}: (t-tau)^{alpha-1} d tau
    // becomes du/alpha.
    double half = 0.5 * t;
    double oma = 1.0 - alpha;

    auto left = [&](double v) {
        double tau = std::pow(v, 1.0 / oma);
        return std::pow(t - tau, alpha - 1.0) / oma;
    };
    auto right = [&](double u) {
        double tau = t - std::pow(u, 1.0 / alpha);
        return std::pow(tau, -alpha) / alpha;
    };

    // Crude scale for the absolute tolerance of each smooth piece.
    double scale = std::pow(half, alpha) * std::pow(half, -alpha) + 1.0;
    double tol = rel_tol * scale;
    double i1 = integrate(left, 0.0, std::pow(half, oma), tol);
    double i2 = integrate(right, 0.0, std::pow(half, alpha), tol);
    return i1 + i2;
}

} // namespace flns
