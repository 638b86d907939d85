#include "flns/multipliers.hpp"

#include <cmath>
#include <stdexcept>

#include "flns/errors.hpp"

namespace flns {

namespace {

void require_mean_zero(const SpectralField& f, const char* who) {
    if (!f.stored_mean_is_zero())
        throw std::domain_error(std::string(who) + ": input must be mean-zero (k=0 coefficient is nonzero)");
}

} // namespace

MultiplierSymbol MultiplierSymbol::lambda_power(double s) {
    MultiplierSymbol m;
    m.kind = SymbolKind::lambda_power;
    m.s = s;
    return m;
}
MultiplierSymbol MultiplierSymbol::heat(double t) {
    MultiplierSymbol m;
    m.kind = SymbolKind::heat;
    m.t = t;
    return m;
}
MultiplierSymbol MultiplierSymbol::riesz(int j) {
    MultiplierSymbol m;
    m.kind = SymbolKind::riesz;
    m.j = j;
    return m;
}
MultiplierSymbol MultiplierSymbol::leray() {
    MultiplierSymbol m;
    m.kind = SymbolKind::leray;
    return m;
}
MultiplierSymbol MultiplierSymbol::derivative(std::array<int, 3> alpha) {
    MultiplierSymbol m;
    m.kind = SymbolKind::derivative;
    m.alpha = alpha;
    return m;
}
MultiplierSymbol MultiplierSymbol::projected_divergence(int j) {
    MultiplierSymbol m;
    m.kind = SymbolKind::projected_divergence;
    m.j = j;
    return m;
}

SpectralField lambda_power(const SpectralField& f, double s) {
    if (s < 0.0) require_mean_zero(f, "lambda_power");
    SpectralField out = f;
    if (s == 0.0) return out;
    std::size_t nm = f.modes();
    for (std::size_t k = 0; k < nm; ++k) {
        double x2 = f.grid.xi_norm2(k);
        double sym = (x2 == 0.0) ? 0.0 : std::pow(std::sqrt(x2), s);
        for (int c = 0; c < f.components; ++c) out.at(c, k) *= sym;
    }
    out.mean_zero = out.stored_mean_is_zero();
    return out;
}

SpectralField heat_evolve(const SpectralField& f, double t) {
    if (t < 0.0 || !std::isfinite(t)) throw std::invalid_argument("heat_evolve: t must be finite and >= 0");
    SpectralField out = f;
    if (t == 0.0) return out;
    std::size_t nm = f.modes();
    for (std::size_t k = 0; k < nm; ++k) {
        double sym = std::exp(-t * f.grid.xi_norm2(k));
        for (int c = 0; c < f.components; ++c) out.at(c, k) *= sym;
    }
    return out;
}

SpectralField derivative(const SpectralField& f, std::array<int, 3> alpha) {
    for (int a = 0; a < 3; ++a) {
        if (alpha[static_cast<std::size_t>(a)] < 0) throw std::invalid_argument("derivative: multi-index must be nonnegative");
        if (a >= f.grid.d && alpha[static_cast<std::size_t>(a)] != 0)
            throw std::invalid_argument("derivative: multi-index exceeds dimension");
    }
    SpectralField out = f;
    std::size_t nm = f.modes();
    for (std::size_t k = 0; k < nm; ++k) {
        std::array<double, 3> xi = f.grid.xi(k);
        Complex sym(1.0, 0.0);
        for (int a = 0; a < f.grid.d; ++a) {
            for (int rep = 0; rep < alpha[static_cast<std::size_t>(a)]; ++rep) sym *= Complex(0.0, xi[static_cast<std::size_t>(a)]);
        }
        for (int c = 0; c < f.components; ++c) out.at(c, k) *= sym;
    }
    out.mean_zero = out.stored_mean_is_zero();
    return out;
}

SpectralField riesz(const SpectralField& f, int j) {
    if (j < 0 || j >= f.grid.d) throw std::invalid_argument("riesz: component out of range");
    require_mean_zero(f, "riesz");
    SpectralField out = f;
    std::size_t nm = f.modes();
    for (std::size_t k = 0; k < nm; ++k) {
        double x2 = f.grid.xi_norm2(k);
        Complex sym = (x2 == 0.0) ? Complex(0.0, 0.0)
                                  : Complex(0.0, f.grid.xi(k)[static_cast<std::size_t>(j)] / std::sqrt(x2));
        for (int c = 0; c < f.components; ++c) out.at(c, k) *= sym;
    }
    out.mean_zero = true;
    return out;
}

SpectralField leray_project(const SpectralField& u) {
    if (u.components != u.grid.d) throw std::invalid_argument("leray_project: need components == d");
    require_mean_zero(u, "leray_project");
    SpectralField out = u;
    int d = u.grid.d;
    std::size_t nm = u.modes();
    for (std::size_t k = 0; k < nm; ++k) {
        double x2 = u.grid.xi_norm2(k);
        if (x2 == 0.0) {
            for (int c = 0; c < d; ++c) out.at(c, k) = Complex(0.0, 0.0);
            continue;
        }
        std::array<double, 3> xi = u.grid.xi(k);
        Complex dot(0.0, 0.0);
        for (int c = 0; c < d; ++c) dot += xi[static_cast<std::size_t>(c)] * u.at(c, k);
        dot /= x2;
        for (int c = 0; c < d; ++c) out.at(c, k) = u.at(c, k) - xi[static_cast<std::size_t>(c)] * dot;
    }
    out.mean_zero = true;
    return out;
}

SpectralField projected_tensor_divergence(const SpectralField& w) {
    int d = w.grid.d;
    if (w.components != d * d) throw std::invalid_argument("projected_tensor_divergence: need components == d*d");
    SpectralField out(w.grid, d);
    std::size_t nm = w.modes();
    for (std::size_t m = 0; m < nm; ++m) {
        double x2 = w.grid.xi_norm2(m);
        if (x2 == 0.0) continue;
        std::array<double, 3> xi = w.grid.xi(m);
        // div_k = sum_l (i xi_l) w_{lk}; out_j = div_j - xi_j (xi . div)/|xi|^2
        std::array<Complex, 3> div{Complex(0, 0), Complex(0, 0), Complex(0, 0)};
        for (int k = 0; k < d; ++k) {
            Complex acc(0.0, 0.0);
            for (int l = 0; l < d; ++l) acc += xi[static_cast<std::size_t>(l)] * w.at(l * d + k, m);
            div[static_cast<std::size_t>(k)] = Complex(0.0, 1.0) * acc;
        }
        Complex xdot(0.0, 0.0);
        for (int k = 0; k < d; ++k) xdot += xi[static_cast<std::size_t>(k)] * div[static_cast<std::size_t>(k)];
        xdot /= x2;
        for (int j = 0; j < d; ++j)
            out.at(j, m) = div[static_cast<std::size_t>(j)] - xi[static_cast<std::size_t>(j)] * xdot;
    }
    out.mean_zero = true;
    return out;
}

SpectralField dealias_two_thirds(const SpectralField& f) {
    SpectralField out = f;
    std::size_t nm = f.modes();
    double cutoff = f.grid.n / 3.0;
    for (std::size_t m = 0; m < nm; ++m) {
        std::array<int, 3> k = f.grid.wavevector(m);
        bool kill = false;
        for (int a = 0; a < f.grid.d; ++a) {
            if (std::abs(k[static_cast<std::size_t>(a)]) > cutoff) { kill = true; break; }
        }
        if (kill) {
            for (int c = 0; c < f.components; ++c) out.at(c, m) = Complex(0.0, 0.0);
        }
    }
    return out;
}

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& m) {
    switch (m.kind) {
        case SymbolKind::lambda_power: return lambda_power(f, m.s);
        case SymbolKind::heat: return heat_evolve(f, m.t);
        case SymbolKind::riesz: return riesz(f, m.j);
        case SymbolKind::derivative: return derivative(f, m.alpha);
        case SymbolKind::leray: return leray_project(f);
        case SymbolKind::projected_divergence: {
            SpectralField full = projected_tensor_divergence(f);
            if (m.j < 0 || m.j >= f.grid.d) throw std::invalid_argument("projected_divergence: component out of range");
            SpectralField out(f.grid, 1);
            std::size_t nm = f.modes();
            for (std::size_t k = 0; k < nm; ++k) out.at(0, k) = full.at(m.j, k);
            out.mean_zero = true;
            return out;
        }
    }
    throw std::invalid_argument("apply_multiplier: unknown symbol kind");
}

} // namespace flns
