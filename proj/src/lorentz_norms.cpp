#include "flns/lorentz_norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flns/fft.hpp"
#include "flns/multipliers.hpp"

namespace flns {

namespace {

void validate_exponent(double e, const char* name) {
    if (std::isnan(e) || e < 1.0)
        throw std::invalid_argument(std::string("lorentz_norm: ") + name + " must lie in [1, infinity]");
}

double l2_combine(const std::vector<double>& vals) {
    CompensatedSum acc;
    for (double v : vals) {
        if (std::isinf(v)) return kInf;
        acc.add(v * v);
    }
    return std::sqrt(acc.value());
}

} // namespace

LorentzValue lorentz_norm_ex(const RearrangementProfile& profile, double q, double r, InfinityPolicy policy) {
    validate_exponent(q, "q");
    validate_exponent(r, "r");
    if (profile.empty()) return {0.0, false};

    bool q_inf = std::isinf(q);
    bool r_inf = std::isinf(r);

    if (q_inf && !r_inf) {
        if (policy == InfinityPolicy::sup_surrogate) return {profile.values.front(), false};
        return {kInf, true}; // integral of t^{-1} against a profile bounded below diverges
    }
    if (r_inf) {
        if (q_inf) return {profile.values.front(), false};
        double best = 0.0;
        for (std::size_t j = 0; j < profile.steps(); ++j)
            best = std::max(best, std::pow(profile.cum_measures[j], 1.0 / q) * profile.values[j]);
        return {best, false};
    }

    // r, q finite: exact stepwise integral of (t^{1/q} f*(t))^r dt/t.
    double rq = r / q;
    CompensatedSum acc;
    double prev_pow = 0.0;
    for (std::size_t j = 0; j < profile.steps(); ++j) {
        double cur_pow = std::pow(profile.cum_measures[j], rq);
        acc.add(std::pow(profile.values[j], r) * (q / r) * (cur_pow - prev_pow));
        prev_pow = cur_pow;
    }
    return {std::pow(acc.value(), 1.0 / r), false};
}

double lorentz_norm(const RearrangementProfile& profile, double q, double r, InfinityPolicy policy) {
    return lorentz_norm_ex(profile, q, r, policy).value;
}

double NormSpec::conjugate() const {
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

void NormSpec::validate() const {
    if (std::isnan(p) || p < 1.0) throw std::invalid_argument("NormSpec: p must lie in [1, infinity]");
    if (std::isnan(r) || r < 1.0) throw std::invalid_argument("NormSpec: r must lie in [1, infinity]");
    if (!std::isfinite(s)) throw std::invalid_argument("NormSpec: s must be finite");
}

SflValue sfl_norm_ex(const SpectralField& f, const NormSpec& spec) {
    spec.validate();
    if (!f.stored_mean_is_zero())
        throw std::domain_error("sfl_norm: field must be mean-zero (homogeneous norm)");

    double q = spec.conjugate();
    double w = f.grid.spectral_weight();
    double meas = f.grid.mode_measure();
    std::size_t nm = f.modes();

    bool divergent = false;
    std::vector<double> comp_norms;
    comp_norms.reserve(static_cast<std::size_t>(f.components));
    for (int c = 0; c < f.components; ++c) {
        WeightedAtoms atoms;
        atoms.items.reserve(nm);
        for (std::size_t k = 1; k < nm; ++k) {
            double x2 = f.grid.xi_norm2(k);
            if (x2 == 0.0) continue; // only k = 0
            double mag = std::abs(f.at(c, k));
            if (mag == 0.0) continue;
            double val = w * std::pow(std::sqrt(x2), spec.s) * mag;
            atoms.add(val, meas);
        }
        LorentzValue lv = lorentz_norm_ex(rearrange(atoms), q, spec.r, spec.policy);
        divergent = divergent || lv.divergent;
        comp_norms.push_back(lv.value);
    }
    return {l2_combine(comp_norms), divergent};
}

double sfl_norm(const SpectralField& f, const NormSpec& spec) { return sfl_norm_ex(f, spec).value; }

double fourier_lebesgue_norm(const SpectralField& f, double s, double p) {
    NormSpec spec{s, p, 2.0, InfinityPolicy::literal};
    spec.validate();
    if (!f.stored_mean_is_zero())
        throw std::domain_error("fourier_lebesgue_norm: field must be mean-zero");

    double q = spec.conjugate();
    double w = f.grid.spectral_weight();
    double meas = f.grid.mode_measure();
    std::size_t nm = f.modes();

    std::vector<double> comp_norms;
    comp_norms.reserve(static_cast<std::size_t>(f.components));
    for (int c = 0; c < f.components; ++c) {
        if (std::isinf(q)) {
            double best = 0.0;
            for (std::size_t k = 1; k < nm; ++k) {
                double x2 = f.grid.xi_norm2(k);
                if (x2 == 0.0) continue;
                best = std::max(best, w * std::pow(std::sqrt(x2), s) * std::abs(f.at(c, k)));
            }
            comp_norms.push_back(best);
        } else {
            CompensatedSum acc;
            for (std::size_t k = 1; k < nm; ++k) {
                double x2 = f.grid.xi_norm2(k);
                if (x2 == 0.0) continue;
                double val = w * std::pow(std::sqrt(x2), s) * std::abs(f.at(c, k));
                if (val == 0.0) continue;
                acc.add(std::pow(val, q) * meas);
            }
            comp_norms.push_back(std::pow(acc.value(), 1.0 / q));
        }
    }
    return l2_combine(comp_norms);
}

double classical_sobolev_norm(const SpectralField& f, double s, double q) {
    if (!(q > 1.0) || !(q < kInf) || std::isnan(q))
        throw std::invalid_argument("classical_sobolev_norm: q must lie in (1, infinity)");
    if (!f.stored_mean_is_zero())
        throw std::domain_error("classical_sobolev_norm: field must be mean-zero");

    SpectralField g = lambda_power(f, s);
    std::vector<double> phys = to_physical(g);
    double cell = f.grid.cell_measure();
    std::size_t nm = f.modes();

    std::vector<double> comp_norms;
    comp_norms.reserve(static_cast<std::size_t>(f.components));
    for (int c = 0; c < f.components; ++c) {
        CompensatedSum acc;
        const double* src = phys.data() + static_cast<std::size_t>(c) * nm;
        for (std::size_t i = 0; i < nm; ++i) acc.add(std::pow(std::abs(src[i]), q) * cell);
        comp_norms.push_back(std::pow(acc.value(), 1.0 / q));
    }
    return l2_combine(comp_norms);
}

} // namespace flns
