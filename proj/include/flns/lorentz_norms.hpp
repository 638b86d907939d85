#pragma once
#include <limits>

#include "flns/field.hpp"
#include "flns/rearrange.hpp"

namespace flns {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Lorentz exponent policy for the pair (q = infinity, r < infinity), whose
// continuum space contains only 0: the literal norm of a nonempty profile is
// +infinity.  The sup surrogate instead treats the pair as (infinity,
// infinity) and must be requested explicitly.
enum class InfinityPolicy { literal, sup_surrogate };

struct LorentzValue {
    double value = 0.0;
    bool divergent = false; // literal (q = inf, r < inf) on a nonempty profile
};

// L^{q,r} norm of a step profile, 1 <= q, r <= infinity:
//   r < inf : ( sum_j a_j^r (q/r) (T_j^{r/q} - T_{j-1}^{r/q}) )^{1/r}
//   r = inf : max_j T_j^{1/q} a_j   (a_1 when q = inf)
LorentzValue lorentz_norm_ex(const RearrangementProfile& profile, double q, double r,
                             InfinityPolicy policy = InfinityPolicy::literal);
double lorentz_norm(const RearrangementProfile& profile, double q, double r,
                    InfinityPolicy policy = InfinityPolicy::literal);

// Norm specification for the homogeneous Sobolev space over the Fourier-Lorentz
// space with integrability p and fine index r: ||u|| = || |xi|^s u^ ||_{L^{p',r}}.
struct NormSpec {
    double s = 0.0;
    double p = 2.0;
    double r = 2.0;
    InfinityPolicy policy = InfinityPolicy::literal;

    double conjugate() const; // p'
    void validate() const;
};

struct SflValue {
    double value = 0.0;
    bool divergent = false;
};

// Spectral-side norm of a mean-zero field: per component, atoms
// (W |xi|^s |u^(xi)|, (2*pi/L)^d) over nonzero modes with W the unitary
// transform weight, measured in L^{p',r}; components combine in l2.
// p = 1 with r < infinity is the divergent pair unless the surrogate policy
// is selected; the flag reports it.
SflValue sfl_norm_ex(const SpectralField& f, const NormSpec& spec);
double sfl_norm(const SpectralField& f, const NormSpec& spec);

// Direct L^{p'} route (no rearrangement): equals sfl_norm with r = p'.
double fourier_lebesgue_norm(const SpectralField& f, double s, double p);

// Physical-side homogeneous Sobolev norm || Lambda^s f ||_{L^q(cells)},
// 1 < q < infinity; components combine in l2.
double classical_sobolev_norm(const SpectralField& f, double s, double q);

} // namespace flns
