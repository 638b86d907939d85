#pragma once
#include <vector>

#include "flns/field.hpp"
#include "flns/lorentz_norms.hpp"

namespace flns {

// Field trajectory sampled on a shared increasing time grid starting at 0.
struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> fields;

    std::size_t size() const { return times.size(); }
    void validate(const char* who) const;
};

Trajectory operator-(const Trajectory& a, const Trajectory& b);
Trajectory operator+(const Trajectory& a, const Trajectory& b);
Trajectory scale_trajectory(double s, const Trajectory& t);

// Graded time grid t_i = T (i/M)^gamma, i = 0..M.
std::vector<double> graded_times(double T, int M, double gamma);

struct WeightedSup {
    double value = 0.0;
    double argmax_time = 0.0;
    double earliest_value = 0.0; // weighted value at the first positive time
};

// sup over grid times of t^weight_exp * sfl_norm(u(t), spec).  The t = 0
// sample contributes its plain norm when weight_exp == 0 and nothing
// otherwise (the weight vanishes there).
WeightedSup weighted_sup_norm(const Trajectory& traj, const NormSpec& spec, double weight_exp);

} // namespace flns
