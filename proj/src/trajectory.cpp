#include "flns/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace flns {

void Trajectory::validate(const char* who) const {
    if (times.empty() || times.size() != fields.size())
        throw std::invalid_argument(std::string(who) + ": trajectory times/fields mismatch or empty");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument(std::string(who) + ": trajectory times must be strictly increasing");
    }
    if (times.front() < 0.0) throw std::invalid_argument(std::string(who) + ": trajectory times must be >= 0");
    for (std::size_t i = 1; i < fields.size(); ++i) require_same_shape(fields[0], fields[i], who);
}

namespace {
void require_same_times(const Trajectory& a, const Trajectory& b, const char* who) {
    if (a.times != b.times) throw std::invalid_argument(std::string(who) + ": trajectories use different time grids");
}
} // namespace

Trajectory operator-(const Trajectory& a, const Trajectory& b) {
    require_same_times(a, b, "Trajectory operator-");
    Trajectory out;
    out.times = a.times;
    out.fields.reserve(a.fields.size());
    for (std::size_t i = 0; i < a.fields.size(); ++i) out.fields.push_back(a.fields[i] - b.fields[i]);
    return out;
}

Trajectory operator+(const Trajectory& a, const Trajectory& b) {
    require_same_times(a, b, "Trajectory operator+");
    Trajectory out;
    out.times = a.times;
    out.fields.reserve(a.fields.size());
    for (std::size_t i = 0; i < a.fields.size(); ++i) out.fields.push_back(a.fields[i] + b.fields[i]);
    return out;
}

Trajectory scale_trajectory(double s, const Trajectory& t) {
    Trajectory out;
    out.times = t.times;
    out.fields.reserve(t.fields.size());
    for (const SpectralField& f : t.fields) out.fields.push_back(s * f);
    return out;
}

std::vector<double> graded_times(double T, int M, double gamma) {
    if (!(T > 0.0) || M < 1 || !(gamma >= 1.0))
        throw std::invalid_argument("graded_times: need T > 0, M >= 1, gamma >= 1");
    std::vector<double> out(static_cast<std::size_t>(M) + 1);
    for (int i = 0; i <= M; ++i)
        out[static_cast<std::size_t>(i)] = T * std::pow(static_cast<double>(i) / M, gamma);
    return out;
}

WeightedSup weighted_sup_norm(const Trajectory& traj, const NormSpec& spec, double weight_exp) {
    traj.validate("weighted_sup_norm");
    WeightedSup out;
    bool have_earliest = false;
    bool have_any = false;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        double t = traj.times[i];
        if (t == 0.0 && weight_exp != 0.0) continue; // weight vanishes at t = 0
        double term = (t == 0.0 ? 1.0 : std::pow(t, weight_exp)) * sfl_norm(traj.fields[i], spec);
        if (!have_earliest && t > 0.0) {
            out.earliest_value = term;
            have_earliest = true;
        }
        if (!have_any || term > out.value) {
            out.value = term;
            out.argmax_time = t;
            have_any = true;
        }
    }
    return out;
}

} // namespace flns
