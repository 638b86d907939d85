#include "flns/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flns {

void WeightedAtoms::add(double value, double measure) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw std::invalid_argument("WeightedAtoms: value must be finite and >= 0");
    if (measure < 0.0 || !std::isfinite(measure))
        throw std::invalid_argument("WeightedAtoms: measure must be finite and >= 0");
    if (measure == 0.0) return;
    items.emplace_back(value, measure);
}

double RearrangementProfile::value_at(double t) const {
    if (t < 0.0) throw std::invalid_argument("RearrangementProfile: t must be >= 0");
    // first step whose right endpoint lies strictly beyond t
    auto it = std::upper_bound(cum_measures.begin(), cum_measures.end(), t);
    if (it == cum_measures.end()) return 0.0;
    return values[static_cast<std::size_t>(it - cum_measures.begin())];
}

RearrangementProfile rearrange(const WeightedAtoms& atoms) {
    std::vector<std::pair<double, double>> sorted;
    sorted.reserve(atoms.items.size());
    for (const auto& [v, m] : atoms.items) {
        if (v > 0.0) sorted.emplace_back(v, m);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    RearrangementProfile out;
    out.values.reserve(sorted.size());
    out.cum_measures.reserve(sorted.size());
    double cum = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cum += sorted[i].second;
        if (!out.values.empty() && out.values.back() == sorted[i].first)
            out.cum_measures.back() = cum; // merge equal values into one step
        else {
            out.values.push_back(sorted[i].first);
            out.cum_measures.push_back(cum);
        }
    }
    return out;
}

} // namespace flns
