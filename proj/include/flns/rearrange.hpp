#pragma once
#include <cstddef>
#include <utility>
#include <vector>

namespace flns {

// Neumaier compensated summation; used wherever norm accumulation order could
// otherwise cost digits.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Finite weighted atom set: pairs (value >= 0, measure > 0).  Negative values
// or measures are argument errors; zero-measure atoms carry nothing and are
// dropped on insertion.
struct WeightedAtoms {
    std::vector<std::pair<double, double>> items;
    void add(double value, double measure);
    std::size_t size() const { return items.size(); }
};

// Decreasing rearrangement of a weighted atom set as a step profile:
// f*(t) = values[j] for t in [cum_measures[j-1], cum_measures[j]), 0 past the
// total measure.  Values are strictly decreasing and positive (zeros dropped,
// ties merged); cumulative measures are strictly increasing.
struct RearrangementProfile {
    std::vector<double> values;
    std::vector<double> cum_measures;

    bool empty() const { return values.empty(); }
    std::size_t steps() const { return values.size(); }
    double total_measure() const { return cum_measures.empty() ? 0.0 : cum_measures.back(); }
    double value_at(double t) const; // f*(t), t >= 0
};

RearrangementProfile rearrange(const WeightedAtoms& atoms);

} // namespace flns
