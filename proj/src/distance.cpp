#include "bnsynth/distance.hpp"

namespace bnsynth {

double truth_distance(const Formula& a, const Formula& b) {
    if (a.support() != b.support())
        throw ContractViolation("truth distance needs formulas over the same support");
    TruthTable ta = a.table(), tb = b.table();
    return static_cast<double>(ta.count_differences(tb)) / static_cast<double>(ta.size());
}

double network_distance(const BooleanNetwork& a, const BooleanNetwork& b) {
    if (a.size() != b.size())
        throw ContractViolation("network distance needs networks over the same variables");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.name(static_cast<int>(i)) != b.name(static_cast<int>(i)))
            throw ContractViolation("network distance needs networks over the same variables");
    if (a.size() == 0) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += truth_distance(a.function(static_cast<int>(i)), b.function(static_cast<int>(i)));
    return total / static_cast<double>(a.size());
}

} // namespace bnsynth
