#pragma once

#include <cstdint>
#include <vector>

#include "bnsynth/formula.hpp"

namespace bnsynth {

// Cube over r label positions in numeric-bit space: `dash` marks free bits,
// `value` holds the fixed bits (masked to ~dash).
struct Cube {
    std::uint32_t value = 0;
    std::uint32_t dash = 0;

    bool covers(std::uint32_t minterm) const { return (minterm & ~dash) == value; }
    bool operator==(const Cube& o) const { return value == o.value && dash == o.dash; }
    bool operator<(const Cube& o) const {
        if (value != o.value) return value < o.value;
        return dash < o.dash;
    }
};

// All prime implicants of the on-set of `table`.
std::vector<Cube> prime_implicants(const TruthTable& table);

// Minimal-DNF synthesis from a complete truth table. `regulators` gives the
// variable id of each label position (first position = most significant
// bit). The result is term-minimal (exact cover) for arity <= 10 and uses a
// greedy cover above that; constants collapse to true/false. The returned
// formula's support is the full regulator set, sorted.
Formula minimize_dnf(const TruthTable& table, const std::vector<int>& regulators);

} // namespace bnsynth
