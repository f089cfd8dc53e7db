#pragma once

#include "bnsynth/network.hpp"

namespace bnsynth {

// Fraction of input patterns on which two same-support formulas disagree.
double truth_distance(const Formula& a, const Formula& b);

// Mean of the per-variable truth distances of two structurally matching
// networks (same variables, same per-variable supports).
double network_distance(const BooleanNetwork& a, const BooleanNetwork& b);

} // namespace bnsynth
