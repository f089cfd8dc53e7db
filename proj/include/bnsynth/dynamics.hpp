#pragma once

#include <utility>
#include <vector>

#include "bnsynth/expr.hpp"
#include "bnsynth/network.hpp"

namespace bnsynth {

struct StableStateSet {
    std::vector<State> states; // sorted, distinct
    bool truncated = false;
};

inline constexpr std::size_t kDefaultStableCap = std::size_t{1} << 16;

// One-variable update successors of s, including self-loops, ordered by
// the updated variable's index.
std::vector<std::pair<int, State>> async_successors(const BooleanNetwork& network, const State& s);

// All fixed points of the network, found by encoding x_i <-> f_i(x) as CNF
// and enumerating models projected on the network variables.
StableStateSet stable_states(const BooleanNetwork& network, std::size_t cap = kDefaultStableCap);

// Expression form of a DNF update function, over network variable indices.
Expr formula_to_expr(const Formula& f);

} // namespace bnsynth
