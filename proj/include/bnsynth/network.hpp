#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnsynth/formula.hpp"

namespace bnsynth {

struct Variable {
    std::string name;
    int index = 0;
};

// +1 pure activation, -1 pure inhibition, 0 both behaviours observed.
enum class InteractionSign : int { Positive = 1, Negative = -1, Dual = 0 };

struct Arc {
    int source = 0;
    int target = 0;
    InteractionSign sign = InteractionSign::Dual;
};

class SignedInteractionGraph {
public:
    SignedInteractionGraph() = default;
    SignedInteractionGraph(std::size_t num_nodes, std::vector<Arc> arcs);

    std::size_t num_nodes() const { return num_nodes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<std::vector<int>>& targets_of(/*all*/) const { return out_; }
    std::optional<InteractionSign> sign(int source, int target) const;

private:
    std::size_t num_nodes_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_; // out_[i] = targets of i
};

// One update function per variable; variables carry both names and indices.
class BooleanNetwork {
public:
    BooleanNetwork() = default;
    BooleanNetwork(std::vector<std::string> names, std::vector<Formula> functions);

    std::size_t size() const { return variables_.size(); }
    const std::vector<Variable>& variables() const { return variables_; }
    const std::string& name(int var) const { return variables_[static_cast<std::size_t>(var)].name; }
    std::optional<int> index_of(const std::string& name) const;

    const Formula& function(int var) const { return functions_[static_cast<std::size_t>(var)]; }
    const std::vector<Formula>& functions() const { return functions_; }
    void replace_function(int var, Formula f);

    // Synchronous image F(s).
    State apply(const State& s) const;

    // 128-bit semantic fingerprint built from per-variable truth tables.
    std::pair<std::uint64_t, std::uint64_t> fingerprint() const;

private:
    std::vector<Variable> variables_;
    std::vector<Formula> functions_;
    std::map<std::string, int> index_;
};

// Per-regulator signs of a single formula, computed by scanning all sibling
// input pairs of its truth table. Variables in the support with no actual
// influence are absent from the result.
std::map<int, InteractionSign> formula_signs(const Formula& f);

// Interaction graph of the whole network: an arc i -> j exists iff flipping
// x_i can change f_j, signed by the observed monotonicity.
SignedInteractionGraph derive_interactions(const BooleanNetwork& network);

// True iff every influencing regulator of f is purely positive or negative.
bool is_monotone(const Formula& f);

} // namespace bnsynth
