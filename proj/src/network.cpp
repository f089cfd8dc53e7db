#include "bnsynth/network.hpp"

#include <algorithm>

#include "bnsynth/rng.hpp"

namespace bnsynth {

SignedInteractionGraph::SignedInteractionGraph(std::size_t num_nodes, std::vector<Arc> arcs)
    : num_nodes_(num_nodes), arcs_(std::move(arcs)), out_(num_nodes) {
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
        if (a.source != b.source) return a.source < b.source;
        return a.target < b.target;
    });
    for (std::size_t i = 1; i < arcs_.size(); ++i)
        if (arcs_[i].source == arcs_[i - 1].source && arcs_[i].target == arcs_[i - 1].target)
            throw ContractViolation("duplicate arc in interaction graph");
    for (const Arc& a : arcs_) out_[static_cast<std::size_t>(a.source)].push_back(a.target);
}

std::optional<InteractionSign> SignedInteractionGraph::sign(int source, int target) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::make_pair(source, target),
                               [](const Arc& a, const std::pair<int, int>& key) {
                                   if (a.source != key.first) return a.source < key.first;
                                   return a.target < key.second;
                               });
    if (it != arcs_.end() && it->source == source && it->target == target) return it->sign;
    return std::nullopt;
}

BooleanNetwork::BooleanNetwork(std::vector<std::string> names, std::vector<Formula> functions)
    : functions_(std::move(functions)) {
    if (names.size() != functions_.size())
        throw ContractViolation("network needs exactly one function per variable");
    variables_.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!index_.emplace(names[i], static_cast<int>(i)).second)
            throw ContractViolation("duplicate variable name: " + names[i]);
        variables_.push_back(Variable{std::move(names[i]), static_cast<int>(i)});
    }
    for (const Formula& f : functions_)
        for (int v : f.support())
            if (v < 0 || static_cast<std::size_t>(v) >= variables_.size())
                throw ContractViolation("formula support references undeclared variable index " +
                                        std::to_string(v));
}

std::optional<int> BooleanNetwork::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void BooleanNetwork::replace_function(int var, Formula f) {
    for (int v : f.support())
        if (v < 0 || static_cast<std::size_t>(v) >= variables_.size())
            throw ContractViolation("formula support references undeclared variable index " +
                                    std::to_string(v));
    functions_[static_cast<std::size_t>(var)] = std::move(f);
}

State BooleanNetwork::apply(const State& s) const {
    State next(size());
    for (std::size_t i = 0; i < size(); ++i)
        next.set(static_cast<int>(i), functions_[i].evaluate(s));
    return next;
}

std::pair<std::uint64_t, std::uint64_t> BooleanNetwork::fingerprint() const {
    std::uint64_t a = 0x243f6a8885a308d3ULL, b = 0x13198a2e03707344ULL;
    for (std::size_t i = 0; i < functions_.size(); ++i) {
        TruthTable tt = functions_[i].table();
        std::uint64_t sup = 0;
        for (int v : functions_[i].support()) {
            std::uint64_t st = sup ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(v + 7));
            sup = splitmix64(st);
        }
        std::uint64_t ha = tt.hash(0xa5a5a5a5deadbeefULL ^ sup ^ i);
        std::uint64_t hb = tt.hash(0x0123456789abcdefULL ^ sup ^ (i << 17));
        std::uint64_t sa = a ^ ha, sb = b ^ hb;
        a = splitmix64(sa);
        b = splitmix64(sb);
    }
    return {a, b};
}

std::map<int, InteractionSign> formula_signs(const Formula& f) {
    std::map<int, InteractionSign> signs;
    const auto& support = f.support();
    const int r = static_cast<int>(support.size());
    if (r == 0) return signs;
    TruthTable tt = f.table();
    for (int pos = 0; pos < r; ++pos) {
        const std::size_t bit = std::size_t{1} << TruthTable::bit_of_position(r, pos);
        bool increasing = false, decreasing = false;
        for (std::size_t k = 0; k < tt.size(); ++k) {
            if (k & bit) continue;
            bool lo = tt.get(k), hi = tt.get(k | bit);
            if (lo < hi) increasing = true;
            if (lo > hi) decreasing = true;
            if (increasing && decreasing) break;
        }
        if (!increasing && !decreasing) continue; // no influence, no arc
        InteractionSign s = increasing && decreasing ? InteractionSign::Dual
                            : increasing            ? InteractionSign::Positive
                                                    : InteractionSign::Negative;
        signs.emplace(support[static_cast<std::size_t>(pos)], s);
    }
    return signs;
}

SignedInteractionGraph derive_interactions(const BooleanNetwork& network) {
    std::vector<Arc> arcs;
    for (std::size_t j = 0; j < network.size(); ++j)
        for (const auto& [src, sign] : formula_signs(network.function(static_cast<int>(j))))
            arcs.push_back(Arc{src, static_cast<int>(j), sign});
    return SignedInteractionGraph(network.size(), std::move(arcs));
}

bool is_monotone(const Formula& f) {
    for (const auto& [var, sign] : formula_signs(f))
        if (sign == InteractionSign::Dual) return false;
    return true;
}

} // namespace bnsynth
