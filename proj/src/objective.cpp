#include "bnsynth/objective.hpp"

#include <algorithm>

namespace bnsynth {

SignatureSet SignatureSet::build(std::vector<int> biomarkers,
                                 std::vector<std::vector<bool>> signatures) {
    // Canonical biomarker order is ascending variable index; signature bits
    // are permuted to follow.
    std::vector<std::size_t> order(biomarkers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return biomarkers[a] < biomarkers[b]; });
    SignatureSet out;
    out.biomarkers.reserve(biomarkers.size());
    for (std::size_t i : order) out.biomarkers.push_back(biomarkers[i]);
    for (std::size_t i = 1; i < out.biomarkers.size(); ++i)
        if (out.biomarkers[i] == out.biomarkers[i - 1])
            throw ContractViolation("duplicate biomarker");
    for (const auto& sig : signatures) {
        if (sig.size() != biomarkers.size())
            throw ContractViolation("signature arity does not match biomarker count");
        std::vector<bool> permuted(sig.size());
        for (std::size_t i = 0; i < order.size(); ++i) permuted[i] = sig[order[i]];
        out.signatures.push_back(std::move(permuted));
    }
    std::sort(out.signatures.begin(), out.signatures.end());
    out.signatures.erase(std::unique(out.signatures.begin(), out.signatures.end()),
                         out.signatures.end());
    return out;
}

std::vector<int> ScoreVector::flatten() const {
    std::vector<int> all;
    all.reserve(size());
    all.insert(all.end(), signature_distances.begin(), signature_distances.end());
    all.push_back(non_monotone);
    all.push_back(stable_gap);
    all.insert(all.end(), extras.begin(), extras.end());
    return all;
}

std::string ScoreVector::to_string(char sep) const {
    std::string out;
    bool first = true;
    for (int v : flatten()) {
        if (!first) out.push_back(sep);
        out += std::to_string(v);
        first = false;
    }
    return out;
}

ParetoOrder compare_pareto(const ScoreVector& a, const ScoreVector& b) {
    std::vector<int> fa = a.flatten(), fb = b.flatten();
    if (fa.size() != fb.size())
        throw ContractViolation("score vectors have different lengths");
    bool some_less = false, some_greater = false;
    for (std::size_t i = 0; i < fa.size(); ++i) {
        if (fa[i] < fb[i]) some_less = true;
        if (fa[i] > fb[i]) some_greater = true;
    }
    if (some_less && some_greater) return ParetoOrder::Incomparable;
    if (some_less) return ParetoOrder::Less;
    if (some_greater) return ParetoOrder::Greater;
    return ParetoOrder::Equal;
}

bool lexicographic_less(const ScoreVector& a, const ScoreVector& b) {
    return a.flatten() < b.flatten();
}

bool is_optimal(const ScoreVector& v) {
    for (int x : v.flatten())
        if (x != 0) return false;
    return true;
}

Objective::Objective(SignatureSet signatures, std::size_t ref_stable_count, std::size_t stable_cap)
    : signatures_(std::move(signatures)), ref_stable_count_(ref_stable_count),
      stable_cap_(stable_cap) {}

void Objective::register_criterion(std::string name,
                                   std::function<int(const BooleanNetwork&)> fn) {
    extra_.emplace_back(std::move(name), std::move(fn));
}

ScoreVector Objective::score(const BooleanNetwork& network) const {
    auto key = network.fingerprint();
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            if (!it->second) throw ScoringError("stable-state cap exceeded");
            return *it->second;
        }
    }
    std::optional<ScoreVector> result;
    try {
        result = compute(network);
    } catch (const ScoringError&) {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_.emplace(key, std::nullopt);
        throw;
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(key, result);
    return *result;
}

ScoreVector Objective::compute(const BooleanNetwork& network) const {
    for (int b : signatures_.biomarkers)
        if (b < 0 || static_cast<std::size_t>(b) >= network.size())
            throw ContractViolation("biomarker outside network");

    StableStateSet stable = stable_states(network, stable_cap_);
    if (stable.truncated)
        throw ScoringError("stable-state enumeration truncated at " +
                           std::to_string(stable_cap_));

    ScoreVector score;
    const std::size_t b = signatures_.biomarkers.size();
    for (const auto& sig : signatures_.signatures) {
        if (stable.states.empty()) {
            // No equilibrium at all: strictly worse than any reachable distance.
            score.signature_distances.push_back(static_cast<int>(b) + 1);
            continue;
        }
        int best = static_cast<int>(b) + 1;
        for (const State& s : stable.states) {
            int d = 0;
            for (std::size_t i = 0; i < b; ++i)
                if (s.get(signatures_.biomarkers[i]) != sig[i]) ++d;
            best = std::min(best, d);
        }
        score.signature_distances.push_back(best);
    }

    for (std::size_t i = 0; i < network.size(); ++i)
        if (!is_monotone(network.function(static_cast<int>(i)))) ++score.non_monotone;

    std::size_t count = stable.states.size();
    score.stable_gap = static_cast<int>(count > ref_stable_count_ ? count - ref_stable_count_
                                                                  : ref_stable_count_ - count);
    for (const auto& [name, fn] : extra_) score.extras.push_back(fn(network));
    return score;
}

} // namespace bnsynth
