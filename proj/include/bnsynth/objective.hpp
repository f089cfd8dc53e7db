#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "bnsynth/dynamics.hpp"
#include "bnsynth/network.hpp"

namespace bnsynth {

// Expected values of the biomarker variables at the reference equilibria.
struct SignatureSet {
    std::vector<int> biomarkers;             // variable indices, ascending
    std::vector<std::vector<bool>> signatures; // distinct rows over the biomarkers

    static SignatureSet build(std::vector<int> biomarkers,
                              std::vector<std::vector<bool>> signatures);
};

// One Hamming-distance entry per signature, then the count of non-monotone
// functions, then the gap between the stable-state counts, then any
// registered extra criteria.
struct ScoreVector {
    std::vector<int> signature_distances;
    int non_monotone = 0;
    int stable_gap = 0;
    std::vector<int> extras;

    std::size_t size() const { return signature_distances.size() + 2 + extras.size(); }
    std::vector<int> flatten() const;
    std::string to_string(char sep = ';') const;

    bool operator==(const ScoreVector& o) const { return flatten() == o.flatten(); }
};

enum class ParetoOrder { Less, Equal, Greater, Incomparable };

// Component-wise comparison of equally long vectors.
ParetoOrder compare_pareto(const ScoreVector& a, const ScoreVector& b);
bool lexicographic_less(const ScoreVector& a, const ScoreVector& b);
bool is_optimal(const ScoreVector& v);

// Multi-criteria objective. Scores are memoized by the network's semantic
// fingerprint; the memo is safe to use from concurrent scoring workers.
class Objective {
public:
    Objective(SignatureSet signatures, std::size_t ref_stable_count,
              std::size_t stable_cap = kDefaultStableCap);

    // Appends a criterion to the score vector.
    void register_criterion(std::string name, std::function<int(const BooleanNetwork&)> fn);

    // Throws ScoringError when the stable-state cap is exceeded.
    ScoreVector score(const BooleanNetwork& network) const;

    const SignatureSet& signatures() const { return signatures_; }
    std::size_t ref_stable_count() const { return ref_stable_count_; }

private:
    ScoreVector compute(const BooleanNetwork& network) const;

    SignatureSet signatures_;
    std::size_t ref_stable_count_;
    std::size_t stable_cap_;
    std::vector<std::pair<std::string, std::function<int(const BooleanNetwork&)>>> extra_;

    mutable std::mutex memo_mutex_;
    // nullopt marks a network whose scoring failed (cap exceeded).
    mutable std::map<std::pair<std::uint64_t, std::uint64_t>, std::optional<ScoreVector>> memo_;
};

} // namespace bnsynth
