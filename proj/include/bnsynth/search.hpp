#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnsynth/centrality.hpp"
#include "bnsynth/inference.hpp"
#include "bnsynth/objective.hpp"

namespace bnsynth {

struct SearchConfig {
    int num_candidates = 4;            // variables examined per move
    int failure_bound = 100;           // consecutive non-improving iterations
    std::optional<int> tabu_tenure;    // default: ceil(n / 2)
    int diversification_period = 10;   // every D-th iteration targets rarely moved variables
    std::uint64_t rng_seed = 0;
    int workers = 1;                   // parallel scoring of substitutions
    bool random_initial = false;       // default: fewest-terms formula per variable
};

struct IterationRecord {
    int iteration = 0;
    bool moved = false;
    int variable = -1;       // moved variable, -1 when no move applied
    int formula_index = -1;  // index into the variable's pool
    ScoreVector score;       // score of the current network after the move
    ScoreVector best;        // best score so far
    int consecutive_failures = 0;
    bool improved = false;
    bool relaxed = false;     // tabu list ignored because all variables were tabu
    bool diversified = false; // candidates drawn from the low-frequency quartile
};

enum class HaltReason { Optimal, FailureBound };

struct SearchResult {
    BooleanNetwork best;
    ScoreVector best_score;
    std::vector<IterationRecord> trace;
    HaltReason halt = HaltReason::FailureBound;
    int iterations = 0;
};

struct Move {
    int variable = 0;
    int formula_index = 0;
    ScoreVector score;
};

// Scores every formula of every candidate substituted into `current` and
// elects a Pareto-minimal winner (lexicographic preference, then the less
// frequently moved variable, then the lower index). Returns nullopt when
// every substitution fails to score.
std::optional<Move> best_local_move(const BooleanNetwork& current,
                                    const std::vector<int>& candidates,
                                    const std::vector<FormulaPool>& pools,
                                    const Objective& objective,
                                    const std::vector<std::int64_t>& move_frequency,
                                    int workers = 1);

// Assembles the default initial network: per variable the pool formula with
// the fewest terms (or a uniform random pick).
BooleanNetwork initial_network(const std::vector<std::string>& names,
                               const std::vector<FormulaPool>& pools, bool random, Rng& rng);

// Tabu-search loop: roulette candidate selection biased by centrality,
// best-formula move, short-term tabu memory with expiry, long-term
// frequency memory with periodic diversification, Pareto best tracking.
SearchResult tabu_search(const BooleanNetwork& initial, const std::vector<FormulaPool>& pools,
                         const Objective& objective, const CentralityRanking& centrality,
                         const SearchConfig& config);

} // namespace bnsynth
