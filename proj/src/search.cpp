#include "bnsynth/search.hpp"

#include <algorithm>

#include "bnsynth/parallel.hpp"

namespace bnsynth {

namespace {

int tenure_for(const SearchConfig& config, std::size_t num_vars) {
    if (config.tabu_tenure) {
        if (*config.tabu_tenure < 0) throw ConfigError("tabu tenure must be >= 0");
        return *config.tabu_tenure;
    }
    return static_cast<int>((num_vars + 1) / 2);
}

} // namespace

std::optional<Move> best_local_move(const BooleanNetwork& current,
                                    const std::vector<int>& candidates,
                                    const std::vector<FormulaPool>& pools,
                                    const Objective& objective,
                                    const std::vector<std::int64_t>& move_frequency,
                                    int workers) {
    struct Attempt {
        int variable;
        int formula_index;
        std::optional<ScoreVector> score;
    };
    std::vector<Attempt> attempts;
    for (int var : candidates) {
        const FormulaPool& pool = pools[static_cast<std::size_t>(var)];
        if (pool.formulas.empty())
            throw ConfigError("empty formula pool for candidate " + current.name(var));
        for (std::size_t fi = 0; fi < pool.formulas.size(); ++fi)
            attempts.push_back(Attempt{var, static_cast<int>(fi), std::nullopt});
    }

    parallel_for(attempts.size(), workers, [&](std::size_t i) {
        Attempt& a = attempts[i];
        BooleanNetwork candidate = current;
        candidate.replace_function(a.variable,
                                   pools[static_cast<std::size_t>(a.variable)]
                                       .formulas[static_cast<std::size_t>(a.formula_index)]);
        try {
            a.score = objective.score(candidate);
        } catch (const ScoringError&) {
            a.score = std::nullopt; // cap exceeded: this substitution is rejected
        }
    });

    // Local winner per candidate: the lexicographically smallest vector is
    // always Pareto-minimal in its pool; ties keep the lowest pool index.
    std::map<int, Move> local_best;
    for (const Attempt& a : attempts) {
        if (!a.score) continue;
        auto it = local_best.find(a.variable);
        if (it == local_best.end() || lexicographic_less(*a.score, it->second.score))
            local_best[a.variable] = Move{a.variable, a.formula_index, *a.score};
    }
    if (local_best.empty()) return std::nullopt;

    // Election across candidates.
    std::optional<Move> winner;
    for (const auto& [var, move] : local_best) {
        if (!winner) {
            winner = move;
            continue;
        }
        if (lexicographic_less(move.score, winner->score)) {
            winner = move;
        } else if (move.score == winner->score &&
                   move_frequency[static_cast<std::size_t>(var)] <
                       move_frequency[static_cast<std::size_t>(winner->variable)]) {
            winner = move; // long-term diversification on exact ties
        }
    }
    return winner;
}

BooleanNetwork initial_network(const std::vector<std::string>& names,
                               const std::vector<FormulaPool>& pools, bool random, Rng& rng) {
    if (names.size() != pools.size())
        throw ConfigError("one formula pool per variable is required");
    std::vector<Formula> functions;
    functions.reserve(pools.size());
    for (std::size_t i = 0; i < pools.size(); ++i) {
        const FormulaPool& pool = pools[i];
        if (pool.formulas.empty())
            throw ConfigError("empty formula pool for variable " + names[i] +
                              (pool.diagnostic.empty() ? "" : ": " + pool.diagnostic));
        if (random) {
            functions.push_back(pool.formulas[rng.below(pool.formulas.size())]);
        } else {
            std::size_t best = 0;
            for (std::size_t fi = 1; fi < pool.formulas.size(); ++fi)
                if (pool.formulas[fi].terms().size() < pool.formulas[best].terms().size())
                    best = fi;
            functions.push_back(pool.formulas[best]);
        }
    }
    return BooleanNetwork(names, std::move(functions));
}

SearchResult tabu_search(const BooleanNetwork& initial, const std::vector<FormulaPool>& pools,
                         const Objective& objective, const CentralityRanking& centrality,
                         const SearchConfig& config) {
    const std::size_t n = initial.size();
    if (pools.size() != n) throw ConfigError("one formula pool per variable is required");
    for (std::size_t i = 0; i < n; ++i)
        if (pools[i].formulas.empty())
            throw ConfigError("empty formula pool for variable " + initial.name(static_cast<int>(i)) +
                              (pools[i].diagnostic.empty() ? "" : ": " + pools[i].diagnostic));
    if (config.num_candidates < 1) throw ConfigError("at least one candidate per move is required");
    if (config.failure_bound < 1) throw ConfigError("failure bound must be >= 1");

    const int tenure = tenure_for(config, n);
    Rng rng(config.rng_seed);

    SearchResult result;
    result.best = initial;
    BooleanNetwork current = initial;
    result.best_score = objective.score(current);

    if (is_optimal(result.best_score)) {
        result.halt = HaltReason::Optimal;
        return result;
    }

    std::vector<std::int64_t> tabu_until(n, 0); // tabu while iteration <= tabu_until[v]
    std::vector<std::int64_t> frequency(n, 0);
    int failures = 0;

    for (int iteration = 1;; ++iteration) {
        IterationRecord record;
        record.iteration = iteration;
        record.diversified = config.diversification_period > 0 &&
                             iteration % config.diversification_period == 0;

        std::vector<bool> excluded(n, false);
        std::size_t available = 0;
        for (std::size_t v = 0; v < n; ++v) {
            excluded[v] = tabu_until[v] >= iteration;
            if (!excluded[v]) ++available;
        }
        if (available == 0) {
            // Everything is tabu: ignore the list for this iteration.
            std::fill(excluded.begin(), excluded.end(), false);
            available = n;
            record.relaxed = true;
        }

        if (record.diversified) {
            // Restrict the wheel to the least frequently moved quartile.
            std::vector<int> free_vars;
            for (std::size_t v = 0; v < n; ++v)
                if (!excluded[v]) free_vars.push_back(static_cast<int>(v));
            std::sort(free_vars.begin(), free_vars.end(), [&](int a, int b) {
                if (frequency[static_cast<std::size_t>(a)] != frequency[static_cast<std::size_t>(b)])
                    return frequency[static_cast<std::size_t>(a)] <
                           frequency[static_cast<std::size_t>(b)];
                return a < b;
            });
            std::size_t quartile = (free_vars.size() + 3) / 4;
            for (std::size_t i = quartile; i < free_vars.size(); ++i)
                excluded[static_cast<std::size_t>(free_vars[i])] = true;
        }

        std::vector<int> candidates =
            roulette_select(centrality, excluded, config.num_candidates, rng);
        std::optional<Move> move =
            best_local_move(current, candidates, pools, objective, frequency, config.workers);

        if (move) {
            current.replace_function(move->variable,
                                     pools[static_cast<std::size_t>(move->variable)]
                                         .formulas[static_cast<std::size_t>(move->formula_index)]);
            tabu_until[static_cast<std::size_t>(move->variable)] = iteration + tenure;
            ++frequency[static_cast<std::size_t>(move->variable)];
            record.moved = true;
            record.variable = move->variable;
            record.formula_index = move->formula_index;
            record.score = move->score;
            if (compare_pareto(move->score, result.best_score) == ParetoOrder::Less) {
                result.best = current;
                result.best_score = move->score;
                record.improved = true;
            }
        }

        if (record.improved) {
            failures = 0;
        } else {
            ++failures;
        }
        record.consecutive_failures = failures;
        record.best = result.best_score;
        result.trace.push_back(std::move(record));
        result.iterations = iteration;

        if (is_optimal(result.best_score)) {
            result.halt = HaltReason::Optimal;
            return result;
        }
        if (failures >= config.failure_bound) {
            result.halt = HaltReason::FailureBound;
            return result;
        }
    }
}

} // namespace bnsynth
