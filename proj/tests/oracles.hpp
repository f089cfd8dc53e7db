#pragma once

// Brute-force reference implementations used as independent oracles by the
// unit and acceptance suites. Everything here recomputes results from
// definitions (exhaustive scans), never through the library's own
// SAT/QM/enumeration paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bnsynth/cnf.hpp"
#include "bnsynth/formula.hpp"
#include "bnsynth/network.hpp"
#include "bnsynth/rng.hpp"

namespace oracles {

using namespace bnsynth;

inline State state_from_mask(std::size_t mask, std::size_t n) {
    State s(n);
    // Bit 0 of the mask is variable 0, so masks enumerate states in
    // lexicographic order of the reversed bit string; order is irrelevant
    // for exhaustive scans.
    for (std::size_t i = 0; i < n; ++i) s.set(static_cast<int>(i), (mask >> i) & 1);
    return s;
}

// All satisfying assignments of a CNF by direct evaluation.
inline std::vector<std::vector<bool>> brute_force_models(const CnfProblem& cnf) {
    const int n = cnf.num_vars();
    std::vector<std::vector<bool>> models;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Model m;
        m.values.resize(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) m.values[static_cast<std::size_t>(v - 1)] = (mask >> (v - 1)) & 1;
        if (cnf.satisfied_by(m)) models.push_back(m.values);
    }
    return models;
}

// Fixed points by scanning every state.
inline std::vector<State> brute_force_stable(const BooleanNetwork& network) {
    std::vector<State> stable;
    const std::size_t n = network.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        State s = state_from_mask(mask, n);
        if (network.apply(s) == s) stable.push_back(s);
    }
    std::sort(stable.begin(), stable.end());
    return stable;
}

// Interaction and sign of x_i on f_j by scanning every sibling state pair
// of the full network state space (the definitional route, not the
// support-restricted one the library uses).
inline std::optional<InteractionSign> brute_force_sign(const BooleanNetwork& network, int i,
                                                       int j) {
    const std::size_t n = network.size();
    const Formula& fj = network.function(j);
    bool increasing = false, decreasing = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if ((mask >> i) & 1) continue;
        State lo = state_from_mask(mask, n);
        State hi = state_from_mask(mask | (std::size_t{1} << i), n);
        bool flo = fj.evaluate(lo), fhi = fj.evaluate(hi);
        if (flo < fhi) increasing = true;
        if (flo > fhi) decreasing = true;
    }
    if (!increasing && !decreasing) return std::nullopt;
    if (increasing && decreasing) return InteractionSign::Dual;
    return increasing ? InteractionSign::Positive : InteractionSign::Negative;
}

// Minimum number of product terms covering exactly the on-set of a table,
// found from the cube lattice: implicants are cubes inside the on-set,
// primes are the maximal ones, and the minimum cover is searched
// exhaustively with a depth bound. Constants need no product term, matching
// the Formula representation of true/false.
inline std::size_t min_cover_size(const TruthTable& table) {
    const int r = table.arity();
    std::vector<std::uint32_t> ones;
    for (std::size_t k = 0; k < table.size(); ++k)
        if (table.get(k)) ones.push_back(static_cast<std::uint32_t>(k));
    if (ones.empty() || ones.size() == table.size()) return 0;

    struct LatticeCube {
        std::uint32_t value, dash;
    };
    // Every cube over r bits, kept when it lies inside the on-set.
    std::vector<LatticeCube> implicants;
    std::vector<std::uint32_t> dashes;
    for (std::uint32_t dash = 0; dash < (1u << r); ++dash) dashes.push_back(dash);
    for (std::uint32_t dash : dashes) {
        std::uint32_t fixed = ~dash & ((1u << r) - 1);
        // Enumerate values over the fixed bits.
        std::uint32_t v = 0;
        while (true) {
            bool inside = true;
            std::uint32_t free_bits = 0;
            // Walk the cube's minterms.
            std::uint32_t sub = 0;
            while (true) {
                std::uint32_t minterm = v | sub;
                if (!table.get(minterm)) {
                    inside = false;
                    break;
                }
                if (sub == dash) break;
                sub = (sub - dash) & dash; // next subset of dash
            }
            (void)free_bits;
            if (inside) implicants.push_back(LatticeCube{v, dash});
            if (v == fixed) break;
            v = (v - fixed) & fixed; // next subset of the fixed mask
        }
    }
    // Prime = no strictly larger implicant contains it.
    auto contains = [](const LatticeCube& big, const LatticeCube& small) {
        if ((big.dash & small.dash) != small.dash) return false;
        return (big.value & ~big.dash) == (small.value & ~big.dash & ~small.dash);
    };
    std::vector<LatticeCube> primes;
    for (const LatticeCube& c : implicants) {
        bool maximal = true;
        for (const LatticeCube& d : implicants) {
            if (d.dash == c.dash && d.value == c.value) continue;
            if (contains(d, c)) {
                maximal = false;
                break;
            }
        }
        if (maximal) primes.push_back(c);
    }
    // Cover masks over the on-set.
    std::vector<std::uint64_t> masks(primes.size(), 0);
    for (std::size_t p = 0; p < primes.size(); ++p)
        for (std::size_t m = 0; m < ones.size(); ++m)
            if ((ones[m] & ~primes[p].dash) == primes[p].value) masks[p] |= std::uint64_t{1} << m;
    const std::uint64_t all = ones.size() == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << ones.size()) - 1;

    // Iterative deepening: the first depth with a full cover is minimal.
    for (std::size_t depth = 1; depth <= primes.size(); ++depth) {
        std::vector<std::size_t> stack;
        std::function<bool(std::uint64_t, std::size_t, std::size_t)> dfs =
            [&](std::uint64_t covered, std::size_t start, std::size_t left) -> bool {
            if (covered == all) return true;
            if (left == 0) return false;
            for (std::size_t p = start; p < primes.size(); ++p) {
                if ((masks[p] | covered) == covered) continue;
                if (dfs(covered | masks[p], p + 1, left - 1)) return true;
            }
            return false;
        };
        if (dfs(0, 0, depth)) return depth;
    }
    return primes.size();
}

// --- random instance generators -------------------------------------------

inline Formula random_formula(const std::vector<int>& support, Rng& rng, int max_terms = 4) {
    int num_terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    std::vector<Term> terms;
    for (int t = 0; t < num_terms; ++t) {
        std::vector<Literal> lits;
        for (int v : support)
            switch (rng.below(3)) {
            case 0: lits.push_back(Literal{v, true}); break;
            case 1: lits.push_back(Literal{v, false}); break;
            default: break;
            }
        if (lits.empty()) lits.push_back(Literal{support[rng.below(support.size())], rng.coin()});
        terms.emplace_back(std::move(lits));
    }
    return Formula::dnf(support, std::move(terms));
}

inline BooleanNetwork random_network(std::size_t n, int max_arity, Rng& rng) {
    std::vector<std::string> names;
    std::vector<Formula> functions;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
        int arity = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_arity)));
        std::set<int> support;
        while (static_cast<int>(support.size()) < arity)
            support.insert(static_cast<int>(rng.below(n)));
        functions.push_back(
            random_formula(std::vector<int>(support.begin(), support.end()), rng));
    }
    return BooleanNetwork(std::move(names), std::move(functions));
}

inline CnfProblem random_cnf(int num_vars, int num_clauses, int clause_size, Rng& rng) {
    CnfProblem p(num_vars);
    for (int c = 0; c < num_clauses; ++c) {
        std::vector<int> clause;
        for (int k = 0; k < clause_size; ++k) {
            int var = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars)));
            clause.push_back(rng.coin() ? var : -var);
        }
        p.add_clause(std::move(clause));
    }
    return p;
}

inline bool semantically_equal(const Formula& a, const Formula& b) {
    if (a.support() != b.support()) return false;
    return a.table() == b.table();
}

} // namespace oracles
