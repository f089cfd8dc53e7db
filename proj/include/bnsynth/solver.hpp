#pragma once

#include <optional>
#include <vector>

#include "bnsynth/cnf.hpp"

namespace bnsynth {

struct EnumerationResult {
    std::vector<Model> models; // restricted to the projection, in solver order
    bool truncated = false;
};

// Complete DPLL solver with two watched literals per clause and
// chronological backtracking. Branching always picks the lowest-index
// unassigned variable and tries true first, so runs are reproducible.
class DpllSolver {
public:
    explicit DpllSolver(const CnfProblem& problem);

    // Fresh search; returns a total model or nullopt (never wrongly unsat).
    std::optional<Model> solve();

    // Enumerates all models distinct on `projection` (1-based variable
    // indices) via blocking clauses, stopping at `cap` with a flag.
    EnumerationResult enumerate(const std::vector<int>& projection, std::size_t cap);

    // Used by the enumeration loop; also handy for incremental blocking.
    void add_clause(std::vector<int> lits);

private:
    int lit_slot(int lit) const { return lit > 0 ? 2 * lit : -2 * lit + 1; }

    void reset();
    bool enqueue(int lit);
    bool propagate();
    bool backtrack();

    int num_vars_;
    bool has_empty_ = false;
    std::vector<std::vector<int>> clauses_;
    std::vector<int> units_;
    std::vector<std::vector<int>> watches_; // lit slot -> clause indices
    std::vector<std::int8_t> value_;        // 1..n: 0 unset, +1, -1
    std::vector<int> trail_;
    std::size_t qhead_ = 0;
    std::vector<std::size_t> decision_marks_;
    std::vector<std::uint8_t> decision_flipped_;
};

} // namespace bnsynth
