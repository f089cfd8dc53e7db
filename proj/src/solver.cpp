#include "bnsynth/solver.hpp"

#include <algorithm>

namespace bnsynth {

DpllSolver::DpllSolver(const CnfProblem& problem) : num_vars_(problem.num_vars()) {
    watches_.resize(2 * static_cast<std::size_t>(num_vars_) + 2);
    value_.assign(static_cast<std::size_t>(num_vars_) + 1, 0);
    for (const auto& clause : problem.clauses()) add_clause(clause);
}

void DpllSolver::add_clause(std::vector<int> lits) {
    std::sort(lits.begin(), lits.end(), [](int a, int b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return a > b;
    });
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i)
        if (lits[i] == -lits[i - 1]) return; // tautology
    if (lits.empty()) {
        has_empty_ = true;
        return;
    }
    if (lits.size() == 1) {
        units_.push_back(lits[0]);
        return;
    }
    int idx = static_cast<int>(clauses_.size());
    watches_[static_cast<std::size_t>(lit_slot(lits[0]))].push_back(idx);
    watches_[static_cast<std::size_t>(lit_slot(lits[1]))].push_back(idx);
    clauses_.push_back(std::move(lits));
}

void DpllSolver::reset() {
    std::fill(value_.begin(), value_.end(), 0);
    trail_.clear();
    qhead_ = 0;
    decision_marks_.clear();
    decision_flipped_.clear();
}

bool DpllSolver::enqueue(int lit) {
    int var = std::abs(lit);
    std::int8_t want = lit > 0 ? 1 : -1;
    std::int8_t cur = value_[static_cast<std::size_t>(var)];
    if (cur != 0) return cur == want;
    value_[static_cast<std::size_t>(var)] = want;
    trail_.push_back(lit);
    return true;
}

bool DpllSolver::propagate() {
    while (qhead_ < trail_.size()) {
        int lit = trail_[qhead_++];
        // Clauses watching the literal that just became false.
        std::vector<int>& watch_list = watches_[static_cast<std::size_t>(lit_slot(-lit))];
        std::size_t keep = 0;
        for (std::size_t wi = 0; wi < watch_list.size(); ++wi) {
            int ci = watch_list[wi];
            std::vector<int>& clause = clauses_[static_cast<std::size_t>(ci)];
            if (clause[0] == -lit) std::swap(clause[0], clause[1]);
            // clause[1] == -lit is now false; clause[0] is the other watch.
            int first = clause[0];
            std::int8_t v0 = value_[static_cast<std::size_t>(std::abs(first))];
            if (v0 != 0 && (v0 > 0) == (first > 0)) {
                watch_list[keep++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < clause.size(); ++k) {
                int cand = clause[k];
                std::int8_t vc = value_[static_cast<std::size_t>(std::abs(cand))];
                if (vc == 0 || (vc > 0) == (cand > 0)) {
                    std::swap(clause[1], clause[k]);
                    watches_[static_cast<std::size_t>(lit_slot(cand))].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            watch_list[keep++] = ci;
            if (v0 != 0) { // first is false too: conflict
                for (std::size_t rest = wi + 1; rest < watch_list.size(); ++rest)
                    watch_list[keep++] = watch_list[rest];
                watch_list.resize(keep);
                return false;
            }
            if (!enqueue(first)) {
                for (std::size_t rest = wi + 1; rest < watch_list.size(); ++rest)
                    watch_list[keep++] = watch_list[rest];
                watch_list.resize(keep);
                return false;
            }
        }
        watch_list.resize(keep);
    }
    return true;
}

bool DpllSolver::backtrack() {
    while (!decision_marks_.empty()) {
        std::size_t mark = decision_marks_.back();
        int decision_lit = trail_[mark];
        bool flipped = decision_flipped_.back() != 0;
        while (trail_.size() > mark) {
            value_[static_cast<std::size_t>(std::abs(trail_.back()))] = 0;
            trail_.pop_back();
        }
        qhead_ = trail_.size();
        decision_marks_.pop_back();
        decision_flipped_.pop_back();
        if (!flipped) {
            decision_marks_.push_back(trail_.size());
            decision_flipped_.push_back(1);
            enqueue(-decision_lit);
            return true;
        }
    }
    return false;
}

std::optional<Model> DpllSolver::solve() {
    if (has_empty_) return std::nullopt;
    reset();
    for (int unit : units_)
        if (!enqueue(unit)) return std::nullopt;
    while (true) {
        if (!propagate()) {
            if (!backtrack()) return std::nullopt;
            continue;
        }
        int branch = 0;
        for (int v = 1; v <= num_vars_; ++v)
            if (value_[static_cast<std::size_t>(v)] == 0) {
                branch = v;
                break;
            }
        if (branch == 0) {
            Model m;
            m.values.resize(static_cast<std::size_t>(num_vars_));
            for (int v = 1; v <= num_vars_; ++v)
                m.values[static_cast<std::size_t>(v - 1)] = value_[static_cast<std::size_t>(v)] > 0;
            return m;
        }
        decision_marks_.push_back(trail_.size());
        decision_flipped_.push_back(0);
        enqueue(branch);
    }
}

EnumerationResult DpllSolver::enumerate(const std::vector<int>& projection, std::size_t cap) {
    for (int v : projection)
        if (v < 1 || v > num_vars_)
            throw ContractViolation("projection variable outside problem");
    if (cap < 1) throw ContractViolation("enumeration cap must be at least 1");

    EnumerationResult result;
    while (result.models.size() < cap) {
        std::optional<Model> m = solve();
        if (!m) return result;
        Model projected;
        projected.values.resize(static_cast<std::size_t>(num_vars_));
        std::vector<int> blocking;
        blocking.reserve(projection.size());
        for (int v : projection) {
            bool val = m->value(v);
            projected.values[static_cast<std::size_t>(v - 1)] = val;
            blocking.push_back(val ? -v : v);
        }
        result.models.push_back(std::move(projected));
        if (blocking.empty()) return result; // empty projection: one class
        add_clause(std::move(blocking));
    }
    result.truncated = solve().has_value();
    return result;
}

} // namespace bnsynth
