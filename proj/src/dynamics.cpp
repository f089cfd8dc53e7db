#include "bnsynth/dynamics.hpp"

#include <algorithm>

#include "bnsynth/solver.hpp"

namespace bnsynth {

std::vector<std::pair<int, State>> async_successors(const BooleanNetwork& network, const State& s) {
    if (s.size() != network.size())
        throw ContractViolation("state arity does not match network");
    std::vector<std::pair<int, State>> successors;
    successors.reserve(network.size());
    for (std::size_t i = 0; i < network.size(); ++i) {
        State next = s;
        next.set(static_cast<int>(i), network.function(static_cast<int>(i)).evaluate(s));
        successors.emplace_back(static_cast<int>(i), std::move(next));
    }
    return successors;
}

Expr formula_to_expr(const Formula& f) {
    if (f.is_constant()) return Expr::constant(f.constant_value());
    std::vector<Expr> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        std::vector<Expr> lits;
        lits.reserve(t.size());
        for (const Literal& lit : t.literals()) {
            Expr v = Expr::var(lit.var);
            lits.push_back(lit.positive ? v : !v);
        }
        terms.push_back(Expr::conj(std::move(lits)));
    }
    return Expr::disj(std::move(terms));
}

StableStateSet stable_states(const BooleanNetwork& network, std::size_t cap) {
    const int n = static_cast<int>(network.size());
    std::vector<Expr> stability;
    stability.reserve(network.size());
    std::vector<int> universe;
    universe.reserve(network.size());
    for (int i = 0; i < n; ++i) {
        universe.push_back(i);
        Expr xi = Expr::var(i);
        Expr fi = formula_to_expr(network.function(i));
        stability.push_back(((!xi) | fi) & (xi | (!fi)));
    }
    TseitinResult enc = from_propositional(Expr::conj(std::move(stability)), universe);

    std::vector<int> projection;
    projection.reserve(network.size());
    for (int i = 0; i < n; ++i) projection.push_back(enc.var_of_id.at(i));

    DpllSolver solver(enc.problem);
    EnumerationResult models = solver.enumerate(projection, cap);

    StableStateSet result;
    result.truncated = models.truncated;
    result.states.reserve(models.models.size());
    for (const Model& m : models.models) {
        State s(network.size());
        for (int i = 0; i < n; ++i) s.set(i, m.value(enc.var_of_id.at(i)));
        result.states.push_back(std::move(s));
    }
    std::sort(result.states.begin(), result.states.end());
    return result;
}

} // namespace bnsynth
