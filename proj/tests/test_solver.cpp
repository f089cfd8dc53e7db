#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "bnsynth/solver.hpp"
#include "oracles.hpp"

using namespace bnsynth;

namespace {

// Models of an expression over a fixed universe by direct evaluation.
std::set<std::vector<bool>> expr_models(const Expr& e, const std::vector<int>& universe) {
    std::set<std::vector<bool>> out;
    const std::size_t n = universe.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        auto value = [&](int id) {
            auto it = std::find(universe.begin(), universe.end(), id);
            return ((mask >> (it - universe.begin())) & 1) != 0;
        };
        if (e.evaluate(value)) {
            std::vector<bool> m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = (mask >> i) & 1;
            out.insert(std::move(m));
        }
    }
    return out;
}

std::set<std::vector<bool>> solver_models(const Expr& e, const std::vector<int>& universe,
                                          std::size_t cap = 100000) {
    TseitinResult enc = from_propositional(e, universe);
    std::vector<int> projection;
    for (int id : universe) projection.push_back(enc.var_of_id.at(id));
    DpllSolver solver(enc.problem);
    EnumerationResult res = solver.enumerate(projection, cap);
    std::set<std::vector<bool>> out;
    for (const Model& m : res.models) {
        std::vector<bool> bits(universe.size());
        for (std::size_t i = 0; i < universe.size(); ++i)
            bits[i] = m.value(enc.var_of_id.at(universe[i]));
        out.insert(std::move(bits));
    }
    return out;
}

Expr random_expr(Rng& rng, const std::vector<int>& ids, int depth) {
    if (depth == 0 || rng.below(4) == 0) {
        Expr v = Expr::var(ids[rng.below(ids.size())]);
        return rng.coin() ? v : !v;
    }
    std::size_t width = 2 + rng.below(2);
    std::vector<Expr> kids;
    for (std::size_t i = 0; i < width; ++i) kids.push_back(random_expr(rng, ids, depth - 1));
    return rng.coin() ? Expr::conj(std::move(kids)) : Expr::disj(std::move(kids));
}

} // namespace

TEST_CASE("conjunction of literals becomes unit clauses") {
    Expr e = Expr::var(1) & !Expr::var(2);
    TseitinResult enc = from_propositional(e);
    CHECK(enc.problem.num_vars() == 2); // no auxiliaries needed
    REQUIRE(enc.problem.clauses().size() == 2);
    CHECK(enc.problem.clauses()[0] == std::vector<int>{enc.var_of_id.at(1)});
    CHECK(enc.problem.clauses()[1] == std::vector<int>{-enc.var_of_id.at(2)});
}

TEST_CASE("models of b1 | (b2 & b3) match the truth table") {
    Expr e = Expr::var(1) | (Expr::var(2) & Expr::var(3));
    CHECK(solver_models(e, {1, 2, 3}) == expr_models(e, {1, 2, 3}));
}

TEST_CASE("contradiction is unsatisfiable") {
    Expr e = Expr::var(1) & !Expr::var(1);
    TseitinResult enc = from_propositional(e);
    DpllSolver solver(enc.problem);
    CHECK_FALSE(solver.solve().has_value());
}

TEST_CASE("single unit clause solves to true") {
    CnfProblem p(1);
    p.add_clause({1});
    DpllSolver solver(p);
    auto m = solver.solve();
    REQUIRE(m.has_value());
    CHECK(m->value(1));
}

TEST_CASE("unit conflict is unsatisfiable") {
    CnfProblem p(1);
    p.add_clause({1});
    p.add_clause({-1});
    DpllSolver solver(p);
    CHECK_FALSE(solver.solve().has_value());
}

TEST_CASE("random 3-CNF verdicts agree with exhaustive checking") {
    Rng rng(101);
    for (int round = 0; round < 200; ++round) {
        CnfProblem p = oracles::random_cnf(12, 40, 3, rng);
        auto expected = oracles::brute_force_models(p);
        DpllSolver solver(p);
        auto m = solver.solve();
        CHECK(m.has_value() == !expected.empty());
        if (m) CHECK(p.satisfied_by(*m));
    }
}

TEST_CASE("enumeration of an unconstrained problem lists every assignment") {
    CnfProblem p(2);
    DpllSolver solver(p);
    EnumerationResult res = solver.enumerate({1, 2}, 100);
    CHECK(res.models.size() == 4);
    CHECK_FALSE(res.truncated);
}

TEST_CASE("a single-model problem is not flagged as truncated at cap 1") {
    CnfProblem p(2);
    p.add_clause({1});
    p.add_clause({2});
    DpllSolver solver(p);
    EnumerationResult res = solver.enumerate({1, 2}, 1);
    CHECK(res.models.size() == 1);
    CHECK_FALSE(res.truncated);
}

TEST_CASE("the cap truncates and is flagged") {
    CnfProblem p(3);
    DpllSolver solver(p);
    EnumerationResult res = solver.enumerate({1, 2, 3}, 5);
    CHECK(res.models.size() == 5);
    CHECK(res.truncated);
}

TEST_CASE("random CNF model sets equal exhaustive enumeration") {
    Rng rng(202);
    for (int round = 0; round < 60; ++round) {
        CnfProblem p = oracles::random_cnf(10, 18, 3, rng);
        auto expected = oracles::brute_force_models(p);
        DpllSolver solver(p);
        std::vector<int> projection;
        for (int v = 1; v <= 10; ++v) projection.push_back(v);
        EnumerationResult res = solver.enumerate(projection, 1 << 12);
        CHECK_FALSE(res.truncated);
        std::set<std::vector<bool>> actual, wanted;
        for (const Model& m : res.models) actual.insert(m.values);
        for (const auto& m : expected) wanted.insert(m);
        CHECK(actual == wanted);
        // Every reported model satisfies every clause.
        for (const Model& m : res.models) CHECK(p.satisfied_by(m));
    }
}

TEST_CASE("Tseitin models projected on the original variables are exact") {
    Rng rng(303);
    std::vector<int> ids{0, 1, 2, 3, 4, 5};
    for (int round = 0; round < 40; ++round) {
        Expr e = random_expr(rng, ids, 3);
        CHECK(solver_models(e, ids) == expr_models(e, ids));
    }
}

TEST_CASE("DIMACS round trip") {
    CnfProblem p(3);
    p.add_clause({1, -2});
    p.add_clause({2, 3});
    p.var_names()[1] = "b_00";
    std::ostringstream out;
    p.write_dimacs(out);
    std::istringstream in(out.str());
    CnfProblem q = CnfProblem::read_dimacs(in);
    CHECK(q.num_vars() == 3);
    CHECK(q.clauses() == p.clauses());
    CHECK(q.var_names().at(1) == "b_00");
}
