#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bnsynth/distance.hpp"
#include "bnsynth/minimize.hpp"
#include "oracles.hpp"

using namespace bnsynth;

namespace {

Formula negation_of(const Formula& f) {
    TruthTable t = f.table();
    TruthTable flipped(t.arity());
    for (std::size_t k = 0; k < t.size(); ++k) flipped.set(k, !t.get(k));
    return minimize_dnf(flipped, f.support());
}

} // namespace

TEST_CASE("or versus and differ on half the inputs") {
    Formula f_or = Formula::dnf({0, 1}, {Term({{0, true}}), Term({{1, true}})});
    Formula f_and = Formula::dnf({0, 1}, {Term({{0, true}, {1, true}})});
    CHECK(truth_distance(f_or, f_and) == doctest::Approx(0.5));
}

TEST_CASE("distance to itself is zero") {
    Rng rng(21);
    for (int round = 0; round < 20; ++round) {
        Formula f = oracles::random_formula({0, 1, 2}, rng);
        CHECK(truth_distance(f, f) == doctest::Approx(0.0));
    }
}

TEST_CASE("distance to the negation is one") {
    Rng rng(22);
    for (int round = 0; round < 20; ++round) {
        Formula f = oracles::random_formula({0, 1, 2}, rng);
        CHECK(truth_distance(f, negation_of(f)) == doctest::Approx(1.0));
    }
}

TEST_CASE("support mismatch is a contract violation") {
    Formula a = Formula::dnf({0, 1}, {Term({{0, true}})});
    Formula b = Formula::dnf({0, 2}, {Term({{0, true}})});
    CHECK_THROWS_AS(truth_distance(a, b), ContractViolation);
}

TEST_CASE("distance equals the state-by-state disagreement count") {
    Rng rng(23);
    for (int round = 0; round < 50; ++round) {
        Formula f = oracles::random_formula({0, 1, 2, 3}, rng);
        Formula g = oracles::random_formula({0, 1, 2, 3}, rng);
        int disagreements = 0;
        for (std::size_t mask = 0; mask < 16; ++mask) {
            State s = oracles::state_from_mask(mask, 4);
            if (f.evaluate(s) != g.evaluate(s)) ++disagreements;
        }
        CHECK(truth_distance(f, g) == doctest::Approx(disagreements / 16.0));
    }
}

TEST_CASE("metric axioms hold on random formulas") {
    Rng rng(24);
    for (int round = 0; round < 200; ++round) {
        Formula f = oracles::random_formula({0, 1, 2}, rng);
        Formula g = oracles::random_formula({0, 1, 2}, rng);
        Formula h = oracles::random_formula({0, 1, 2}, rng);
        double fg = truth_distance(f, g);
        double gf = truth_distance(g, f);
        CHECK(fg == doctest::Approx(gf));
        CHECK((fg == 0.0) == oracles::semantically_equal(f, g));
        CHECK(truth_distance(f, h) <= fg + truth_distance(g, h) + 1e-12);
    }
}

TEST_CASE("network distance is the per-variable mean") {
    // Two 2-variable networks with distances (0.5, 0).
    BooleanNetwork a({"x", "y"},
                     {Formula::dnf({0, 1}, {Term({{0, true}}), Term({{1, true}})}),
                      Formula::dnf({0}, {Term({{0, true}})})});
    BooleanNetwork b({"x", "y"},
                     {Formula::dnf({0, 1}, {Term({{0, true}, {1, true}})}),
                      Formula::dnf({0}, {Term({{0, true}})})});
    CHECK(network_distance(a, b) == doctest::Approx(0.25));
    CHECK(network_distance(a, a) == doctest::Approx(0.0));
}

TEST_CASE("structural mismatch is a contract violation") {
    BooleanNetwork a({"x", "y"},
                     {Formula::dnf({1}, {Term({{1, true}})}),
                      Formula::dnf({0}, {Term({{0, true}})})});
    BooleanNetwork b({"x", "z"},
                     {Formula::dnf({1}, {Term({{1, true}})}),
                      Formula::dnf({0}, {Term({{0, true}})})});
    CHECK_THROWS_AS(network_distance(a, b), ContractViolation);

    BooleanNetwork c({"x", "y"},
                     {Formula::dnf({0}, {Term({{0, true}})}),
                      Formula::dnf({0}, {Term({{0, true}})})});
    CHECK_THROWS_AS(network_distance(a, c), ContractViolation);
}

TEST_CASE("random network pairs match exhaustive recomputation") {
    Rng rng(25);
    for (int round = 0; round < 20; ++round) {
        BooleanNetwork a = oracles::random_network(4, 3, rng);
        // Same structure, possibly different terms.
        std::vector<std::string> names;
        std::vector<Formula> fns;
        for (const Variable& v : a.variables()) names.push_back(v.name);
        for (std::size_t i = 0; i < a.size(); ++i)
            fns.push_back(oracles::random_formula(a.function(static_cast<int>(i)).support(), rng));
        BooleanNetwork b(names, std::move(fns));
        double expected = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Formula& fa = a.function(static_cast<int>(i));
            const Formula& fb = b.function(static_cast<int>(i));
            int diff = 0;
            std::size_t total = std::size_t{1} << fa.support().size();
            for (std::size_t k = 0; k < total; ++k)
                if (fa.evaluate_pattern(k) != fb.evaluate_pattern(k)) ++diff;
            expected += static_cast<double>(diff) / static_cast<double>(total);
        }
        expected /= static_cast<double>(a.size());
        CHECK(network_distance(a, b) == doctest::Approx(expected));
    }
}
