#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bnsynth/minimize.hpp"
#include "oracles.hpp"

using namespace bnsynth;

namespace {

TruthTable table_of_bits(int arity, std::initializer_list<int> bits) {
    TruthTable t(arity);
    std::size_t k = 0;
    for (int b : bits) t.set(k++, b != 0);
    return t;
}

TruthTable random_table(int arity, Rng& rng) {
    TruthTable t(arity);
    for (std::size_t k = 0; k < t.size(); ++k) t.set(k, rng.coin());
    return t;
}

} // namespace

TEST_CASE("x | y minimizes to itself") {
    // Patterns over (x, y): 00 01 10 11.
    TruthTable t = table_of_bits(2, {0, 1, 1, 1});
    Formula f = minimize_dnf(t, {0, 1});
    CHECK(f.terms().size() == 2);
    CHECK(f.table() == t);
    Formula expected = Formula::dnf({0, 1}, {Term({{0, true}}), Term({{1, true}})});
    CHECK(f == expected);
}

TEST_CASE("constant tables collapse") {
    TruthTable ones(2);
    for (std::size_t k = 0; k < 4; ++k) ones.set(k, true);
    Formula top = minimize_dnf(ones, {0, 1});
    CHECK(top.is_constant());
    CHECK(top.constant_value());
    CHECK(top.support() == std::vector<int>{0, 1});

    TruthTable zeros(2);
    Formula bottom = minimize_dnf(zeros, {0, 1});
    CHECK(bottom.is_constant());
    CHECK_FALSE(bottom.constant_value());
}

TEST_CASE("the worked-example formulas are reproduced from their tables") {
    // (x2 & x4) | !x3 over positions (x2, x3, x4) at indices 1..3.
    TruthTable t = table_of_bits(3, {1, 1, 0, 0, 1, 1, 0, 1});
    Formula f = minimize_dnf(t, {1, 2, 3});
    Formula expected = Formula::dnf({1, 2, 3}, {Term({{1, true}, {3, true}}), Term({{2, false}})});
    CHECK(f == expected);
}

TEST_CASE("minimization is semantically exact and term-minimal on random tables") {
    Rng rng(42);
    for (int round = 0; round < 300; ++round) {
        TruthTable t = random_table(4, rng);
        Formula f = minimize_dnf(t, {0, 1, 2, 3});
        CHECK(f.table() == t);
        CHECK(f.terms().size() == oracles::min_cover_size(t));
    }
}

TEST_CASE("five-variable tables still minimize exactly") {
    Rng rng(43);
    for (int round = 0; round < 40; ++round) {
        TruthTable t = random_table(5, rng);
        Formula f = minimize_dnf(t, {0, 1, 2, 3, 4});
        CHECK(f.table() == t);
        CHECK(f.terms().size() == oracles::min_cover_size(t));
    }
}

TEST_CASE("prime implicants never subsume one another") {
    Rng rng(44);
    for (int round = 0; round < 100; ++round) {
        TruthTable t = random_table(4, rng);
        std::vector<Cube> primes = prime_implicants(t);
        for (const Cube& a : primes)
            for (const Cube& b : primes) {
                if (a == b) continue;
                bool a_inside_b = (b.dash & a.dash) == a.dash &&
                                  (a.value & ~b.dash) == b.value;
                CHECK_FALSE(a_inside_b);
            }
    }
}

TEST_CASE("minimized output has no subsumed term") {
    Rng rng(45);
    for (int round = 0; round < 100; ++round) {
        TruthTable t = random_table(4, rng);
        Formula f = minimize_dnf(t, {0, 1, 2, 3});
        for (const Term& a : f.terms())
            for (const Term& b : f.terms()) {
                if (a == b) continue;
                bool subset = std::includes(b.literals().begin(), b.literals().end(),
                                            a.literals().begin(), a.literals().end());
                CHECK_FALSE(subset);
            }
    }
}

TEST_CASE("label order maps the first regulator to the most significant bit") {
    // Table over positions (a=5, b=2): on exactly when a=1 (patterns 10, 11).
    TruthTable t = table_of_bits(2, {0, 0, 1, 1});
    Formula f = minimize_dnf(t, {5, 2});
    Formula expected = Formula::dnf({2, 5}, {Term({{5, true}})});
    CHECK(f == expected);
}
