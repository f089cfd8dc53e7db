#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bnsynth/io.hpp"
#include "oracles.hpp"

using namespace bnsynth;

TEST_CASE("the example formula parses") {
    BooleanNetwork net = parse_network("x1 = (x2 & x4) | !x3\n"
                                       "x2 = x2\n"
                                       "x3 = x3\n"
                                       "x4 = x4\n");
    REQUIRE(net.size() == 4);
    Formula expected =
        Formula::dnf({1, 2, 3}, {Term({{1, true}, {3, true}}), Term({{2, false}})});
    CHECK(net.function(0) == expected);
}

TEST_CASE("constants parse") {
    BooleanNetwork net = parse_network("x1 = 1\nx2 = 0\n");
    CHECK(net.function(0).is_constant());
    CHECK(net.function(0).constant_value());
    CHECK_FALSE(net.function(1).constant_value());
}

TEST_CASE("a malformed expression reports line and column") {
    try {
        parse_network("x1 = &x2\nx2 = x1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 6);
    }
}

TEST_CASE("undeclared variables are rejected") {
    CHECK_THROWS_AS(parse_network("x1 = x2 & y\nx2 = x1\n"), ParseError);
}

TEST_CASE("duplicate definitions are rejected") {
    CHECK_THROWS_AS(parse_network("x1 = 1\nx1 = 0\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    BooleanNetwork net = parse_network("# header\n\nx1 = x2 # trailing\nx2 = !x1\n");
    CHECK(net.size() == 2);
}

TEST_CASE("fictitious variables stay in the support after normalization") {
    BooleanNetwork net = parse_network("x1 = x2 | (x3 & !x3)\nx2 = x2\nx3 = x3\n");
    CHECK(net.function(0).support() == std::vector<int>{1, 2});
    CHECK(net.function(0).terms().size() == 1);
}

TEST_CASE("network serialization round-trips semantically") {
    Rng rng(31);
    for (int round = 0; round < 20; ++round) {
        BooleanNetwork net = oracles::random_network(5, 3, rng);
        BooleanNetwork back = parse_network(serialize_network(net));
        REQUIRE(back.size() == net.size());
        for (std::size_t i = 0; i < net.size(); ++i) {
            const Formula& f = net.function(static_cast<int>(i));
            const Formula& g = back.function(static_cast<int>(i));
            // Supports may shrink when a variable has no influence; compare
            // semantics on the full state space.
            for (std::size_t mask = 0; mask < 32; ++mask) {
                State s = oracles::state_from_mask(mask, 5);
                CHECK(f.evaluate(s) == g.evaluate(s));
            }
        }
    }
}

TEST_CASE("profile CSV parses cells and unknowns") {
    BooleanProfileSet p = parse_profiles("x1,x2\n1,0\n");
    REQUIRE(p.variables == std::vector<std::string>{"x1", "x2"});
    REQUIRE(p.rows.size() == 1);
    CHECK(p.rows[0][0] == Trit::True);
    CHECK(p.rows[0][1] == Trit::False);

    BooleanProfileSet q = parse_profiles("x1,x2\n1,-\n");
    CHECK(q.rows[0][1] == Trit::Unknown);
}

TEST_CASE("ragged profile rows are rejected") {
    CHECK_THROWS_AS(parse_profiles("x1,x2\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_profiles("x1,x2\n1,0,1\n"), ParseError);
}

TEST_CASE("bad profile cells name row and column") {
    try {
        parse_profiles("x1,x2\n1,2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
}

TEST_CASE("profiles round-trip") {
    BooleanProfileSet p;
    p.variables = {"a", "b", "c"};
    p.rows = {{Trit::True, Trit::Unknown, Trit::False},
              {Trit::False, Trit::False, Trit::True}};
    BooleanProfileSet q = parse_profiles(serialize_profiles(p));
    CHECK(q.variables == p.variables);
    CHECK(q.rows == p.rows);
}

TEST_CASE("graph lines parse all three signs") {
    auto specs = parse_graph("x2 -> x1 +\nx3 -> x1 -\nx4 -> x1 ?\n");
    REQUIRE(specs.size() == 1);
    CHECK(specs[0].target == "x1");
    REQUIRE(specs[0].regulators.size() == 3);
    CHECK(specs[0].regulators[0].source == "x2");
    CHECK(specs[0].regulators[0].sign == RegulationSign::Activator);
    CHECK(specs[0].regulators[1].sign == RegulationSign::Inhibitor);
    CHECK(specs[0].regulators[2].sign == RegulationSign::Unknown);
}

TEST_CASE("unknown sign tokens are rejected") {
    CHECK_THROWS_AS(parse_graph("x2 -> x1 *\n"), ParseError);
}

TEST_CASE("duplicate regulations are rejected") {
    CHECK_THROWS_AS(parse_graph("x2 -> x1 +\nx2 -> x1 -\n"), ParseError);
}

TEST_CASE("targets group in order of first appearance") {
    auto specs = parse_graph("a -> t2 +\nb -> t1 -\nc -> t2 ?\nd -> t1 +\n");
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].target == "t2");
    CHECK(specs[1].target == "t1");
    CHECK(specs[0].regulators[0].source == "a");
    CHECK(specs[0].regulators[1].source == "c");
}

TEST_CASE("graphs round-trip") {
    auto specs = parse_graph("x2 -> x1 +\nx3 -> x1 -\nx1 -> x2 ?\n");
    auto back = parse_graph(serialize_graph(specs));
    REQUIRE(back.size() == specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CHECK(back[i].target == specs[i].target);
        REQUIRE(back[i].regulators.size() == specs[i].regulators.size());
        for (std::size_t j = 0; j < specs[i].regulators.size(); ++j) {
            CHECK(back[i].regulators[j].source == specs[i].regulators[j].source);
            CHECK(back[i].regulators[j].sign == specs[i].regulators[j].sign);
        }
    }
}

TEST_CASE("signatures parse against a network") {
    BooleanNetwork net = parse_network("a = b\nb = a\nc = a\n");
    SignatureSet sigs = parse_signatures("c,a\n1,0\n0,1\n", net);
    CHECK(sigs.biomarkers == std::vector<int>{0, 2});
    REQUIRE(sigs.signatures.size() == 2);
    // Rows are permuted to ascending variable order (a, c).
    CHECK(sigs.signatures[0] == std::vector<bool>{false, true});
    CHECK(sigs.signatures[1] == std::vector<bool>{true, false});
}

TEST_CASE("signature rows must be fully defined and known") {
    BooleanNetwork net = parse_network("a = b\nb = a\n");
    CHECK_THROWS_AS(parse_signatures("a,z\n1,0\n", net), Error);
    CHECK_THROWS_AS(parse_signatures("a,b\n1,-\n", net), Error);
}
