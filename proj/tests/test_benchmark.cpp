#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "bnsynth/benchmark.hpp"
#include "bnsynth/commands.hpp"
#include "bnsynth/distance.hpp"
#include "oracles.hpp"

using namespace bnsynth;

namespace {

BooleanNetwork load_reference(const std::string& name) {
    return parse_network(
        read_file(std::string(BNSYNTH_DATA_DIR) + "/references/" + name + ".txt"));
}

const char* kReferenceNames[] = {"ref_a", "ref_b", "ref_c", "ref_d", "ref_e"};

} // namespace

TEST_CASE("rounding is half-up with a floor of one") {
    CHECK(count_for(1.0, 16) == 16);
    CHECK(count_for(0.5, 16) == 8);
    CHECK(count_for(0.25, 2) == 1);  // 0.5 rounds half-up
    CHECK(count_for(0.01, 16) == 1); // floor of one
}

TEST_CASE("shipped references are monotone, regulated and multistable") {
    for (const char* name : kReferenceNames) {
        BooleanNetwork ref = load_reference(name);
        CHECK(ref.size() >= 6);
        CHECK(ref.size() <= 12);
        StableStateSet stable = stable_states(ref);
        CHECK(stable.states.size() >= 2);
        for (std::size_t i = 0; i < ref.size(); ++i)
            CHECK(is_monotone(ref.function(static_cast<int>(i))));
        // Every variable has at least one influencing regulator with a sign.
        auto specs = reference_regulators(ref);
        for (const RegulatorSpec& spec : specs) {
            CHECK_FALSE(spec.regulators.empty());
            for (const Regulation& reg : spec.regulators)
                CHECK(reg.sign != RegulationSign::Unknown);
        }
    }
}

TEST_CASE("sampled rows reproduce the reference function") {
    BooleanNetwork ref = load_reference("ref_a");
    Rng rng(41);
    auto samples = sample_profiles(ref, 0.5, rng);
    REQUIRE(samples.size() == ref.size());
    for (const auto& [target, set] : samples) {
        const Formula& f = ref.function(target);
        const std::size_t r = f.support().size();
        CHECK(set.variables.size() == r + 1);
        CHECK(set.rows.size() == count_for(0.5, std::size_t{1} << r));
        for (const auto& row : set.rows) {
            // Fully defined rows whose output matches the reference.
            State s(ref.size());
            for (std::size_t i = 0; i < r; ++i) {
                REQUIRE(row[i] != Trit::Unknown);
                s.set(f.support()[i], row[i] == Trit::True);
            }
            REQUIRE(row[r] != Trit::Unknown);
            CHECK(f.evaluate(s) == (row[r] == Trit::True));
        }
    }
}

TEST_CASE("full sampling lists every truth-table row exactly once") {
    BooleanNetwork ref = load_reference("ref_a");
    Rng rng(42);
    auto samples = sample_profiles(ref, 1.0, rng);
    for (const auto& [target, set] : samples) {
        const std::size_t r = ref.function(target).support().size();
        CHECK(set.rows.size() == (std::size_t{1} << r));
        std::set<std::vector<Trit>> distinct(set.rows.begin(), set.rows.end());
        CHECK(distinct.size() == set.rows.size());
    }
}

TEST_CASE("full profiles force singleton pools") {
    BooleanNetwork ref = load_reference("ref_b");
    Rng rng(43);
    auto samples = sample_profiles(ref, 1.0, rng);
    auto specs = reference_regulators(ref);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        std::vector<int> ids;
        for (const Regulation& reg : specs[i].regulators)
            ids.push_back(*ref.index_of(reg.source));
        FormulaPool pool = infer_formulas(samples.at(static_cast<int>(i)), specs[i], ids, {});
        REQUIRE(pool.formulas.size() == 1);
        CHECK(oracles::semantically_equal(pool.formulas[0], ref.function(static_cast<int>(i))));
    }
}

TEST_CASE("biomarkers follow centrality and signatures restrict stable states") {
    BooleanNetwork ref = load_reference("ref_a");
    SignatureSet all_sigs = select_biomarkers(ref, 1.0);
    StableStateSet stable = stable_states(ref);
    CHECK(all_sigs.biomarkers.size() == ref.size());
    CHECK(all_sigs.signatures.size() == stable.states.size());

    SignatureSet quarter = select_biomarkers(ref, 0.25);
    CHECK(quarter.biomarkers.size() == count_for(0.25, ref.size()));
}

TEST_CASE("a reference without stable states cannot provide signatures") {
    BooleanNetwork net = parse_network("a = !a\n");
    CHECK_THROWS_AS(select_biomarkers(net, 1.0), Error);
}

TEST_CASE("a tiny full-information sweep recovers the reference") {
    BooleanNetwork ref = load_reference("ref_a");
    BenchmarkPlan plan;
    plan.profile_percents = {1.0};
    plan.signature_percents = {1.0};
    plan.trials = 2;
    plan.seed = 7;
    auto records = run_benchmark(ref, plan);
    REQUIRE(records.size() == 2);
    for (const BenchmarkRecord& r : records) {
        CHECK(r.status == "ok");
        CHECK(r.distance == doctest::Approx(0.0));
        REQUIRE(r.score.has_value());
        CHECK(is_optimal(*r.score));
        CHECK(r.model_space_log10 == doctest::Approx(0.0)); // singleton pools
    }
}

TEST_CASE("the zero-signature baseline skips the search") {
    BooleanNetwork ref = load_reference("ref_a");
    BenchmarkPlan plan;
    plan.profile_percents = {0.5};
    plan.signature_percents = {0.0};
    plan.trials = 2;
    plan.seed = 11;
    auto records = run_benchmark(ref, plan);
    REQUIRE(records.size() == 2);
    for (const BenchmarkRecord& r : records) {
        CHECK(r.status == "ok");
        CHECK(r.iterations == 0);
        CHECK(r.distance >= 0.0);
        CHECK(r.distance <= 1.0);
    }
}

TEST_CASE("cells of one trial share the profile sample") {
    BooleanNetwork ref = load_reference("ref_a");
    BenchmarkPlan plan;
    plan.profile_percents = {0.5};
    plan.signature_percents = {0.0, 1.0};
    plan.trials = 1;
    plan.seed = 13;
    auto records = run_benchmark(ref, plan);
    REQUIRE(records.size() == 2);
    CHECK(records[0].model_space_log10 == doctest::Approx(records[1].model_space_log10));
}

TEST_CASE("plan files parse") {
    BenchmarkPlan plan = parse_plan("profile_percents = 25, 50, 100\n"
                                    "signature_percents = 0 50\n"
                                    "trials = 3\n"
                                    "seed = 99\n"
                                    "moves = 4\n"
                                    "max_formulas = 500\n"
                                    "failure_bound = 100\n");
    CHECK(plan.profile_percents == std::vector<double>{0.25, 0.5, 1.0});
    CHECK(plan.signature_percents == std::vector<double>{0.0, 0.5});
    CHECK(plan.trials == 3);
    CHECK(plan.seed == 99);
    CHECK(plan.search.num_candidates == 4);
    CHECK(plan.search.failure_bound == 100);
    CHECK_THROWS_AS(parse_plan("trials = 3\n"), ParseError);
}

TEST_CASE("benchmark records serialize to the documented CSV columns") {
    BenchmarkRecord r;
    r.profile_percent = 0.5;
    r.signature_percent = 0.25;
    r.trial = 3;
    r.distance = 0.125;
    ScoreVector v;
    v.signature_distances = {1, 0};
    r.score = v;
    r.iterations = 7;
    r.model_space_log10 = 2.5;
    r.seconds = 0.25;
    std::string line = record_to_csv_line(r);
    CHECK(line == "50,25,3,0.125,1;0;0;0,7,2.5,0.25,ok");
    CHECK(benchmark_csv_header() ==
          "profile_pct,signature_pct,trial,distance,score,iterations,model_space_log10,seconds,"
          "status");
}
