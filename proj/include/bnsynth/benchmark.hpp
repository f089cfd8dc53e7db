#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnsynth/search.hpp"

namespace bnsynth {

struct BenchmarkPlan {
    std::vector<double> profile_percents;   // fractions in (0, 1]
    std::vector<double> signature_percents; // fractions in [0, 1]; 0 = random baseline
    int trials = 10;
    std::uint64_t seed = 0;
    SearchConfig search;
    std::size_t max_formulas = 500;
    std::size_t stable_cap = kDefaultStableCap;
    int workers = 1;
};

struct BenchmarkRecord {
    double profile_percent = 0.0;
    double signature_percent = 0.0;
    int trial = 0;
    double distance = 0.0;
    std::optional<ScoreVector> score;
    int iterations = 0;
    double model_space_log10 = 0.0;
    double seconds = 0.0;
    std::string status = "ok"; // error text when a stage failed
};

// Regulator specs of a reference network: per variable, the semantic
// support in ascending index order with the derived signs.
std::vector<RegulatorSpec> reference_regulators(const BooleanNetwork& reference);

// Per-target fully defined profile rows: `count_for(percent, arity)` rows of
// the target's truth table, sampled uniformly without replacement.
std::map<int, BooleanProfileSet> sample_profiles(const BooleanNetwork& reference, double percent,
                                                 Rng& rng);

// Percent-to-count rounding used across the benchmark: half-up, minimum 1.
std::size_t count_for(double percent, std::size_t total);

// Top-centrality biomarkers and the restrictions of the reference stable
// states to them.
SignatureSet select_biomarkers(const BooleanNetwork& reference, double percent,
                               std::size_t stable_cap = kDefaultStableCap);

using RecordSink = std::function<void(const BenchmarkRecord&)>;

// Full sweep over profile x signature percentages. Each (profile, trial)
// pair samples one profile set and infers one pool family, reused by every
// signature cell, so cells of the same trial are paired. Signature 0 picks
// formulas uniformly at random instead of searching. Errors are recorded
// per trial. `sink`, when set, receives records as they are produced.
std::vector<BenchmarkRecord> run_benchmark(const BooleanNetwork& reference,
                                           const BenchmarkPlan& plan,
                                           const RecordSink& sink = nullptr);

} // namespace bnsynth
