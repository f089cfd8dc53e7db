#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnsynth/benchmark.hpp"
#include "bnsynth/io.hpp"
#include "bnsynth/search.hpp"

namespace bnsynth {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInputError = 2,
    kExitInfeasible = 3,
    kExitNoOptimum = 4,
};

struct InferLocalOptions {
    std::string profiles_path;
    std::string graph_path;
    std::string out_dir;
    std::size_t max_formulas = 500;
    bool influence_constraint = true;
    int workers = 1;
};

struct SynthesizeOptions {
    std::string profiles_path;
    std::string graph_path;
    std::string signatures_path;
    std::size_t ref_stable_count = 0;
    std::string network_out;
    std::string trace_out;
    std::size_t max_formulas = 500;
    bool influence_constraint = true;
    SearchConfig search;
    std::size_t stable_cap = kDefaultStableCap;
};

struct SynthesizeOutcome {
    int exit_code = kExitOk;
    BooleanNetwork best;
    ScoreVector best_score;
    HaltReason halt = HaltReason::FailureBound;
    int iterations = 0;
};

struct BenchmarkOptions {
    std::string reference_path;
    std::string plan_path;
    std::string out_path;
    std::optional<int> workers; // overrides the plan
};

// Profile input of a run: either one shared observation set (a CSV file,
// every row constrains every target it defines) or per-target sets (a
// directory of <target>.csv files, each constraining only its target).
struct ProfileInput {
    std::map<std::string, BooleanProfileSet> per_target;
    std::optional<BooleanProfileSet> shared;

    const BooleanProfileSet& for_target(const std::string& target) const;
};

ProfileInput load_profiles_input(const std::string& path);

// One inference job per graph target; formulas come out over the ids given
// by `variable_index` (name -> id).
std::vector<FormulaPool> build_pools(const ProfileInput& profiles,
                                     const std::vector<RegulatorSpec>& specs,
                                     const std::map<std::string, int>& variable_index,
                                     const InferenceOptions& options, int workers);

int run_infer_local(const InferLocalOptions& options, std::ostream& out, std::ostream& err);
SynthesizeOutcome run_synthesize(const SynthesizeOptions& options, std::ostream& out,
                                 std::ostream& err);
int run_stable_states(const std::string& network_path, std::size_t cap, std::ostream& out);
int run_score(const std::string& network_path, const std::string& signatures_path,
              std::size_t ref_stable_count, std::size_t stable_cap, std::ostream& out);
int run_distance(const std::string& network_a, const std::string& network_b, std::ostream& out);
int run_centrality(const std::string& network_path, const std::string& graph_path, double tol,
                   int max_iter, std::ostream& out);
int run_benchmark_command(const BenchmarkOptions& options, std::ostream& out, std::ostream& err);
int run_plot_data(const std::string& results_path, const std::string& out_path, std::ostream& out);

// Plan files are flat key=value text; lists are comma or space separated
// and percentages use the 0-100 scale.
BenchmarkPlan parse_plan(const std::string& text);

std::string trace_to_csv(const SearchResult& result, const BooleanNetwork& network,
                         std::uint64_t seed);
std::string records_to_csv(const std::vector<BenchmarkRecord>& records, std::uint64_t seed);
std::string benchmark_csv_header();
std::string record_to_csv_line(const BenchmarkRecord& record);

} // namespace bnsynth
