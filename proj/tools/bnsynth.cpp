#include <iostream>

#include <CLI11.hpp>

#include "bnsynth/commands.hpp"

namespace {

int dispatch(int argc, char** argv) {
    CLI::App app{"Boolean network synthesis from binarized profiles and a regulatory graph"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file mirroring the flags");
    app.allow_config_extras(false);

    using namespace bnsynth;

    // infer-local
    InferLocalOptions infer;
    auto* infer_cmd = app.add_subcommand("infer-local",
                                         "enumerate all consistent formulas per target");
    infer_cmd->add_option("--profiles", infer.profiles_path, "profiles CSV or directory of <target>.csv files")->required();
    infer_cmd->add_option("--graph", infer.graph_path, "regulation file")->required();
    infer_cmd->add_option("--out-dir", infer.out_dir, "output directory, one file per target")
        ->required();
    infer_cmd->add_option("--max-formulas", infer.max_formulas, "enumeration cap (default 500)");
    infer_cmd->add_flag("--no-influence-constraint",
                        [&infer](std::int64_t) { infer.influence_constraint = false; },
                        "do not force unknown-sign regulators to have an influence");
    infer_cmd->add_option("--workers", infer.workers, "parallel inference jobs");

    // synthesize
    SynthesizeOptions synth;
    bool synth_random_initial = false;
    auto* synth_cmd = app.add_subcommand("synthesize", "search the fittest assembly");
    synth_cmd->add_option("--profiles", synth.profiles_path, "profiles CSV or directory of <target>.csv files")->required();
    synth_cmd->add_option("--graph", synth.graph_path, "regulation file")->required();
    synth_cmd->add_option("--signatures", synth.signatures_path, "signatures CSV")->required();
    synth_cmd->add_option("--ref-stable-count", synth.ref_stable_count,
                          "expected number of stable states")
        ->required();
    synth_cmd->add_option("--out", synth.network_out, "best network output file");
    synth_cmd->add_option("--trace", synth.trace_out, "per-iteration trace CSV");
    synth_cmd->add_option("--moves", synth.search.num_candidates,
                          "candidates per iteration (default 4)");
    synth_cmd->add_option("--max-formulas", synth.max_formulas, "enumeration cap (default 500)");
    synth_cmd->add_option("--failure-bound", synth.search.failure_bound,
                          "consecutive non-improving iterations before halting (default 100)");
    synth_cmd->add_option("--seed", synth.search.rng_seed, "random seed")->required();
    int tenure = -1;
    synth_cmd->add_option("--tenure", tenure, "tabu tenure (default: half the variables)");
    synth_cmd->add_option("--diversify", synth.search.diversification_period,
                          "diversification period (default 10, 0 disables)");
    synth_cmd->add_option("--workers", synth.search.workers, "parallel scoring workers");
    synth_cmd->add_flag("--random-initial", synth_random_initial,
                        "start from a random assembly instead of the fewest-terms one");
    synth_cmd->add_option("--stable-cap", synth.stable_cap, "stable-state enumeration cap");
    synth_cmd->add_flag("--no-influence-constraint",
                        [&synth](std::int64_t) { synth.influence_constraint = false; },
                        "do not force unknown-sign regulators to have an influence");

    // stable-states
    std::string ss_network;
    std::size_t ss_cap = bnsynth::kDefaultStableCap;
    auto* ss_cmd = app.add_subcommand("stable-states", "print all fixed points of a network");
    ss_cmd->add_option("--network", ss_network, "network file")->required();
    ss_cmd->add_option("--cap", ss_cap, "enumeration cap");

    // score
    std::string score_network, score_signatures;
    std::size_t score_ref_count = 0;
    std::size_t score_cap = bnsynth::kDefaultStableCap;
    auto* score_cmd = app.add_subcommand("score", "score a network against signatures");
    score_cmd->add_option("--network", score_network, "network file")->required();
    score_cmd->add_option("--signatures", score_signatures, "signatures CSV")->required();
    score_cmd->add_option("--ref-stable-count", score_ref_count,
                          "expected number of stable states")
        ->required();
    score_cmd->add_option("--stable-cap", score_cap, "stable-state enumeration cap");

    // distance
    std::string dist_a, dist_b;
    auto* dist_cmd = app.add_subcommand("distance", "truth-value distance between two networks");
    dist_cmd->add_option("--a", dist_a, "first network")->required();
    dist_cmd->add_option("--b", dist_b, "second network")->required();

    // centrality
    std::string cent_network, cent_graph;
    double cent_tol = 1e-12;
    int cent_max_iter = 10000;
    auto* cent_cmd = app.add_subcommand("centrality", "influence ranking of the variables");
    auto* cent_net_opt = cent_cmd->add_option("--network", cent_network, "network file");
    auto* cent_graph_opt = cent_cmd->add_option("--graph", cent_graph, "regulation file");
    cent_net_opt->excludes(cent_graph_opt);
    cent_cmd->add_option("--tol", cent_tol, "convergence tolerance");
    cent_cmd->add_option("--max-iter", cent_max_iter, "iteration bound");

    // benchmark
    BenchmarkOptions bench;
    int bench_workers = 0;
    auto* bench_cmd = app.add_subcommand("benchmark", "closeness sweep against a reference");
    bench_cmd->add_option("--reference", bench.reference_path, "reference network")->required();
    bench_cmd->add_option("--plan", bench.plan_path, "plan file (key = value)")->required();
    bench_cmd->add_option("--out", bench.out_path, "results CSV")->required();
    bench_cmd->add_option("--workers", bench_workers, "parallel trials (overrides the plan)");

    // plot-data
    std::string plot_results, plot_out;
    auto* plot_cmd = app.add_subcommand("plot-data", "aggregate benchmark results per cell");
    plot_cmd->add_option("--results", plot_results, "results CSV")->required();
    plot_cmd->add_option("--out", plot_out, "aggregate CSV (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : bnsynth::kExitUsage;
    }

    try {
        if (infer_cmd->parsed()) return run_infer_local(infer, std::cout, std::cerr);
        if (synth_cmd->parsed()) {
            if (tenure >= 0) synth.search.tabu_tenure = tenure;
            synth.search.random_initial = synth_random_initial;
            return run_synthesize(synth, std::cout, std::cerr).exit_code;
        }
        if (ss_cmd->parsed()) return run_stable_states(ss_network, ss_cap, std::cout);
        if (score_cmd->parsed())
            return run_score(score_network, score_signatures, score_ref_count, score_cap,
                             std::cout);
        if (dist_cmd->parsed()) return run_distance(dist_a, dist_b, std::cout);
        if (cent_cmd->parsed()) {
            if (cent_network.empty() && cent_graph.empty())
                throw bnsynth::ConfigError("centrality needs --network or --graph");
            return run_centrality(cent_network, cent_graph, cent_tol, cent_max_iter, std::cout);
        }
        if (bench_cmd->parsed()) {
            if (bench_workers > 0) bench.workers = bench_workers;
            return run_benchmark_command(bench, std::cout, std::cerr);
        }
        if (plot_cmd->parsed()) return run_plot_data(plot_results, plot_out, std::cout);
    } catch (const bnsynth::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return bnsynth::kExitInputError;
    } catch (const bnsynth::ProfileConflict& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return bnsynth::kExitInputError;
    } catch (const bnsynth::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return bnsynth::kExitUsage;
    } catch (const bnsynth::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bnsynth::kExitInputError;
    }
    return bnsynth::kExitUsage;
}

} // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
