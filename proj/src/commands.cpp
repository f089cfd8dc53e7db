#include "bnsynth/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "bnsynth/distance.hpp"
#include "bnsynth/parallel.hpp"

namespace bnsynth {

namespace {

std::vector<std::string> names_of(const BooleanNetwork& network) {
    std::vector<std::string> names;
    names.reserve(network.size());
    for (const Variable& v : network.variables()) names.push_back(v.name);
    return names;
}

// Variable universe of a synthesis run: the graph's targets, in declaration
// order. Every regulator must itself be a target so the assembly has one
// formula per variable.
std::vector<std::string> target_universe(const std::vector<RegulatorSpec>& specs) {
    std::vector<std::string> names;
    names.reserve(specs.size());
    for (const RegulatorSpec& spec : specs) names.push_back(spec.target);
    for (const RegulatorSpec& spec : specs)
        for (const Regulation& reg : spec.regulators)
            if (std::find(names.begin(), names.end(), reg.source) == names.end())
                throw Error("regulator " + reg.source + " of " + spec.target +
                            " has no regulators of its own; every network variable needs a "
                            "formula");
    return names;
}

SignedInteractionGraph declared_graph(const std::vector<RegulatorSpec>& specs,
                                      const std::vector<std::string>& names) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<int>(i));
    std::vector<Arc> arcs;
    for (const RegulatorSpec& spec : specs)
        for (const Regulation& reg : spec.regulators) {
            InteractionSign sign = reg.sign == RegulationSign::Activator ? InteractionSign::Positive
                                   : reg.sign == RegulationSign::Inhibitor
                                       ? InteractionSign::Negative
                                       : InteractionSign::Dual;
            arcs.push_back(Arc{index.at(reg.source), index.at(spec.target), sign});
        }
    return SignedInteractionGraph(names.size(), std::move(arcs));
}

std::string format_double(double v) {
    std::ostringstream ss;
    ss << std::setprecision(10) << v;
    return ss.str();
}

} // namespace

const BooleanProfileSet& ProfileInput::for_target(const std::string& target) const {
    if (shared) return *shared;
    auto it = per_target.find(target);
    if (it == per_target.end())
        throw Error("profile directory has no file for target " + target);
    return it->second;
}

ProfileInput load_profiles_input(const std::string& path) {
    ProfileInput input;
    if (std::filesystem::is_directory(path)) {
        for (const auto& entry : std::filesystem::directory_iterator(path)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
            input.per_target.emplace(entry.path().stem().string(),
                                     parse_profiles(read_file(entry.path().string())));
        }
        if (input.per_target.empty())
            throw Error("profile directory " + path + " contains no <target>.csv file");
    } else {
        input.shared = parse_profiles(read_file(path));
    }
    return input;
}

std::vector<FormulaPool> build_pools(const ProfileInput& profiles,
                                     const std::vector<RegulatorSpec>& specs,
                                     const std::map<std::string, int>& variable_index,
                                     const InferenceOptions& options, int workers) {
    std::vector<FormulaPool> pools(specs.size());
    parallel_for(specs.size(), workers, [&](std::size_t i) {
        const RegulatorSpec& spec = specs[i];
        std::vector<int> regulator_ids;
        regulator_ids.reserve(spec.regulators.size());
        for (const Regulation& reg : spec.regulators) {
            auto it = variable_index.find(reg.source);
            if (it == variable_index.end())
                throw Error("regulator " + reg.source + " is not a declared variable");
            regulator_ids.push_back(it->second);
        }
        pools[i] = infer_formulas(profiles.for_target(spec.target), spec, regulator_ids, options);
    });
    return pools;
}

int run_infer_local(const InferLocalOptions& options, std::ostream& out, std::ostream& err) {
    ProfileInput profiles = load_profiles_input(options.profiles_path);
    std::vector<RegulatorSpec> specs = parse_graph(read_file(options.graph_path));

    // Formula variables are the names the graph mentions, targets first.
    std::vector<std::string> names;
    std::map<std::string, int> variable_index;
    auto declare = [&](const std::string& name) {
        if (variable_index.emplace(name, static_cast<int>(names.size())).second)
            names.push_back(name);
    };
    for (const RegulatorSpec& spec : specs) declare(spec.target);
    for (const RegulatorSpec& spec : specs)
        for (const Regulation& reg : spec.regulators) declare(reg.source);

    InferenceOptions inference;
    inference.max_formulas = options.max_formulas;
    inference.influence_constraint = options.influence_constraint;
    std::vector<FormulaPool> pools =
        build_pools(profiles, specs, variable_index, inference, options.workers);

    std::filesystem::create_directories(options.out_dir);
    bool any_empty = false;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const FormulaPool& pool = pools[i];
        std::string content;
        for (const Formula& f : pool.formulas) {
            content += pool.target;
            content += " = ";
            content += serialize_formula(f, names);
            content += "\n";
        }
        if (pool.truncated)
            content += "# truncated at " + std::to_string(options.max_formulas) + "\n";
        write_file((std::filesystem::path(options.out_dir) / (pool.target + ".txt")).string(),
                   content);
        out << pool.target << ": " << pool.formulas.size() << " formula(s)"
            << (pool.truncated ? " [truncated]" : "") << "\n";
        if (pool.formulas.empty()) {
            any_empty = true;
            err << "no consistent formula for " << pool.target << ": " << pool.diagnostic << "\n";
        }
    }
    return any_empty ? kExitInfeasible : kExitOk;
}

SynthesizeOutcome run_synthesize(const SynthesizeOptions& options, std::ostream& out,
                                 std::ostream& err) {
    ProfileInput profiles = load_profiles_input(options.profiles_path);
    std::vector<RegulatorSpec> specs = parse_graph(read_file(options.graph_path));
    std::vector<std::string> names = target_universe(specs);
    std::map<std::string, int> universe_index;
    for (std::size_t i = 0; i < names.size(); ++i)
        universe_index.emplace(names[i], static_cast<int>(i));

    InferenceOptions inference;
    inference.max_formulas = options.max_formulas;
    inference.influence_constraint = options.influence_constraint;
    std::vector<FormulaPool> by_spec =
        build_pools(profiles, specs, universe_index, inference, options.search.workers);

    std::vector<FormulaPool> pools(names.size());
    double model_space_log10 = 0.0;
    for (std::size_t si = 0; si < specs.size(); ++si)
        pools[static_cast<std::size_t>(universe_index.at(specs[si].target))] =
            std::move(by_spec[si]);
    for (std::size_t i = 0; i < pools.size(); ++i) {
        if (pools[i].formulas.empty()) {
            err << "no consistent formula for " << names[i]
                << (pools[i].diagnostic.empty() ? "" : ": " + pools[i].diagnostic) << "\n";
            SynthesizeOutcome failed;
            failed.exit_code = kExitInfeasible;
            return failed;
        }
        model_space_log10 += std::log10(static_cast<double>(pools[i].formulas.size()));
    }

    BooleanNetwork placeholder(names, std::vector<Formula>(names.size(), Formula::constant(false)));
    SignatureSet signatures = parse_signatures(read_file(options.signatures_path), placeholder);

    Objective objective(std::move(signatures), options.ref_stable_count, options.stable_cap);
    CentralityRanking ranking = eigenvector_centrality(declared_graph(specs, names));

    Rng init_rng(options.search.rng_seed);
    BooleanNetwork initial = initial_network(names, pools, options.search.random_initial, init_rng);
    SearchResult result = tabu_search(initial, pools, objective, ranking, options.search);

    out << "seed: " << options.search.rng_seed << "\n";
    out << "model space (log10): " << format_double(model_space_log10) << "\n";
    out << "iterations: " << result.iterations << "\n";
    out << "best score: " << result.best_score.to_string() << "\n";
    out << "halt: " << (result.halt == HaltReason::Optimal ? "optimal" : "failure-bound") << "\n";

    if (!options.network_out.empty()) {
        std::string content = "# seed: " + std::to_string(options.search.rng_seed) + "\n" +
                              "# score: " + result.best_score.to_string() + "\n" +
                              serialize_network(result.best);
        write_file(options.network_out, content);
    }
    if (!options.trace_out.empty())
        write_file(options.trace_out,
                   trace_to_csv(result, result.best, options.search.rng_seed));

    SynthesizeOutcome outcome;
    outcome.exit_code = result.halt == HaltReason::Optimal ? kExitOk : kExitNoOptimum;
    outcome.best = std::move(result.best);
    outcome.best_score = std::move(result.best_score);
    outcome.halt = result.halt;
    outcome.iterations = result.iterations;
    return outcome;
}

int run_stable_states(const std::string& network_path, std::size_t cap, std::ostream& out) {
    BooleanNetwork network = parse_network(read_file(network_path));
    StableStateSet stable = stable_states(network, cap);
    bool first = true;
    for (const Variable& v : network.variables()) {
        if (!first) out << " ";
        out << v.name;
        first = false;
    }
    out << "\n";
    for (const State& s : stable.states) {
        for (std::size_t i = 0; i < network.size(); ++i) {
            if (i) out << " ";
            out << (s.get(static_cast<int>(i)) ? 1 : 0);
        }
        out << "\n";
    }
    if (stable.truncated) out << "# truncated at " << cap << "\n";
    return kExitOk;
}

int run_score(const std::string& network_path, const std::string& signatures_path,
              std::size_t ref_stable_count, std::size_t stable_cap, std::ostream& out) {
    BooleanNetwork network = parse_network(read_file(network_path));
    SignatureSet signatures = parse_signatures(read_file(signatures_path), network);
    Objective objective(std::move(signatures), ref_stable_count, stable_cap);
    out << objective.score(network).to_string(',') << "\n";
    return kExitOk;
}

int run_distance(const std::string& network_a, const std::string& network_b, std::ostream& out) {
    BooleanNetwork a = parse_network(read_file(network_a));
    BooleanNetwork b = parse_network(read_file(network_b));
    out << format_double(network_distance(a, b)) << "\n";
    return kExitOk;
}

int run_centrality(const std::string& network_path, const std::string& graph_path, double tol,
                   int max_iter, std::ostream& out) {
    std::vector<std::string> names;
    SignedInteractionGraph graph;
    if (!network_path.empty()) {
        BooleanNetwork network = parse_network(read_file(network_path));
        names = names_of(network);
        graph = derive_interactions(network);
    } else {
        std::vector<RegulatorSpec> specs = parse_graph(read_file(graph_path));
        std::map<std::string, int> index;
        for (const RegulatorSpec& spec : specs)
            if (!index.count(spec.target)) {
                index.emplace(spec.target, static_cast<int>(names.size()));
                names.push_back(spec.target);
            }
        for (const RegulatorSpec& spec : specs)
            for (const Regulation& reg : spec.regulators)
                if (!index.count(reg.source)) {
                    index.emplace(reg.source, static_cast<int>(names.size()));
                    names.push_back(reg.source);
                }
        std::vector<Arc> arcs;
        for (const RegulatorSpec& spec : specs)
            for (const Regulation& reg : spec.regulators)
                arcs.push_back(Arc{index.at(reg.source), index.at(spec.target),
                                   reg.sign == RegulationSign::Activator ? InteractionSign::Positive
                                   : reg.sign == RegulationSign::Inhibitor
                                       ? InteractionSign::Negative
                                       : InteractionSign::Dual});
        graph = SignedInteractionGraph(names.size(), std::move(arcs));
    }
    CentralityRanking ranking = eigenvector_centrality(graph, tol, max_iter);
    out << "variable,centrality\n";
    for (std::size_t i = 0; i < names.size(); ++i)
        out << names[i] << "," << format_double(ranking.scores[i]) << "\n";
    return kExitOk;
}

BenchmarkPlan parse_plan(const std::string& text) {
    BenchmarkPlan plan;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    auto parse_list = [&](const std::string& value) {
        std::vector<double> out;
        std::string item;
        std::string normalized = value;
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        std::istringstream ns(normalized);
        while (ns >> item) out.push_back(std::stod(item) / 100.0);
        return out;
    };
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string lineText = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (std::all_of(lineText.begin(), lineText.end(),
                        [](char c) { return c == ' ' || c == '\t' || c == '\r'; }))
            continue;
        auto eq = lineText.find('=');
        if (eq == std::string::npos)
            throw ParseError("plan line " + std::to_string(line_no) + ": expected key = value",
                             line_no, 1);
        std::string key = lineText.substr(0, eq);
        std::string value = lineText.substr(eq + 1);
        auto trim = [](std::string& s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(0, 1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.pop_back();
        };
        trim(key);
        trim(value);
        if (key == "profile_percents")
            plan.profile_percents = parse_list(value);
        else if (key == "signature_percents")
            plan.signature_percents = parse_list(value);
        else if (key == "trials")
            plan.trials = std::stoi(value);
        else if (key == "seed")
            plan.seed = std::stoull(value);
        else if (key == "moves")
            plan.search.num_candidates = std::stoi(value);
        else if (key == "max_formulas")
            plan.max_formulas = std::stoull(value);
        else if (key == "failure_bound")
            plan.search.failure_bound = std::stoi(value);
        else if (key == "tabu_tenure")
            plan.search.tabu_tenure = std::stoi(value);
        else if (key == "diversification_period")
            plan.search.diversification_period = std::stoi(value);
        else if (key == "workers")
            plan.workers = std::stoi(value);
        else if (key == "stable_cap")
            plan.stable_cap = std::stoull(value);
        else
            throw ParseError("plan line " + std::to_string(line_no) + ": unknown key '" + key +
                                 "'",
                             line_no, 1);
    }
    if (plan.profile_percents.empty())
        throw ParseError("plan must set profile_percents", 1, 1);
    if (plan.signature_percents.empty())
        throw ParseError("plan must set signature_percents", 1, 1);
    return plan;
}

std::string benchmark_csv_header() {
    return "profile_pct,signature_pct,trial,distance,score,iterations,model_space_log10,seconds,"
           "status";
}

std::string record_to_csv_line(const BenchmarkRecord& record) {
    std::ostringstream ss;
    ss << std::setprecision(10);
    ss << record.profile_percent * 100.0 << "," << record.signature_percent * 100.0 << ","
       << record.trial << "," << record.distance << ","
       << (record.score ? record.score->to_string() : std::string{}) << "," << record.iterations
       << "," << record.model_space_log10 << "," << record.seconds << ","
       << (record.status == "ok" ? "ok" : record.status);
    return ss.str();
}

std::string records_to_csv(const std::vector<BenchmarkRecord>& records, std::uint64_t seed) {
    std::string out = "# seed: " + std::to_string(seed) + "\n" + benchmark_csv_header() + "\n";
    for (const BenchmarkRecord& r : records) out += record_to_csv_line(r) + "\n";
    return out;
}

int run_benchmark_command(const BenchmarkOptions& options, std::ostream& out, std::ostream& err) {
    BooleanNetwork reference = parse_network(read_file(options.reference_path));
    BenchmarkPlan plan = parse_plan(read_file(options.plan_path));
    if (options.workers) plan.workers = *options.workers;

    std::ofstream csv(options.out_path, std::ios::binary);
    if (!csv) throw Error("cannot write " + options.out_path);
    csv << "# seed: " << plan.seed << "\n" << benchmark_csv_header() << "\n";
    // Stream records as they finish so partial sweeps survive interruption.
    std::vector<BenchmarkRecord> records = run_benchmark(reference, plan, [&](const BenchmarkRecord& r) {
        csv << record_to_csv_line(r) << "\n";
        csv.flush();
    });

    std::size_t failed = 0;
    for (const BenchmarkRecord& r : records)
        if (r.status != "ok") ++failed;
    out << records.size() << " record(s), " << failed << " failed\n";
    if (failed) err << failed << " trial(s) recorded an error; see the status column\n";
    return kExitOk;
}

int run_plot_data(const std::string& results_path, const std::string& out_path,
                  std::ostream& out) {
    std::istringstream in(read_file(results_path));
    std::string raw;
    struct Cell {
        std::vector<double> distances;
        double seconds = 0.0;
        double iterations = 0.0;
    };
    std::map<std::pair<double, double>, Cell> cells;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        if (raw.empty() || raw[0] == '#') continue;
        if (!header_seen) {
            header_seen = true; // column header
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(raw);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() < 9 || fields[8] != "ok") continue;
        std::pair<double, double> key{std::stod(fields[0]), std::stod(fields[1])};
        Cell& cell = cells[key];
        cell.distances.push_back(std::stod(fields[3]));
        cell.iterations += std::stod(fields[5]);
        cell.seconds += std::stod(fields[7]);
    }

    std::ostringstream agg;
    agg << "profile_pct,signature_pct,n,mean_distance,min_distance,max_distance,stddev_distance,"
           "mean_iterations,mean_seconds\n";
    agg << std::setprecision(10);
    for (const auto& [key, cell] : cells) {
        const auto& d = cell.distances;
        double n = static_cast<double>(d.size());
        double mean = 0.0;
        for (double x : d) mean += x;
        mean /= n;
        double variance = 0.0;
        for (double x : d) variance += (x - mean) * (x - mean);
        variance = d.size() > 1 ? variance / (n - 1.0) : 0.0;
        agg << key.first << "," << key.second << "," << d.size() << "," << mean << ","
            << *std::min_element(d.begin(), d.end()) << "," << *std::max_element(d.begin(), d.end())
            << "," << std::sqrt(variance) << "," << cell.iterations / n << "," << cell.seconds / n
            << "\n";
    }
    if (out_path.empty())
        out << agg.str();
    else
        write_file(out_path, agg.str());
    return kExitOk;
}

std::string trace_to_csv(const SearchResult& result, const BooleanNetwork& network,
                         std::uint64_t seed) {
    std::string out = "# seed: " + std::to_string(seed) + "\n";
    out += "iteration,variable,formula_index,score,best,failures,improved,relaxed,diversified\n";
    for (const IterationRecord& r : result.trace) {
        out += std::to_string(r.iteration) + ",";
        out += (r.moved ? network.name(r.variable) : std::string{}) + ",";
        out += (r.moved ? std::to_string(r.formula_index) : std::string{}) + ",";
        out += (r.moved ? r.score.to_string() : std::string{}) + ",";
        out += r.best.to_string() + ",";
        out += std::to_string(r.consecutive_failures) + ",";
        out += std::string(r.improved ? "1" : "0") + ",";
        out += std::string(r.relaxed ? "1" : "0") + ",";
        out += std::string(r.diversified ? "1" : "0") + "\n";
    }
    return out;
}

} // namespace bnsynth
