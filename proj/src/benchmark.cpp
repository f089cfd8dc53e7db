#include "bnsynth/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>

#include "bnsynth/distance.hpp"
#include "bnsynth/parallel.hpp"

namespace bnsynth {

namespace {

std::uint64_t permille(double fraction) {
    return static_cast<std::uint64_t>(std::llround(fraction * 1000.0));
}

RegulationSign sign_of(InteractionSign s) {
    switch (s) {
    case InteractionSign::Positive: return RegulationSign::Activator;
    case InteractionSign::Negative: return RegulationSign::Inhibitor;
    default: return RegulationSign::Unknown;
    }
}

} // namespace

std::size_t count_for(double percent, std::size_t total) {
    if (percent <= 0.0 || percent > 1.0)
        throw ContractViolation("percent must be within (0, 1]");
    auto rounded = static_cast<std::size_t>(
        std::llround(percent * static_cast<double>(total)));
    return std::clamp<std::size_t>(rounded, 1, total);
}

std::vector<RegulatorSpec> reference_regulators(const BooleanNetwork& reference) {
    std::vector<RegulatorSpec> specs;
    specs.reserve(reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
        RegulatorSpec spec;
        spec.target = reference.name(static_cast<int>(i));
        for (const auto& [src, sign] : formula_signs(reference.function(static_cast<int>(i))))
            spec.regulators.push_back(Regulation{reference.name(src), sign_of(sign)});
        if (spec.regulators.empty())
            throw ContractViolation("reference variable " + spec.target +
                                    " has no influencing regulator");
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::map<int, BooleanProfileSet> sample_profiles(const BooleanNetwork& reference, double percent,
                                                 Rng& rng) {
    std::map<int, BooleanProfileSet> samples;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const Formula& f = reference.function(static_cast<int>(i));
        const auto& support = f.support();
        const std::size_t rows_total = std::size_t{1} << support.size();
        const std::size_t wanted = count_for(percent, rows_total);

        // Partial Fisher-Yates over the table row indices.
        std::vector<std::size_t> indices(rows_total);
        for (std::size_t k = 0; k < rows_total; ++k) indices[k] = k;
        for (std::size_t k = 0; k < wanted; ++k) {
            std::size_t j = k + rng.below(rows_total - k);
            std::swap(indices[k], indices[j]);
        }

        BooleanProfileSet set;
        for (int v : support) set.variables.push_back(reference.name(v));
        set.variables.push_back(reference.name(static_cast<int>(i)));
        const int r = static_cast<int>(support.size());
        for (std::size_t k = 0; k < wanted; ++k) {
            std::size_t pattern = indices[k];
            std::vector<Trit> row;
            row.reserve(support.size() + 1);
            for (int pos = 0; pos < r; ++pos)
                row.push_back((pattern >> TruthTable::bit_of_position(r, pos)) & 1 ? Trit::True
                                                                                   : Trit::False);
            row.push_back(f.evaluate_pattern(pattern) ? Trit::True : Trit::False);
            set.rows.push_back(std::move(row));
        }
        samples.emplace(static_cast<int>(i), std::move(set));
    }
    return samples;
}

SignatureSet select_biomarkers(const BooleanNetwork& reference, double percent,
                               std::size_t stable_cap) {
    CentralityRanking ranking = eigenvector_centrality(derive_interactions(reference));
    std::vector<int> order(reference.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double ca = ranking.scores[static_cast<std::size_t>(a)];
        double cb = ranking.scores[static_cast<std::size_t>(b)];
        if (ca != cb) return ca > cb;
        return a < b;
    });
    const std::size_t wanted = count_for(percent, reference.size());
    std::vector<int> biomarkers(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(wanted));
    std::sort(biomarkers.begin(), biomarkers.end());

    StableStateSet stable = stable_states(reference, stable_cap);
    if (stable.states.empty())
        throw Error("reference network has no stable state: no signature can be derived");
    std::vector<std::vector<bool>> signatures;
    signatures.reserve(stable.states.size());
    for (const State& s : stable.states) {
        std::vector<bool> sig;
        sig.reserve(biomarkers.size());
        for (int b : biomarkers) sig.push_back(s.get(b));
        signatures.push_back(std::move(sig));
    }
    return SignatureSet::build(std::move(biomarkers), std::move(signatures));
}

namespace {

struct TrialContext {
    std::vector<FormulaPool> pools;
    double model_space_log10 = 0.0;
};

TrialContext infer_pools_for_trial(const BooleanNetwork& reference,
                                   const std::vector<RegulatorSpec>& specs,
                                   const BenchmarkPlan& plan, double profile_percent, int trial) {
    Rng sample_rng(mix_seed({plan.seed, permille(profile_percent), static_cast<std::uint64_t>(trial),
                             0x5a11u}));
    auto samples = sample_profiles(reference, profile_percent, sample_rng);

    TrialContext ctx;
    ctx.pools.resize(reference.size());
    InferenceOptions options;
    options.max_formulas = plan.max_formulas;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const RegulatorSpec& spec = specs[i];
        std::vector<int> regulator_ids;
        regulator_ids.reserve(spec.regulators.size());
        for (const Regulation& reg : spec.regulators)
            regulator_ids.push_back(*reference.index_of(reg.source));
        ctx.pools[i] = infer_formulas(samples.at(static_cast<int>(i)), spec, regulator_ids, options);
        if (ctx.pools[i].formulas.empty())
            throw Error("inference produced no formula for " + spec.target +
                        (ctx.pools[i].diagnostic.empty() ? "" : ": " + ctx.pools[i].diagnostic));
        ctx.model_space_log10 += std::log10(static_cast<double>(ctx.pools[i].formulas.size()));
    }
    return ctx;
}

std::vector<std::string> variable_names(const BooleanNetwork& n) {
    std::vector<std::string> names;
    names.reserve(n.size());
    for (const Variable& v : n.variables()) names.push_back(v.name);
    return names;
}

} // namespace

std::vector<BenchmarkRecord> run_benchmark(const BooleanNetwork& reference,
                                           const BenchmarkPlan& plan, const RecordSink& sink) {
    if (plan.trials < 1) throw ContractViolation("benchmark needs at least one trial");
    for (double p : plan.profile_percents)
        if (p <= 0.0 || p > 1.0) throw ContractViolation("profile percent outside (0, 1]");
    for (double s : plan.signature_percents)
        if (s < 0.0 || s > 1.0) throw ContractViolation("signature percent outside [0, 1]");

    const std::vector<RegulatorSpec> specs = reference_regulators(reference);
    const std::size_t ref_stable = stable_states(reference, plan.stable_cap).states.size();
    const std::vector<std::string> names = variable_names(reference);

    // Signature sets depend only on the percentage; build them once.
    std::map<std::uint64_t, SignatureSet> signature_cache;
    for (double s : plan.signature_percents)
        if (s > 0.0 && !signature_cache.count(permille(s)))
            signature_cache.emplace(permille(s), select_biomarkers(reference, s, plan.stable_cap));

    struct Job {
        double profile_percent;
        int trial;
    };
    std::vector<Job> jobs;
    for (double p : plan.profile_percents)
        for (int t = 0; t < plan.trials; ++t) jobs.push_back(Job{p, t});

    std::vector<std::vector<BenchmarkRecord>> per_job(jobs.size());
    std::mutex sink_mutex;

    parallel_for(jobs.size(), plan.workers, [&](std::size_t ji) {
        const Job& job = jobs[ji];
        auto emit = [&](BenchmarkRecord record) {
            if (sink) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                sink(record);
            }
            per_job[ji].push_back(std::move(record));
        };

        TrialContext ctx;
        bool pools_ok = true;
        std::string pools_error;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ctx = infer_pools_for_trial(reference, specs, plan, job.profile_percent, job.trial);
        } catch (const std::exception& e) {
            pools_ok = false;
            pools_error = e.what();
        }
        double infer_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                   .count();

        for (double s : plan.signature_percents) {
            BenchmarkRecord record;
            record.profile_percent = job.profile_percent;
            record.signature_percent = s;
            record.trial = job.trial;
            if (!pools_ok) {
                record.status = pools_error;
                emit(std::move(record));
                continue;
            }
            record.model_space_log10 = ctx.model_space_log10;
            auto cell_start = std::chrono::steady_clock::now();
            try {
                if (s == 0.0) {
                    // Baseline: uniform random assembly, no search.
                    Rng pick_rng(mix_seed({plan.seed, permille(job.profile_percent), permille(s),
                                           static_cast<std::uint64_t>(job.trial), 0x0b5eu}));
                    std::vector<Formula> functions;
                    functions.reserve(ctx.pools.size());
                    for (const FormulaPool& pool : ctx.pools)
                        functions.push_back(pool.formulas[pick_rng.below(pool.formulas.size())]);
                    BooleanNetwork random_net(names, std::move(functions));
                    record.distance = network_distance(random_net, reference);
                    Objective objective(SignatureSet{}, ref_stable, plan.stable_cap);
                    try {
                        record.score = objective.score(random_net);
                    } catch (const ScoringError&) {
                        record.score.reset(); // distance is still meaningful
                    }
                } else {
                    SearchConfig cfg = plan.search;
                    cfg.rng_seed = mix_seed({plan.seed, permille(job.profile_percent), permille(s),
                                             static_cast<std::uint64_t>(job.trial)});
                    Objective objective(signature_cache.at(permille(s)), ref_stable,
                                        plan.stable_cap);
                    Rng init_rng(cfg.rng_seed);
                    BooleanNetwork start =
                        initial_network(names, ctx.pools, cfg.random_initial, init_rng);
                    CentralityRanking ranking = eigenvector_centrality(derive_interactions(reference));
                    SearchResult found = tabu_search(start, ctx.pools, objective, ranking, cfg);
                    record.distance = network_distance(found.best, reference);
                    record.score = found.best_score;
                    record.iterations = found.iterations;
                }
            } catch (const std::exception& e) {
                record.status = e.what();
            }
            record.seconds = infer_seconds / static_cast<double>(plan.signature_percents.size()) +
                             std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                           cell_start)
                                 .count();
            emit(std::move(record));
        }
    });

    std::vector<BenchmarkRecord> records;
    for (auto& batch : per_job)
        for (auto& r : batch) records.push_back(std::move(r));
    return records;
}

} // namespace bnsynth
