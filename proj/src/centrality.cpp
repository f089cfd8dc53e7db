#include "bnsynth/centrality.hpp"

#include <algorithm>
#include <cmath>

namespace bnsynth {

CentralityRanking eigenvector_centrality(const SignedInteractionGraph& graph, double tol,
                                         int max_iter, double damping) {
    const std::size_t n = graph.num_nodes();
    if (n == 0) throw ContractViolation("centrality of an empty graph");

    const auto& out = graph.targets_of();
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    for (int iter = 0; iter < max_iter; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int target : out[i]) acc += v[static_cast<std::size_t>(target)];
            next[i] = damping * acc + (1.0 - damping) / static_cast<double>(n);
        }
        double total = 0.0;
        for (double x : next) total += x;
        for (double& x : next) x /= total;
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - v[i]));
        v.swap(next);
        if (delta < tol) return CentralityRanking{std::move(v)};
    }
    throw ConvergenceError("eigenvector centrality did not converge in " +
                               std::to_string(max_iter) + " iterations",
                           v);
}

std::vector<int> roulette_select(const CentralityRanking& ranking,
                                 const std::vector<bool>& excluded, int k, Rng& rng) {
    const std::size_t n = ranking.scores.size();
    std::vector<int> available;
    for (std::size_t i = 0; i < n; ++i)
        if (i >= excluded.size() || !excluded[i]) available.push_back(static_cast<int>(i));
    if (available.empty())
        throw Error("no variable available for selection: relax the tabu list");
    if (static_cast<int>(available.size()) <= k) return available;

    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(k));
    for (int round = 0; round < k; ++round) {
        double total = 0.0;
        for (int var : available) total += ranking.scores[static_cast<std::size_t>(var)];
        double u = rng.uniform() * total;
        std::size_t chosen = available.size() - 1;
        double acc = 0.0;
        for (std::size_t i = 0; i < available.size(); ++i) {
            acc += ranking.scores[static_cast<std::size_t>(available[i])];
            if (u < acc) {
                chosen = i;
                break;
            }
        }
        picked.push_back(available[chosen]);
        available.erase(available.begin() + static_cast<std::ptrdiff_t>(chosen));
    }
    return picked;
}

} // namespace bnsynth
