#pragma once

#include <vector>

#include "bnsynth/network.hpp"
#include "bnsynth/rng.hpp"

namespace bnsynth {

// Influence score per variable, normalized to sum 1.
struct CentralityRanking {
    std::vector<double> scores;
};

// Power iteration on the out-adjacency structure with a uniform
// teleportation mass, so the principal vector is unique and positive even
// on reducible graphs (sinks, sources, disconnected parts).
CentralityRanking eigenvector_centrality(const SignedInteractionGraph& graph, double tol = 1e-12,
                                         int max_iter = 10000, double damping = 0.85);

// Draws k distinct variables without replacement; at every draw the
// probability of a variable is its score over the total score of the
// remaining available ones. Returns all available when fewer than k remain.
std::vector<int> roulette_select(const CentralityRanking& ranking,
                                 const std::vector<bool>& excluded, int k, Rng& rng);

} // namespace bnsynth
