#pragma once

#include "cheeger_lab/graph.hpp"
#include "cheeger_lab/rng.hpp"

#include <string>

namespace cheeger_lab {

struct GenOptions {
    bool random_weights = false;  // random small rationals instead of unit
    bool explicit_mu = false;     // random positive mu instead of weighted degree
};

// Small random rational in (0, 9]: numerator and denominator drawn from 1..8.
Rat random_weight(SplitMix64& rng);

WeightedGraph gen_path(int n, SplitMix64& rng, const GenOptions& = {});
WeightedGraph gen_star(int n, SplitMix64& rng, const GenOptions& = {});
WeightedGraph gen_cycle(int n, SplitMix64& rng, const GenOptions& = {});

// Uniform labeled tree via a random Pruefer sequence; n >= 2.
WeightedGraph gen_random_tree(int n, SplitMix64& rng, const GenOptions& = {});

// 1-3 tree components, each of size >= 2 (so the weighted-degree mu
// convention stays valid without explicit mu).
WeightedGraph gen_random_forest(int n, SplitMix64& rng, const GenOptions& = {});

// Random tree plus one extra edge: beta = 1.
WeightedGraph gen_unicyclic(int n, SplitMix64& rng, const GenOptions& = {});

// Random tree plus `beta` extra edges (connected, loop number = beta).
WeightedGraph gen_random_connected(int n, int beta, SplitMix64& rng, const GenOptions& = {});

// Dispatch by kind name: path|star|cycle|random-tree|random-forest|
// unicyclic|random-connected. `beta` applies to random-connected only.
WeightedGraph generate(const std::string& kind, int n, std::uint64_t seed, const GenOptions& = {},
                       int beta = 1);

}  // namespace cheeger_lab
