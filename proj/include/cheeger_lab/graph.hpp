#pragma once

#include "cheeger_lab/rational.hpp"

#include <cstdint>
#include <vector>

namespace cheeger_lab {

// Vertex subsets are bitmasks over dense ids 0..n-1; n is capped at 24 so
// every subset fits a 32-bit mask.
using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 24;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline int lowest_bit(Mask m) { return __builtin_ctz(m); }
inline Mask full_mask(int n) { return n == 32 ? ~Mask(0) : ((Mask(1) << n) - 1); }

struct Edge {
    int u;
    int v;
    Rat w;
};

// Finite undirected weighted graph: positive vertex weights mu, positive
// edge weights w, no self-loops or parallel edges. Immutable after
// construction; all member queries are const.
class WeightedGraph {
public:
    WeightedGraph(int n, std::vector<Rat> mu, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Rat>& mu() const { return mu_; }
    const std::vector<Edge>& edges() const { return edges_; }
    Mask adjacency(int v) const { return adj_[v]; }
    Mask vertices() const { return full_mask(n_); }

    // Sum of w over edges with exactly one endpoint in `a`. Errors on empty a.
    Rat boundary_weight(Mask a) const;

    // mu(a); errors on empty a.
    Rat volume(Mask a) const;

    // phi(a) = boundary / volume.
    Rat expansion(Mask a) const;

    // Maximal connected subsets of the induced subgraph on `a`, ordered by
    // smallest member.
    std::vector<Mask> connected_components(Mask a) const;

    bool is_connected(Mask a) const;

    int component_count() const;

    // beta = |E| - |V| + c.
    int betti_number() const;
    bool is_forest() const { return betti_number() == 0; }

    // Weighted degree of v.
    Rat weighted_degree(int v) const;

    // True iff mu_v equals the weighted degree for every vertex.
    bool mu_is_weighted_degree() const;

private:
    int n_;
    std::vector<Rat> mu_;
    std::vector<Edge> edges_;
    std::vector<Mask> adj_;
};

struct CutProfile {
    Rat boundary;
    Rat volume;
    Rat expansion;  // boundary / volume, exact
};

CutProfile cut_profile(const WeightedGraph& g, Mask a);

// mu_v = weighted degree convention; errors with ZeroMu on isolated vertices.
std::vector<Rat> default_mu(int n, const std::vector<Edge>& edges);

}  // namespace cheeger_lab
