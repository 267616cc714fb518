#include "cheeger_lab/generators.hpp"

#include "cheeger_lab/errors.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace cheeger_lab {

Rat random_weight(SplitMix64& rng) { return Rat(rng.range(1, 8), rng.range(1, 8)); }

namespace {

Rat edge_weight(SplitMix64& rng, const GenOptions& o) {
    return o.random_weights ? random_weight(rng) : Rat(1);
}

WeightedGraph finish(int n, std::vector<Edge> edges, SplitMix64& rng, const GenOptions& o) {
    std::vector<Rat> mu;
    if (o.explicit_mu) {
        mu.reserve(n);
        for (int v = 0; v < n; ++v) mu.push_back(random_weight(rng));
    } else {
        mu = default_mu(n, edges);
    }
    return WeightedGraph(n, std::move(mu), std::move(edges));
}

// Pruefer decode: sequence of length n-2 over 0..n-1.
std::vector<Edge> pruefer_edges(const std::vector<int>& seq, int n, SplitMix64& rng,
                                const GenOptions& o) {
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<Edge> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int s : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, s, edge_weight(rng, o)});
        if (--deg[s] == 1) leaves.insert(s);
    }
    const int a = *leaves.begin(), b = *leaves.rbegin();
    edges.push_back({a, b, edge_weight(rng, o)});
    return edges;
}

std::vector<Edge> random_tree_edges(int n, int offset, SplitMix64& rng, const GenOptions& o) {
    if (n == 2) return {{offset, offset + 1, edge_weight(rng, o)}};
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = static_cast<int>(rng.below(n));
    auto edges = pruefer_edges(seq, n, rng, o);
    for (Edge& e : edges) {
        e.u += offset;
        e.v += offset;
    }
    return edges;
}

}  // namespace

WeightedGraph gen_path(int n, SplitMix64& rng, const GenOptions& o) {
    if (n < 2) throw Error("path needs n >= 2");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, edge_weight(rng, o)});
    return finish(n, std::move(edges), rng, o);
}

WeightedGraph gen_star(int n, SplitMix64& rng, const GenOptions& o) {
    if (n < 2) throw Error("star needs n >= 2");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v, edge_weight(rng, o)});
    return finish(n, std::move(edges), rng, o);
}

WeightedGraph gen_cycle(int n, SplitMix64& rng, const GenOptions& o) {
    if (n < 3) throw Error("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, edge_weight(rng, o)});
    return finish(n, std::move(edges), rng, o);
}

WeightedGraph gen_random_tree(int n, SplitMix64& rng, const GenOptions& o) {
    if (n < 2) throw Error("random-tree needs n >= 2");
    return finish(n, random_tree_edges(n, 0, rng, o), rng, o);
}

WeightedGraph gen_random_forest(int n, SplitMix64& rng, const GenOptions& o) {
    if (n < 2) throw Error("random-forest needs n >= 2");
    const int max_comps = std::min(3, n / 2);
    const int comps = 1 + static_cast<int>(rng.below(max_comps));
    // sizes >= 2 summing to n
    std::vector<int> sizes(comps, 2);
    for (int extra = n - 2 * comps; extra > 0; --extra) ++sizes[rng.below(comps)];
    std::vector<Edge> edges;
    int offset = 0;
    for (int size : sizes) {
        auto part = random_tree_edges(size, offset, rng, o);
        edges.insert(edges.end(), part.begin(), part.end());
        offset += size;
    }
    return finish(n, std::move(edges), rng, o);
}

WeightedGraph gen_random_connected(int n, int beta, SplitMix64& rng, const GenOptions& o) {
    if (n < 2) throw Error("random-connected needs n >= 2");
    const long max_extra = static_cast<long>(n) * (n - 1) / 2 - (n - 1);
    if (beta < 0 || beta > max_extra)
        throw Error("beta out of range for n = " + std::to_string(n));
    auto edges = random_tree_edges(n, 0, rng, o);
    std::set<std::pair<int, int>> present;
    for (const Edge& e : edges) present.insert(std::minmax(e.u, e.v));
    int added = 0;
    while (added < beta) {
        const int u = static_cast<int>(rng.below(n));
        const int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        const auto key = std::minmax(u, v);
        if (!present.insert(key).second) continue;
        edges.push_back({key.first, key.second, edge_weight(rng, o)});
        ++added;
    }
    return finish(n, std::move(edges), rng, o);
}

WeightedGraph gen_unicyclic(int n, SplitMix64& rng, const GenOptions& o) {
    if (n < 3) throw Error("unicyclic needs n >= 3");
    return gen_random_connected(n, 1, rng, o);
}

WeightedGraph generate(const std::string& kind, int n, std::uint64_t seed, const GenOptions& o,
                       int beta) {
    SplitMix64 rng(seed);
    if (kind == "path") return gen_path(n, rng, o);
    if (kind == "star") return gen_star(n, rng, o);
    if (kind == "cycle") return gen_cycle(n, rng, o);
    if (kind == "random-tree") return gen_random_tree(n, rng, o);
    if (kind == "random-forest") return gen_random_forest(n, rng, o);
    if (kind == "unicyclic") return gen_unicyclic(n, rng, o);
    if (kind == "random-connected") return gen_random_connected(n, beta, rng, o);
    throw Error("unknown generator kind: " + kind);
}

}  // namespace cheeger_lab
