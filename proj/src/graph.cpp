#include "cheeger_lab/graph.hpp"

#include "cheeger_lab/errors.hpp"

#include <algorithm>
#include <set>

namespace cheeger_lab {

WeightedGraph::WeightedGraph(int n, std::vector<Rat> mu, std::vector<Edge> edges)
    : n_(n), mu_(std::move(mu)), edges_(std::move(edges)), adj_(n, 0) {
    if (n < 1 || n > kMaxVertices)
        throw ParseError("vertex count must be in 1.." + std::to_string(kMaxVertices));
    if (static_cast<int>(mu_.size()) != n)
        throw ParseError("mu vector size does not match vertex count");
    for (int v = 0; v < n; ++v)
        if (mu_[v] <= 0) throw ParseError("mu must be positive at vertex " + std::to_string(v));
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ParseError("edge endpoint out of range");
        if (e.u == e.v) throw ParseError("self-loops are not allowed");
        if (e.w <= 0) throw ParseError("edge weights must be positive");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) throw ParseError("parallel edge detected");
        adj_[e.u] |= Mask(1) << e.v;
        adj_[e.v] |= Mask(1) << e.u;
    }
}

Rat WeightedGraph::boundary_weight(Mask a) const {
    if (a == 0) throw EmptySetError();
    Rat total = 0;
    for (const Edge& e : edges_) {
        bool iu = (a >> e.u) & 1, iv = (a >> e.v) & 1;
        if (iu != iv) total += e.w;
    }
    return total;
}

Rat WeightedGraph::volume(Mask a) const {
    if (a == 0) throw EmptySetError();
    Rat total = 0;
    for (Mask m = a; m; m &= m - 1) total += mu_[lowest_bit(m)];
    return total;
}

Rat WeightedGraph::expansion(Mask a) const { return boundary_weight(a) / volume(a); }

CutProfile cut_profile(const WeightedGraph& g, Mask a) {
    Rat b = g.boundary_weight(a);
    Rat vol = g.volume(a);
    return CutProfile{b, vol, b / vol};
}

std::vector<Mask> WeightedGraph::connected_components(Mask a) const {
    if (a == 0) throw EmptySetError();
    std::vector<Mask> comps;
    Mask rest = a;
    while (rest) {
        Mask comp = Mask(1) << lowest_bit(rest);
        for (;;) {
            Mask grow = comp;
            for (Mask m = comp; m; m &= m - 1) grow |= adj_[lowest_bit(m)] & a;
            if (grow == comp) break;
            comp = grow;
        }
        comps.push_back(comp);
        rest &= ~comp;
    }
    return comps;  // seeded by ascending lowest bit, so ordered by smallest member
}

bool WeightedGraph::is_connected(Mask a) const {
    if (a == 0) return false;
    Mask comp = Mask(1) << lowest_bit(a);
    for (;;) {
        Mask grow = comp;
        for (Mask m = comp; m; m &= m - 1) grow |= adj_[lowest_bit(m)] & a;
        if (grow == comp) break;
        comp = grow;
    }
    return comp == a;
}

int WeightedGraph::component_count() const {
    return static_cast<int>(connected_components(vertices()).size());
}

int WeightedGraph::betti_number() const {
    return static_cast<int>(edges_.size()) - n_ + component_count();
}

Rat WeightedGraph::weighted_degree(int v) const {
    Rat d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) d += e.w;
    return d;
}

bool WeightedGraph::mu_is_weighted_degree() const {
    for (int v = 0; v < n_; ++v)
        if (mu_[v] != weighted_degree(v)) return false;
    return true;
}

std::vector<Rat> default_mu(int n, const std::vector<Edge>& edges) {
    std::vector<Rat> mu(n, Rat(0));
    for (const Edge& e : edges) {
        mu[e.u] += e.w;
        mu[e.v] += e.w;
    }
    for (int v = 0; v < n; ++v)
        if (mu[v] == 0) throw ZeroMuError(v);
    return mu;
}

}  // namespace cheeger_lab
