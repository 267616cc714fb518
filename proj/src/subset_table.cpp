#include "cheeger_lab/subset_table.hpp"

#include "cheeger_lab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace cheeger_lab {

SubsetTable::SubsetTable(const WeightedGraph& g) : g_(&g) {
    const int n = g.n();
    if (n > kMaxTableVertices)
        throw NotSupportedError("subset table limited to n <= " +
                                std::to_string(kMaxTableVertices));
    const std::size_t size = std::size_t(1) << n;

    // per-vertex incident (neighbor, weight) lists
    std::vector<std::vector<std::pair<int, const Rat*>>> inc(n);
    for (const Edge& e : g.edges()) {
        inc[e.u].emplace_back(e.v, &e.w);
        inc[e.v].emplace_back(e.u, &e.w);
    }

    boundary_.assign(size, Rat(0));
    volume_.assign(size, Rat(0));
    connected_.assign(size, 0);
    for (Mask m = 1; m < size; ++m) {
        const int v = lowest_bit(m);
        const Mask rest = m & (m - 1);
        // adding v to rest: edges v-rest flip from boundary to interior
        Rat b = boundary_[rest];
        for (auto& [u, w] : inc[v]) {
            if ((rest >> u) & 1)
                b -= *w;
            else
                b += *w;
        }
        boundary_[m] = std::move(b);
        volume_[m] = volume_[rest] + g.mu()[v];
        connected_[m] = g.is_connected(m) ? 1 : 0;
    }

    // phi ranks via exact cross-multiplied comparison
    std::vector<Mask> order(size - 1);
    std::iota(order.begin(), order.end(), Mask(1));
    auto cmp = [&](Mask a, Mask b) {
        return boundary_[a] * volume_[b] < boundary_[b] * volume_[a];
    };
    std::sort(order.begin(), order.end(), cmp);
    rank_.assign(size, 0);
    rank_rep_.clear();
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || cmp(order[i - 1], order[i])) rank_rep_.push_back(order[i]);
        rank_[order[i]] = static_cast<int>(rank_rep_.size()) - 1;
    }

    // h(A) = min phi over nonempty subsets; removing one vertex at a time
    // reaches every subset, so a single ascending pass suffices.
    hmin_rank_.assign(size, 0);
    hmin_wit_.assign(size, 0);
    for (Mask m = 1; m < size; ++m) {
        int best = rank_[m];
        Mask wit = m;
        for (Mask t = m; t; t &= t - 1) {
            const Mask sub = m ^ (t & -t);
            if (sub && hmin_rank_[sub] < best) {
                best = hmin_rank_[sub];
                wit = hmin_wit_[sub];
            }
        }
        hmin_rank_[m] = best;
        hmin_wit_[m] = wit;
    }
}

}  // namespace cheeger_lab
