#pragma once

#include "cheeger_lab/graph.hpp"

#include <vector>

namespace cheeger_lab {

// Dense per-subset tables used by the exact Cheeger enumerations: for every
// nonempty mask, the exact boundary weight, volume, connectivity flag and an
// integer rank of phi (equal phi-values share a rank). Integer ranks make the
// min/max inner loops cheap; the exact rational is recovered at the end.
//
// Memory is 2^n entries, so construction is restricted to n <= 20; callers
// fall back to direct evaluation above that.
class SubsetTable {
public:
    explicit SubsetTable(const WeightedGraph& g);

    static constexpr int kMaxTableVertices = 20;

    const WeightedGraph& graph() const { return *g_; }
    int n() const { return g_->n(); }

    bool connected(Mask a) const { return connected_[a]; }
    int rank(Mask a) const { return rank_[a]; }
    Rat phi(Mask a) const { return boundary_[a] / volume_[a]; }
    const Rat& boundary(Mask a) const { return boundary_[a]; }
    const Rat& volume(Mask a) const { return volume_[a]; }

    // Exact phi value for a given rank.
    Rat phi_of_rank(int r) const { return phi(rank_rep_[r]); }

    // h(a) = min phi over nonempty subsets of a, as a rank; hmin_witness
    // returns the minimizing subset (deterministic tie-break).
    int hmin_rank(Mask a) const { return hmin_rank_[a]; }
    Mask hmin_witness(Mask a) const { return hmin_wit_[a]; }
    Rat hmin(Mask a) const { return phi_of_rank(hmin_rank_[a]); }

private:
    const WeightedGraph* g_;
    std::vector<Rat> boundary_;
    std::vector<Rat> volume_;
    std::vector<char> connected_;
    std::vector<int> rank_;
    std::vector<Mask> rank_rep_;  // one representative mask per rank
    std::vector<int> hmin_rank_;
    std::vector<Mask> hmin_wit_;
};

}  // namespace cheeger_lab
