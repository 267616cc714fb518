#pragma once

#include "cheeger_lab/combinatorics.hpp"
#include "cheeger_lab/graph.hpp"
#include "cheeger_lab/subset_table.hpp"

#include <optional>
#include <vector>

namespace cheeger_lab {

struct CheegerOptions {
    std::uint64_t budget = kDefaultBudget;
    bool oracle = false;  // unpruned subpartition enumeration (slow cross-check)
};

struct CheegerValue {
    Rat value;
    Subpartition witness;     // optimizing subpartition (h_k, l_k)
    Mask witness_set = 0;     // A (dirichlet paths)
    Mask witness_subset = 0;  // best B subseteq A (dirichlet paths)
    // h_k only: the same minimum computed with max over the union-closed
    // family instead of max over parts agreed exactly.
    bool union_consistent = true;
};

struct ForestCertificate {
    Subpartition subpartition;  // tie-broken optimal subpartition, parts by phi ascending
    std::vector<int> removed;   // exactly k-1 separator vertices
    Mask dirichlet_set;         // V minus removed, size n-k+1
    Rat value;                  // h(dirichlet_set) = h_k
    // True when the subpartition budget forced the direct Dirichlet route;
    // `subpartition` then holds only the h-attaining witness set.
    bool via_dirichlet = false;
};

struct BetaChain {
    Rat h_k;
    std::optional<Rat> l_k;  // absent when over budget (bracket [ll_k, h_k] applies)
    Rat ll_k;
    Rat h_k_minus_beta;  // defined as 0 when k - beta <= 0
    int beta;
    bool ok_h_ge_l;   // vacuously true when l_k is absent
    bool ok_l_ge_ll;  // vacuously true when l_k is absent
    bool ok_ll_ge_hkb;
    bool all_ok() const { return ok_h_ge_l && ok_l_ge_ll && ok_ll_ge_hkb; }
};

// Exact Cheeger-constant computations for one graph. Builds the per-subset
// phi table lazily (n <= 20) and shares it across calls; all methods are
// const and safe for concurrent readers once the table exists (call table()
// up front when sharing across threads).
class CheegerSolver {
public:
    explicit CheegerSolver(const WeightedGraph& g) : g_(&g) {}
    explicit CheegerSolver(WeightedGraph&&) = delete;  // solver only borrows the graph

    const WeightedGraph& graph() const { return *g_; }
    const SubsetTable& table() const;

    // h(A) = min phi over nonempty connected subsets of A, with witness.
    CheegerValue dirichlet_cheeger(Mask a) const;

    // h_k = min over k-part subpartitions of max part phi. Enumeration is
    // pruned to connected parts; opts.oracle re-runs the unpruned stream.
    CheegerValue cheeger_k(int k, const CheegerOptions& opts = {}) const;

    // l_k = max over (n-k+1)-part subpartitions of min phi over the
    // union-closed family.
    CheegerValue maxmin_cheeger(int k, const CheegerOptions& opts = {}) const;

    // ll_k = max over |A| = n-k+1 of h(A).
    CheegerValue dirichlet_k(int k) const;

    ForestCertificate forest_certificate(int k, const CheegerOptions& opts = {}) const;

    BetaChain beta_chain(int k, const CheegerOptions& opts = {}) const;

private:
    const WeightedGraph* g_;
    mutable std::optional<SubsetTable> table_;
};

}  // namespace cheeger_lab
