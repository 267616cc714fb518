#pragma once

#include "cheeger_lab/graph.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace cheeger_lab {

// Ordered tuple of pairwise-disjoint nonempty vertex sets. Canonical form:
// parts sorted by smallest member.
using Subpartition = std::vector<Mask>;

bool is_valid_subpartition(const Subpartition& sp, int n);
bool is_canonical_subpartition(const Subpartition& sp);

// All 2^k - 1 nonempty unions of the parts, in subset-index order
// (index set {i1<...<iq} enumerated as masks 1..2^k-1).
std::vector<Mask> union_family(const Subpartition& sp);

// (k+1)^n saturated at 2^64-1; the labeling budget measure.
std::uint64_t labeling_count(int n, int k);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Visits every k-part subpartition of {0..n-1} exactly once in canonical
// form, as a restricted-growth labeling (label 0 = unused, classes numbered
// by first appearance). The callback returns false to stop early.
// Throws BudgetExceeded when (k+1)^n exceeds the budget.
void for_each_subpartition(int n, int k, std::uint64_t budget,
                           const std::function<bool(const Subpartition&)>& visit);

// Same stream, restricted to subpartitions whose parts are all connected in
// g. Enumerated directly by growing connected parts from increasing anchor
// vertices, so the cost is proportional to the pruned stream. The same
// (k+1)^n budget precondition applies.
void for_each_connected_subpartition(const WeightedGraph& g, int k, std::uint64_t budget,
                                     const std::function<bool(const Subpartition&)>& visit);

// Every nonempty connected subset of the induced subgraph on `a`, exactly
// once, grown from each minimal vertex; deterministic order.
void for_each_connected_subset(const WeightedGraph& g, Mask a,
                               const std::function<bool(Mask)>& visit);

std::vector<Mask> enumerate_connected_subsets(const WeightedGraph& g, Mask a);

// Constructive common-union pigeonhole: given subpartitions of the same
// ground set with sizes k and n-k+1, returns index sets (into each) whose
// part unions are equal, by strong induction on the common intersection.
std::pair<std::vector<int>, std::vector<int>> common_union(const Subpartition& a,
                                                           const Subpartition& b, int n);

}  // namespace cheeger_lab
