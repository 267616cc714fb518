#include "cheeger_lab/combinatorics.hpp"

#include "cheeger_lab/errors.hpp"

#include <algorithm>

namespace cheeger_lab {

bool is_valid_subpartition(const Subpartition& sp, int n) {
    if (sp.empty()) return false;
    Mask seen = 0;
    for (Mask part : sp) {
        if (part == 0) return false;
        if (part & ~full_mask(n)) return false;
        if (part & seen) return false;
        seen |= part;
    }
    return true;
}

bool is_canonical_subpartition(const Subpartition& sp) {
    for (std::size_t i = 1; i < sp.size(); ++i)
        if (lowest_bit(sp[i - 1]) >= lowest_bit(sp[i])) return false;
    return true;
}

std::vector<Mask> union_family(const Subpartition& sp) {
    const int k = static_cast<int>(sp.size());
    std::vector<Mask> fam;
    fam.reserve((std::size_t(1) << k) - 1);
    for (Mask sel = 1; sel < (Mask(1) << k); ++sel) {
        Mask u = 0;
        for (Mask t = sel; t; t &= t - 1) u |= sp[lowest_bit(t)];
        fam.push_back(u);
    }
    return fam;
}

std::uint64_t labeling_count(int n, int k) {
    unsigned __int128 r = 1;
    for (int i = 0; i < n; ++i) {
        r *= static_cast<unsigned>(k + 1);
        if (r > ~std::uint64_t(0)) return ~std::uint64_t(0);
    }
    return static_cast<std::uint64_t>(r);
}

namespace {

// Restricted-growth labeling: vertex v gets label 0 (unused) or 1..used+1,
// capped at k; exactly k classes must be used at the end.
bool rgs_rec(int n, int k, int v, int used, std::vector<Mask>& parts,
             const std::function<bool(const Subpartition&)>& visit) {
    if (used + (n - v) < k) return true;  // cannot reach k parts
    if (v == n) {
        return used == k ? visit(parts) : true;
    }
    const Mask bit = Mask(1) << v;
    // label 0: vertex unused
    if (!rgs_rec(n, k, v + 1, used, parts, visit)) return false;
    // existing classes
    for (int c = 0; c < used; ++c) {
        parts[c] |= bit;
        bool cont = rgs_rec(n, k, v + 1, used, parts, visit);
        parts[c] &= ~bit;
        if (!cont) return false;
    }
    // new class
    if (used < k) {
        parts.push_back(bit);
        bool cont = rgs_rec(n, k, v + 1, used + 1, parts, visit);
        parts.pop_back();
        if (!cont) return false;
    }
    return true;
}

}  // namespace

void for_each_subpartition(int n, int k, std::uint64_t budget,
                           const std::function<bool(const Subpartition&)>& visit) {
    if (k < 1 || k > n) return;
    const std::uint64_t count = labeling_count(n, k);
    if (count > budget) throw BudgetExceededError(count, budget);
    std::vector<Mask> parts;
    parts.reserve(k);
    rgs_rec(n, k, 0, 0, parts, visit);
}

namespace {

// Connected supersets of S within `allowed`; ext = frontier candidates,
// forb = vertices excluded by earlier branches (uniqueness).
bool grow_rec(const WeightedGraph& g, Mask allowed, Mask S, Mask ext, Mask forb,
              const std::function<bool(Mask)>& visit) {
    if (!visit(S)) return false;
    Mask e = ext;
    while (e) {
        const Mask ub = e & (~e + 1);
        const int u = lowest_bit(e);
        e ^= ub;
        const Mask add = g.adjacency(u) & allowed & ~(S | ub) & ~forb & ~e;
        if (!grow_rec(g, allowed, S | ub, e | add, forb, visit)) return false;
        forb |= ub;
    }
    return true;
}

bool connected_sets_from_anchor(const WeightedGraph& g, int anchor, Mask allowed,
                                const std::function<bool(Mask)>& visit) {
    const Mask a = Mask(1) << anchor;
    return grow_rec(g, allowed, a, g.adjacency(anchor) & allowed & ~a, 0, visit);
}

bool connected_sp_rec(const WeightedGraph& g, int k, Mask pool, int last_anchor,
                      std::vector<Mask>& parts,
                      const std::function<bool(const Subpartition&)>& visit) {
    if (static_cast<int>(parts.size()) == k) return visit(parts);
    const int need = k - static_cast<int>(parts.size());
    Mask anchors = pool & ~full_mask(last_anchor + 1);
    while (anchors) {
        if (popcount(anchors) < need) break;
        const int a = lowest_bit(anchors);
        anchors &= anchors - 1;
        // the part's minimum is its anchor, so it may only use pool vertices >= a
        const Mask allowed = pool & ~full_mask(a);
        bool cont = connected_sets_from_anchor(g, a, allowed, [&](Mask part) {
            parts.push_back(part);
            bool c = connected_sp_rec(g, k, pool & ~part, a, parts, visit);
            parts.pop_back();
            return c;
        });
        if (!cont) return false;
    }
    return true;
}

}  // namespace

void for_each_connected_subpartition(const WeightedGraph& g, int k, std::uint64_t budget,
                                     const std::function<bool(const Subpartition&)>& visit) {
    if (k < 1 || k > g.n()) return;
    const std::uint64_t count = labeling_count(g.n(), k);
    if (count > budget) throw BudgetExceededError(count, budget);
    std::vector<Mask> parts;
    parts.reserve(k);
    connected_sp_rec(g, k, g.vertices(), -1, parts, visit);
}

void for_each_connected_subset(const WeightedGraph& g, Mask a,
                               const std::function<bool(Mask)>& visit) {
    if (a == 0) throw EmptySetError();
    for (Mask rest = a; rest;) {
        const int anchor = lowest_bit(rest);
        rest &= rest - 1;
        if (!connected_sets_from_anchor(g, anchor, a & ~full_mask(anchor), visit)) return;
    }
}

std::vector<Mask> enumerate_connected_subsets(const WeightedGraph& g, Mask a) {
    std::vector<Mask> out;
    for_each_connected_subset(g, a, [&](Mask s) {
        out.push_back(s);
        return true;
    });
    return out;
}

namespace {

struct Tagged {
    Mask set;
    int family;  // 0 = a, 1 = b
    int index;
};

std::pair<std::vector<int>, std::vector<int>> common_union_rec(std::vector<Tagged> items) {
    Mask ua = 0, ub = 0;
    for (const Tagged& t : items) (t.family == 0 ? ua : ub) |= t.set;
    if (ua == 0 || ub == 0) throw InternalError("common_union: a family became empty");
    if (ua == ub) {
        std::pair<std::vector<int>, std::vector<int>> out;
        for (const Tagged& t : items) (t.family == 0 ? out.first : out.second).push_back(t.index);
        return out;
    }
    const Mask c = ua & ub;
    std::vector<Tagged> inner;
    for (const Tagged& t : items)
        if ((t.set & ~c) == 0) inner.push_back(t);
    if (static_cast<int>(inner.size()) < popcount(c) + 1)
        throw InternalError("common_union: induction invariant violated");
    return common_union_rec(std::move(inner));
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> common_union(const Subpartition& a,
                                                           const Subpartition& b, int n) {
    if (!is_valid_subpartition(a, n) || !is_valid_subpartition(b, n))
        throw InternalError("common_union: invalid subpartition input");
    if (static_cast<int>(a.size() + b.size()) != n + 1)
        throw InternalError("common_union: sizes must be k and n-k+1");
    std::vector<Tagged> items;
    for (std::size_t i = 0; i < a.size(); ++i) items.push_back({a[i], 0, static_cast<int>(i)});
    for (std::size_t j = 0; j < b.size(); ++j) items.push_back({b[j], 1, static_cast<int>(j)});
    auto out = common_union_rec(std::move(items));
    // sanity: the two unions must be exactly equal
    Mask x = 0, y = 0;
    for (int i : out.first) x |= a[i];
    for (int j : out.second) y |= b[j];
    if (x != y || x == 0) throw InternalError("common_union: construction failed");
    return out;
}

}  // namespace cheeger_lab
