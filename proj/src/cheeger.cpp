#include "cheeger_lab/cheeger.hpp"

#include "cheeger_lab/errors.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace cheeger_lab {

namespace {

void require_k_range(int k, int n) {
    if (k < 1 || k > n)
        throw Error("k must be in 1.." + std::to_string(n) + ", got " + std::to_string(k));
}

// Best (lowest-phi) connected component of `a`; ties by enumeration order.
Mask best_connected_component(const SubsetTable& t, Mask a) {
    auto comps = t.graph().connected_components(a);
    Mask best = comps.front();
    for (Mask c : comps)
        if (t.rank(c) < t.rank(best)) best = c;
    return best;
}

}  // namespace

const SubsetTable& CheegerSolver::table() const {
    if (!table_) table_.emplace(*g_);
    return *table_;
}

CheegerValue CheegerSolver::dirichlet_cheeger(Mask a) const {
    if (a == 0) throw EmptySetError();
    if (g_->n() <= SubsetTable::kMaxTableVertices) {
        const SubsetTable& t = table();
        Mask wit = t.hmin_witness(a);
        if (!t.connected(wit)) wit = best_connected_component(t, wit);
        return CheegerValue{t.hmin(a), {}, a, wit};
    }
    // direct path for n > 20
    Rat bestB, bestV;
    Mask wit = 0;
    for_each_connected_subset(*g_, a, [&](Mask s) {
        Rat b = g_->boundary_weight(s), v = g_->volume(s);
        if (wit == 0 || b * bestV < bestB * v) {
            bestB = std::move(b);
            bestV = std::move(v);
            wit = s;
        }
        return true;
    });
    return CheegerValue{bestB / bestV, {}, a, wit};
}

CheegerValue CheegerSolver::cheeger_k(int k, const CheegerOptions& opts) const {
    const int n = g_->n();
    require_k_range(k, n);
    const std::uint64_t count = labeling_count(n, k);
    if (count > opts.budget) throw BudgetExceededError(count, opts.budget);
    if (k == 1) {
        CheegerValue v = dirichlet_cheeger(g_->vertices());
        v.witness = {v.witness_subset};
        v.witness_set = 0;
        v.witness_subset = 0;
        return v;
    }
    const SubsetTable& t = table();

    const bool dual = k <= 12;  // union-family recompute per subpartition
    std::vector<Mask> uni(dual ? (std::size_t(1) << k) : 0, 0);

    int best_max = INT_MAX;
    int best_union_max = INT_MAX;
    Subpartition witness;
    auto visit = [&](const Subpartition& parts) {
        int mx = 0;
        for (Mask p : parts) mx = std::max(mx, t.rank(p));
        if (mx < best_max) {
            best_max = mx;
            witness = parts;
        }
        if (dual) {
            int umx = 0;
            for (Mask sel = 1; sel < (Mask(1) << k); ++sel) {
                uni[sel] = uni[sel & (sel - 1)] | parts[lowest_bit(sel)];
                umx = std::max(umx, t.rank(uni[sel]));
            }
            best_union_max = std::min(best_union_max, umx);
        }
        return true;
    };
    if (opts.oracle)
        for_each_subpartition(n, k, opts.budget, visit);
    else
        for_each_connected_subpartition(*g_, k, opts.budget, visit);
    if (best_max == INT_MAX) throw InternalError("cheeger_k: empty enumeration");

    bool consistent;
    if (dual) {
        consistent = (best_union_max == best_max);
    } else {
        // witness-only check
        Rat mx = 0;
        for (Mask u : union_family(witness)) mx = std::max(mx, t.phi(u));
        consistent = (mx == t.phi_of_rank(best_max));
    }
    return CheegerValue{t.phi_of_rank(best_max), witness, 0, 0, consistent};
}

CheegerValue CheegerSolver::maxmin_cheeger(int k, const CheegerOptions& opts) const {
    const int n = g_->n();
    require_k_range(k, n);
    const int m = n - k + 1;
    const std::uint64_t count = labeling_count(n, m);
    if (count > opts.budget) throw BudgetExceededError(count, opts.budget);
    const SubsetTable& t = table();

    std::vector<Mask> uni(std::size_t(1) << m, 0);
    int best_min = -1;
    Subpartition witness;
    for_each_subpartition(n, m, opts.budget, [&](const Subpartition& parts) {
        int mn = INT_MAX;
        const Mask top = Mask(1) << parts.size();
        for (Mask sel = 1; sel < top; ++sel) {
            uni[sel] = uni[sel & (sel - 1)] | parts[lowest_bit(sel)];
            mn = std::min(mn, t.rank(uni[sel]));
        }
        if (mn > best_min) {
            best_min = mn;
            witness = parts;
        }
        return true;
    });
    if (best_min < 0) throw InternalError("maxmin_cheeger: empty enumeration");
    return CheegerValue{t.phi_of_rank(best_min), witness};
}

CheegerValue CheegerSolver::dirichlet_k(int k) const {
    const int n = g_->n();
    require_k_range(k, n);
    const int m = n - k + 1;
    if (n > SubsetTable::kMaxTableVertices) {
        // direct path: Gosper over all size-m subsets
        CheegerValue best;
        bool first = true;
        for (Mask a = full_mask(m);;) {
            CheegerValue h = dirichlet_cheeger(a);
            if (first || h.value > best.value) {
                best = h;
                first = false;
            }
            // next mask with the same popcount
            Mask c = a & (~a + 1), r = a + c;
            a = (((r ^ a) >> 2) / c) | r;
            if (a > full_mask(n)) break;
        }
        return best;
    }
    const SubsetTable& t = table();
    int best = -1;
    Mask best_a = 0;
    for (Mask a = full_mask(m);;) {
        if (t.hmin_rank(a) > best) {
            best = t.hmin_rank(a);
            best_a = a;
        }
        Mask c = a & (~a + 1), r = a + c;
        a = (((r ^ a) >> 2) / c) | r;
        if (m == n || a > full_mask(n)) break;
    }
    Mask wit = t.hmin_witness(best_a);
    if (!t.connected(wit)) wit = best_connected_component(t, wit);
    return CheegerValue{t.phi_of_rank(best), {}, best_a, wit};
}

namespace {

// Pairwise nonadjacency of a family of disjoint sets (empty sets ignored).
bool pairwise_nonadjacent(const WeightedGraph& g, const std::vector<Mask>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i] == 0) continue;
        Mask nb = 0;
        for (Mask m = sets[i]; m; m &= m - 1) nb |= g.adjacency(lowest_bit(m));
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (nb & sets[j]) return false;
    }
    return true;
}

// One separator vertex per part in `parts`; sets to separate are the trimmed
// parts plus `rest`. Returns true and fills `chosen` on success. Candidates
// tried in ascending vertex id, so the result is deterministic.
bool find_separators(const WeightedGraph& g, const std::vector<Mask>& parts, Mask rest,
                     std::size_t i, std::vector<int>& chosen, std::vector<Mask>& trimmed) {
    if (i == parts.size()) {
        std::vector<Mask> sets = trimmed;
        sets.push_back(rest);
        return pairwise_nonadjacent(g, sets);
    }
    for (Mask m = parts[i]; m; m &= m - 1) {
        const int v = lowest_bit(m);
        trimmed[i] = parts[i] & ~(Mask(1) << v);
        // early prune: the first i+1 trimmed sets and rest must be consistent
        std::vector<Mask> sofar(trimmed.begin(), trimmed.begin() + i + 1);
        sofar.push_back(rest);
        if (!pairwise_nonadjacent(g, sofar)) continue;
        chosen[i] = v;
        if (find_separators(g, parts, rest, i + 1, chosen, trimmed)) return true;
    }
    return false;
}

}  // namespace

ForestCertificate CheegerSolver::forest_certificate(int k, const CheegerOptions& opts) const {
    const int n = g_->n();
    require_k_range(k, n);
    if (!g_->is_forest()) throw NotAForestError();

    const std::uint64_t count = labeling_count(n, k);
    if (count <= opts.budget && n <= SubsetTable::kMaxTableVertices) {
        const SubsetTable& t = table();

        // Chain-optimal subpartition: minimize max phi, then the number of
        // parts attaining the max, then total volume; ties resolved by the
        // deterministic enumeration order.
        int best_max = INT_MAX;
        int best_f = INT_MAX;
        Rat best_vol;
        Subpartition best;
        for_each_connected_subpartition(*g_, k, opts.budget, [&](const Subpartition& parts) {
            int mx = 0;
            for (Mask p : parts) mx = std::max(mx, t.rank(p));
            if (mx > best_max) return true;
            int f = 0;
            for (Mask p : parts)
                if (t.rank(p) == mx) ++f;
            Rat vol = 0;
            for (Mask p : parts) vol += t.volume(p);
            if (mx < best_max || f < best_f || (f == best_f && vol < best_vol)) {
                best_max = mx;
                best_f = f;
                best_vol = std::move(vol);
                best = parts;
            }
            return true;
        });
        if (best.empty()) throw InternalError("forest_certificate: empty enumeration");

        std::stable_sort(best.begin(), best.end(),
                         [&](Mask a, Mask b) { return t.rank(a) < t.rank(b); });

        if (k == 1)
            return ForestCertificate{best, {}, g_->vertices(), t.hmin(g_->vertices()), false};

        // Keep one max-attaining part whole and remove one vertex from each
        // other part; prefer keeping the last (max-phi) part.
        std::vector<int> keep_order;
        for (int i = k - 1; i >= 0; --i)
            if (t.rank(best[i]) == best_max) keep_order.push_back(i);
        for (int i = k - 1; i >= 0; --i)
            if (t.rank(best[i]) != best_max) keep_order.push_back(i);
        for (int keep : keep_order) {
            std::vector<Mask> parts;
            for (int i = 0; i < k; ++i)
                if (i != keep) parts.push_back(best[i]);
            Mask uni = 0;
            for (Mask p : parts) uni |= p;
            const Mask rest = g_->vertices() & ~uni;
            std::vector<int> chosen(parts.size());
            std::vector<Mask> trimmed(parts.size());
            if (!find_separators(*g_, parts, rest, 0, chosen, trimmed)) continue;
            Mask removed_mask = 0;
            for (int v : chosen) removed_mask |= Mask(1) << v;
            const Mask a = g_->vertices() & ~removed_mask;
            if (t.hmin_rank(a) != best_max) continue;  // must reproduce h_k exactly
            std::sort(chosen.begin(), chosen.end());
            return ForestCertificate{best, chosen, a, t.phi_of_rank(best_max), false};
        }
        // fall through to the Dirichlet route (not expected on forests)
    }

    // Dirichlet route: ll_k = h_k on forests, so the optimal size-(n-k+1)
    // set is itself the certificate; removed = its complement.
    CheegerValue d = dirichlet_k(k);
    std::vector<int> removed;
    for (Mask m = g_->vertices() & ~d.witness_set; m; m &= m - 1)
        removed.push_back(lowest_bit(m));
    return ForestCertificate{{d.witness_subset}, removed, d.witness_set, d.value, true};
}

BetaChain CheegerSolver::beta_chain(int k, const CheegerOptions& opts) const {
    require_k_range(k, g_->n());
    BetaChain out;
    out.beta = g_->betti_number();
    out.h_k = cheeger_k(k, opts).value;
    try {
        out.l_k = maxmin_cheeger(k, opts).value;
    } catch (const BudgetExceededError&) {
        out.l_k = std::nullopt;
    }
    out.ll_k = dirichlet_k(k).value;
    const int j = k - out.beta;
    out.h_k_minus_beta = j <= 0 ? Rat(0) : cheeger_k(j, opts).value;
    out.ok_h_ge_l = !out.l_k || out.h_k >= *out.l_k;
    out.ok_l_ge_ll = !out.l_k || *out.l_k >= out.ll_k;
    out.ok_ll_ge_hkb = out.ll_k >= out.h_k_minus_beta;
    return out;
}

}  // namespace cheeger_lab
