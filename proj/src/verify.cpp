#include "cheeger_lab/verify.hpp"

#include "cheeger_lab/combinatorics.hpp"
#include "cheeger_lab/errors.hpp"
#include "cheeger_lab/generators.hpp"
#include "cheeger_lab/io.hpp"
#include "cheeger_lab/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace cheeger_lab {

void SuiteResult::merge(const SuiteResult& o) {
    instances += o.instances;
    checks += o.checks;
    failures += o.failures;
    union_failures += o.union_failures;
    p2_failures += o.p2_failures;
    mono_failures += o.mono_failures;
    bracket_failures += o.bracket_failures;
    eigen_failures += o.eigen_failures;
    lk_checked += o.lk_checked;
    strict_gap_instances += o.strict_gap_instances;
    if (first_failure.empty()) first_failure = o.first_failure;
}

int worker_count(int requested) {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap <= 0) cap = 1;
    if (const char* env = std::getenv("CHEEGER_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) cap = std::min(cap, v);
    }
    int n = requested > 0 ? std::min(requested, cap) : cap;
    return std::max(1, n);
}

namespace {

std::uint64_t instance_seed(std::uint64_t suite_seed, std::uint64_t idx) {
    return SplitMix64(suite_seed ^ (idx * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL)).next();
}

std::string repro_text(const std::string& suite, std::uint64_t idx, const WeightedGraph& g,
                       const std::string& detail) {
    std::vector<std::int64_t> ids(g.n());
    std::iota(ids.begin(), ids.end(), 0);
    GraphDoc doc{g, ids, !g.mu_is_weighted_degree()};
    std::ostringstream os;
    os << "suite: " << suite << "\ninstance: " << idx << "\n" << detail << "\n"
       << emit_graph_json(doc) << "\n";
    return os.str();
}

void note_failure(SuiteResult& r, const std::string& suite, std::uint64_t idx,
                  const WeightedGraph& g, const std::string& detail) {
    if (r.first_failure.empty()) r.first_failure = repro_text(suite, idx, g, detail);
}

// Runs fn(i, local) over i in [0, count); counters are merged per worker and
// the surviving first_failure is the one with the smallest instance index.
template <typename Fn>
SuiteResult run_parallel(const std::string& name, std::uint64_t count, const SuiteParams& p,
                         std::ostream* log, Fn&& fn) {
    SuiteResult total;
    total.name = name;
    int nt = worker_count(p.threads);
    if (count == 0) return total;
    nt = static_cast<int>(std::min<std::uint64_t>(nt, count));

    std::vector<SuiteResult> partial(nt);
    std::map<std::uint64_t, std::string> fail_by_idx;
    std::mutex mtx;
    std::atomic<std::uint64_t> cursor{0};

    auto work = [&](int t) {
        for (;;) {
            std::uint64_t i = cursor.fetch_add(1);
            if (i >= count) break;
            SuiteResult local;
            fn(i, local);
            local.instances = 1;
            if (!local.first_failure.empty()) {
                std::lock_guard<std::mutex> lk(mtx);
                fail_by_idx.emplace(i, local.first_failure);
                local.first_failure.clear();
            }
            partial[t].merge(local);
        }
    };

    if (nt == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (int t = 0; t < nt; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    for (auto& part : partial) total.merge(part);
    if (!fail_by_idx.empty()) total.first_failure = fail_by_idx.begin()->second;
    if (log) {
        *log << name << ": " << total.instances << " instances, " << total.checks
             << " checks, " << (total.passed() ? "pass" : "FAIL") << "\n";
    }
    return total;
}

WeightedGraph tree_from_pruefer(int n, const std::vector<int>& code) {
    std::vector<Edge> edges;
    std::vector<int> deg(n, 1);
    for (int c : code) deg[c]++;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, c, Rat(1)});
        if (--deg[c] == 1) leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.push_back({a, b, Rat(1)});
    return WeightedGraph(n, default_mu(n, edges), edges);
}

// k pairwise-disjoint nonempty subsets of {0..n-1} (not necessarily
// covering), canonical order. Requires k <= n.
Subpartition random_subpartition(int n, int k, SplitMix64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    std::vector<Mask> parts(k, 0);
    for (int i = 0; i < k; ++i) parts[i] |= Mask(1) << perm[i];
    for (int i = k; i < n; ++i) {
        int c = rng.range(0, k);  // 0 = leave unused
        if (c > 0) parts[c - 1] |= Mask(1) << perm[i];
    }
    std::sort(parts.begin(), parts.end(),
              [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });
    return parts;
}

const char* eigen_issue(const WeightedGraph& g, const SpectrumReport& s) {
    for (double r : s.residuals)
        if (!(r <= 1e-8)) return "eigenpair residual above 1e-8";
    if (!(s.trace_error <= 1e-8)) return "trace identity off by more than 1e-8";
    if (!s.eigenvalues.empty() && s.eigenvalues.front() < -1e-9)
        return "negative eigenvalue below -1e-9";
    int zeros = 0;
    for (double l : s.eigenvalues)
        if (l < 1e-9) ++zeros;
    if (zeros != g.component_count()) return "zero-eigenvalue multiplicity != component count";
    return nullptr;
}

bool p2_ok(double lambda, const Rat& h_upper, const Rat& h_lower, double slack = 1e-8) {
    double hu = to_double(h_upper);
    double hl = to_double(h_lower);
    return lambda >= hl * hl / 2 - slack && lambda <= 2 * hu + slack;
}

bool mono_ok(double l1, double l2, double slack = 1e-8) {
    bool incr = 2 * l1 <= 2 * std::sqrt(std::max(0.0, 2 * l2)) + slack;
    bool decr = l1 / 2 >= l2 / 4 - slack;
    return incr && decr;
}

// All per-k identity and ride-along checks shared by the forest suites.
void check_forest_instance(const std::string& suite, std::uint64_t idx, const WeightedGraph& g,
                           const SuiteParams& p, SuiteResult& r) {
    CheegerSolver solver(g);
    auto spec = laplacian_spectrum(g);
    r.checks++;
    if (const char* why = eigen_issue(g, spec)) {
        r.eigen_failures++;
        note_failure(r, suite, idx, g, why);
    }
    int n = g.n();
    CheegerOptions ho{p.hk_budget, false};
    Rat prev_h = 0;
    for (int k = 1; k <= n; ++k) {
        CheegerValue hk = solver.cheeger_k(k, ho);
        CheegerValue llk = solver.dirichlet_k(k);
        r.checks += 2;
        if (!hk.union_consistent) {
            r.union_failures++;
            note_failure(r, suite, idx, g, "union-closed h_k disagreed at k=" + std::to_string(k));
        }
        if (hk.value != llk.value) {
            r.failures++;
            note_failure(r, suite, idx, g,
                         "h_k != ll_k at k=" + std::to_string(k) + ": " +
                             to_fraction_string(hk.value) + " vs " + to_fraction_string(llk.value));
        }
        if (hk.value < prev_h) {
            r.failures++;
            note_failure(r, suite, idx, g, "h_k decreased at k=" + std::to_string(k));
        }
        prev_h = hk.value;
        if (labeling_count(n, n - k + 1) <= p.budget) {
            CheegerValue lk = solver.maxmin_cheeger(k, {p.budget, false});
            r.lk_checked++;
            r.checks++;
            if (lk.value != hk.value) {
                r.failures++;
                note_failure(r, suite, idx, g,
                             "l_k != h_k at k=" + std::to_string(k) + ": " +
                                 to_fraction_string(lk.value) + " vs " +
                                 to_fraction_string(hk.value));
            }
        }
        // the bracket collapses iff the identity holds, so count it as its
        // own check
        r.checks++;
        if (hk.value != llk.value) r.bracket_failures++;
        double lambda = spec.eigenvalues[static_cast<std::size_t>(k - 1)];
        r.checks++;
        if (!p2_ok(lambda, hk.value, hk.value)) {
            r.p2_failures++;
            note_failure(r, suite, idx, g,
                         "p=2 Cheeger inequality failed at k=" + std::to_string(k));
        }
        r.checks++;
        if (!mono_ok(to_double(hk.value), lambda)) {
            r.mono_failures++;
            note_failure(r, suite, idx, g,
                         "endpoint monotonicity failed at k=" + std::to_string(k));
        }
    }
}

WeightedGraph mixed_random_graph(SplitMix64& rng, int n_lo, int n_hi, int pick) {
    int n = rng.range(n_lo, n_hi);
    GenOptions opts;
    opts.random_weights = (pick % 2) == 1;
    switch (pick % 3) {
        case 0:
            return gen_random_tree(std::max(n, 2), rng, opts);
        case 1: {
            int nn = std::max(n, 3);
            int max_extra = nn * (nn - 1) / 2 - (nn - 1);
            return gen_random_connected(nn, rng.range(1, std::min(2, max_extra)), rng, opts);
        }
        default:
            return gen_random_forest(std::max(n, 2), rng, opts);
    }
}

}  // namespace

SuiteResult run_forest_identity(const SuiteParams& p, std::ostream* log) {
    struct Item {
        int n;
        bool exhaustive;
        std::uint64_t payload;  // Pruefer code index, or random replicate
    };
    std::vector<Item> items;
    int ex_max = std::min(p.n_max, 7);
    for (int n = 2; n <= ex_max; ++n) {
        std::uint64_t codes = 1;
        for (int t = 0; t < n - 2; ++t) codes *= static_cast<std::uint64_t>(n);
        for (std::uint64_t c = 0; c < codes; ++c) items.push_back({n, true, c});
    }
    for (int n = 2; n <= p.n_max_random; ++n)
        for (int j = 0; j < p.graphs; ++j)
            items.push_back({n, false, static_cast<std::uint64_t>(j)});

    return run_parallel("forest-identity", items.size(), p, log,
                        [&](std::uint64_t i, SuiteResult& r) {
                            const Item& it = items[static_cast<std::size_t>(i)];
                            if (it.exhaustive) {
                                std::vector<int> code(static_cast<std::size_t>(it.n - 2));
                                std::uint64_t c = it.payload;
                                for (auto& d : code) {
                                    d = static_cast<int>(c % static_cast<std::uint64_t>(it.n));
                                    c /= static_cast<std::uint64_t>(it.n);
                                }
                                WeightedGraph g = tree_from_pruefer(it.n, code);
                                check_forest_instance("forest-identity", i, g, p, r);
                            } else {
                                SplitMix64 rng(instance_seed(p.seed, i));
                                GenOptions opts;
                                opts.random_weights = true;
                                WeightedGraph g = gen_random_tree(it.n, rng, opts);
                                check_forest_instance("forest-identity", i, g, p, r);
                            }
                        });
}

SuiteResult run_beta_chain(const SuiteParams& p, std::ostream* log) {
    int n_hi = std::min(p.n_max_random, 8);
    return run_parallel(
        "beta-chain", static_cast<std::uint64_t>(p.graphs), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            GenOptions opts;
            opts.random_weights = (i % 2) == 1;
            int n, beta;
            WeightedGraph g = [&] {
                if (i == 0) return gen_cycle(3, rng);  // known strict h_2 > ll_2 witness
                int nn = rng.range(3, n_hi);
                int max_extra = nn * (nn - 1) / 2 - (nn - 1);
                int b = rng.range(0, std::min(4, max_extra));
                return gen_random_connected(nn, b, rng, opts);
            }();
            n = g.n();
            beta = g.betti_number();

            CheegerSolver solver(g);
            auto spec = laplacian_spectrum(g);
            r.checks++;
            if (const char* why = eigen_issue(g, spec)) {
                r.eigen_failures++;
                note_failure(r, "beta-chain", i, g, why);
            }
            CheegerOptions ho{p.hk_budget, false};
            std::vector<Rat> h(static_cast<std::size_t>(n) + 1);
            std::vector<bool> uni(static_cast<std::size_t>(n) + 1);
            for (int k = 1; k <= n; ++k) {
                CheegerValue v = solver.cheeger_k(k, ho);
                h[static_cast<std::size_t>(k)] = v.value;
                uni[static_cast<std::size_t>(k)] = v.union_consistent;
            }
            bool strict = false;
            for (int k = 1; k <= n; ++k) {
                const Rat& hk = h[static_cast<std::size_t>(k)];
                if (!uni[static_cast<std::size_t>(k)]) {
                    r.union_failures++;
                    note_failure(r, "beta-chain", i, g,
                                 "union-closed h_k disagreed at k=" + std::to_string(k));
                }
                CheegerValue llv = solver.dirichlet_k(k);
                const Rat& llk = llv.value;
                Rat hkb = k - beta <= 0 ? Rat(0) : h[static_cast<std::size_t>(k - beta)];
                r.checks++;
                if (!(hk >= llk && llk >= hkb)) {
                    r.failures++;
                    note_failure(r, "beta-chain", i, g,
                                 "chain h_k >= ll_k >= h_{k-beta} failed at k=" +
                                     std::to_string(k));
                }
                if (labeling_count(n, n - k + 1) <= p.budget) {
                    CheegerValue lk = solver.maxmin_cheeger(k, {p.budget, false});
                    r.lk_checked++;
                    r.checks++;
                    if (!(hk >= lk.value && lk.value >= llk)) {
                        r.failures++;
                        note_failure(r, "beta-chain", i, g,
                                     "chain h_k >= l_k >= ll_k failed at k=" +
                                         std::to_string(k));
                    }
                }
                r.checks++;
                if (!(llk <= hk)) r.bracket_failures++;
                if (g.mu_is_weighted_degree()) {
                    double lambda = spec.eigenvalues[static_cast<std::size_t>(k - 1)];
                    r.checks++;
                    if (!p2_ok(lambda, hk,
                               k - beta <= 0 ? Rat(0) : h[static_cast<std::size_t>(k - beta)])) {
                        r.p2_failures++;
                        note_failure(r, "beta-chain", i, g,
                                     "p=2 beta Cheeger inequality failed at k=" +
                                         std::to_string(k));
                    }
                }
                if (hk > llk) strict = true;
            }
            if (strict) r.strict_gap_instances++;
        });
}

SuiteResult run_union_inv(const SuiteParams& p, std::ostream* log) {
    int n_hi = std::min(p.n_max_random, 8);
    return run_parallel(
        "union-inv", static_cast<std::uint64_t>(p.graphs), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            WeightedGraph g = mixed_random_graph(rng, 2, n_hi, static_cast<int>(i));
            CheegerSolver solver(g);
            CheegerOptions ho{p.hk_budget, false};
            for (int k = 1; k <= g.n(); ++k) {
                CheegerValue hk = solver.cheeger_k(k, ho);
                r.checks++;
                if (!hk.union_consistent) {
                    r.union_failures++;
                    note_failure(r, "union-inv", i, g,
                                 "union-closed h_k disagreed at k=" + std::to_string(k));
                }
                if (g.n() <= 6) {
                    CheegerValue slow = solver.cheeger_k(k, {p.hk_budget, true});
                    r.checks++;
                    if (slow.value != hk.value) {
                        r.failures++;
                        note_failure(r, "union-inv", i, g,
                                     "pruned vs unpruned h_k disagreed at k=" +
                                         std::to_string(k));
                    }
                }
                if (!hk.witness.empty()) {
                    r.checks++;
                    if (!indicator_span_sup_check(g, hk.witness, 12, rng)) {
                        r.failures++;
                        note_failure(r, "union-inv", i, g,
                                     "indicator-span sup check failed at k=" +
                                         std::to_string(k));
                    }
                }
            }
        });
}

SuiteResult run_rounding(const SuiteParams& p, std::ostream* log) {
    return run_parallel(
        "rounding", static_cast<std::uint64_t>(p.vectors), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            // 100 graphs shared round-robin; vectors vary per instance
            SplitMix64 grng(instance_seed(p.seed, i % 100));
            WeightedGraph g =
                mixed_random_graph(grng, 2, p.n_max_random, static_cast<int>(i % 100));
            SplitMix64 rng(instance_seed(p.seed + 0x517cc1b7ULL, i));
            int n = g.n();
            if (i % 2 == 0) {
                VertexVector x(static_cast<std::size_t>(n));
                bool nonzero = false;
                for (auto& v : x) {
                    v = rng.unit() * 2 - 1;
                    if (std::fabs(v) > 1e-12) nonzero = true;
                }
                if (!nonzero) x[0] = 1.0;
                SweepResult sw = sweep_round(g, x);
                r.checks++;
                if (!(to_double(sw.expansion) <= rayleigh(g, x, 1.0) + 1e-12)) {
                    r.failures++;
                    note_failure(r, "rounding", i, g, "phi(B) > Phi_1(x) + 1e-12");
                }
            } else {
                int k = rng.range(1, std::min(n, 8));
                Subpartition sp = random_subpartition(n, k, rng);
                std::vector<Rat> coef(sp.size());
                VertexVector x(static_cast<std::size_t>(n), 0.0);
                for (std::size_t j = 0; j < sp.size(); ++j) {
                    int num = rng.range(1, 8) * (rng.below(2) ? 1 : -1);
                    coef[j] = Rat(num, rng.range(1, 8));
                    for (int v = 0; v < n; ++v)
                        if (sp[j] >> v & 1) x[static_cast<std::size_t>(v)] = to_double(coef[j]);
                }
                SweepResult sw = sweep_round(g, x);
                std::vector<Rat> xr(static_cast<std::size_t>(n), Rat(0));
                for (std::size_t j = 0; j < sp.size(); ++j)
                    for (int v = 0; v < n; ++v)
                        if (sp[j] >> v & 1) xr[static_cast<std::size_t>(v)] = coef[j];
                Rat phi1 = rayleigh1_exact(g, xr);
                r.checks++;
                if (!(sw.expansion <= phi1)) {
                    r.failures++;
                    note_failure(r, "rounding", i, g,
                                 "indicator span: phi(B) > Phi_1(x) exactly");
                }
                auto fam = union_family(sp);
                r.checks++;
                if (std::find(fam.begin(), fam.end(), sw.set) == fam.end()) {
                    r.failures++;
                    note_failure(r, "rounding", i, g, "sweep set not in the union family");
                }
            }
        });
}

SuiteResult run_pigeonhole(const SuiteParams& p, std::ostream* log) {
    return run_parallel(
        "pigeonhole", static_cast<std::uint64_t>(p.pairs), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            int n = rng.range(2, p.n_max_random);
            int k = rng.range(1, n);
            Subpartition a = random_subpartition(n, k, rng);
            Subpartition b = random_subpartition(n, n - k + 1, rng);
            auto [ia, ib] = common_union(a, b, n);
            Mask ua = 0, ub = 0;
            for (int j : ia) ua |= a[static_cast<std::size_t>(j)];
            for (int j : ib) ub |= b[static_cast<std::size_t>(j)];
            WeightedGraph g = gen_path(std::max(n, 2), rng);  // repro carrier only
            r.checks++;
            if (ia.empty() || ib.empty() || ua != ub || ua == 0) {
                r.failures++;
                note_failure(r, "pigeonhole", i, g, "common_union output unions differ");
                return;
            }
            // independent brute force over all union pairs
            std::unordered_set<Mask> fam_a;
            for (Mask m : union_family(a)) fam_a.insert(m);
            bool found = false;
            for (Mask m : union_family(b))
                if (fam_a.count(m)) {
                    found = true;
                    break;
                }
            r.checks++;
            if (!found || !fam_a.count(ua)) {
                r.failures++;
                note_failure(r, "pigeonhole", i, g, "brute-force union cross-check failed");
            }
        });
}

SuiteResult run_cheeger_p2(const SuiteParams& p, std::ostream* log) {
    int n_hi = std::min(p.n_max_random, 8);
    return run_parallel(
        "cheeger-p2", static_cast<std::uint64_t>(p.graphs), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            WeightedGraph g = [&] {
                if (i == 0) return gen_path(2, rng);  // K2 tightness witness
                return mixed_random_graph(rng, 2, n_hi, static_cast<int>(i));
            }();
            CheegerSolver solver(g);
            CheegerOptions ho{p.hk_budget, false};
            for (int k = 1; k <= g.n(); ++k) {
                CheegerAudit audit = cheeger_inequality_audit(solver, k, ho);
                r.checks++;
                if (!audit.ok()) {
                    r.p2_failures++;
                    note_failure(r, "cheeger-p2", i, g,
                                 "p=2 Cheeger inequality failed at k=" + std::to_string(k));
                }
            }
            if (i == 0) {
                // K2: lambda_2 = 2 h_2 = 2 exactly (within float tolerance)
                auto spec = laplacian_spectrum(g);
                r.checks++;
                if (std::fabs(spec.eigenvalues[1] - 2.0) > 1e-9) {
                    r.p2_failures++;
                    note_failure(r, "cheeger-p2", i, g, "K2 tightness lambda_2 != 2 h_2");
                }
            }
        });
}

SuiteResult run_monotonicity(const SuiteParams& p, std::ostream* log) {
    return run_parallel(
        "monotonicity", static_cast<std::uint64_t>(p.graphs), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            int n = rng.range(2, p.n_max_random);
            GenOptions opts;
            opts.random_weights = (i % 2) == 1;
            WeightedGraph g = (i % 3) == 2 ? gen_random_forest(n, rng, opts)
                                           : gen_random_tree(n, rng, opts);
            CheegerSolver solver(g);
            CheegerOptions ho{p.hk_budget, false};
            for (int k = 1; k <= g.n(); ++k) {
                MonotonicityAudit audit = p_monotonicity_audit(solver, k, ho);
                r.checks++;
                if (!audit.ok()) {
                    r.mono_failures++;
                    note_failure(r, "monotonicity", i, g,
                                 "endpoint monotonicity failed at k=" + std::to_string(k));
                }
            }
        });
}

SuiteResult run_intersection(const SuiteParams& p, std::ostream* log) {
    return run_parallel(
        "intersection", static_cast<std::uint64_t>(p.trials), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            int n = rng.range(2, p.n_max_random);
            WeightedGraph g = mixed_random_graph(rng, n, n, static_cast<int>(i));
            n = g.n();
            int k = rng.range(1, n);
            Subpartition sp = random_subpartition(n, k, rng);
            r.checks++;
            if (!subspace_intersection_check(g, sp, 4, rng)) {
                r.failures++;
                note_failure(r, "intersection", i, g, "subspace intersection check failed");
            }
        });
}

SuiteResult run_basic_phi(const SuiteParams& p, std::ostream* log) {
    int n_hi = std::min(p.n_max_random, 8);
    return run_parallel(
        "basic-phi", static_cast<std::uint64_t>(p.graphs), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            WeightedGraph g = mixed_random_graph(rng, 2, n_hi, static_cast<int>(i));
            SubsetTable t(g);
            int n = g.n();
            Mask all = full_mask(n);
            std::vector<Mask> adj_of(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) adj_of[static_cast<std::size_t>(v)] = g.adjacency(v);
            for (Mask a = 1; a <= all; ++a) {
                Mask rest = all & ~a;
                Mask nbr = 0;
                for (int v = 0; v < n; ++v)
                    if (a >> v & 1) nbr |= adj_of[static_cast<std::size_t>(v)];
                for (Mask b = rest; b; b = (b - 1) & rest) {
                    int ru = t.rank(a | b);
                    int ra = t.rank(a);
                    int rb = t.rank(b);
                    r.checks++;
                    if (ru > std::max(ra, rb)) {
                        r.failures++;
                        note_failure(r, "basic-phi", i, g,
                                     "phi(A|B) > max(phi(A), phi(B)) for disjoint A, B");
                        return;
                    }
                    if ((nbr & b) == 0 && ru < std::min(ra, rb)) {
                        r.failures++;
                        note_failure(r, "basic-phi", i, g,
                                     "phi(A|B) < min(phi(A), phi(B)) with no cross edges");
                        return;
                    }
                }
            }
        });
}

SuiteResult run_disjoint_h(const SuiteParams& p, std::ostream* log) {
    int n_hi = std::min(p.n_max_random, 8);
    return run_parallel(
        "disjoint-h", static_cast<std::uint64_t>(p.graphs), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            WeightedGraph g = mixed_random_graph(rng, 2, n_hi, static_cast<int>(i));
            SubsetTable t(g);
            int n = g.n();
            bool bad = false;
            for (int k = 2; k <= std::min(n, 3) && !bad; ++k) {
                for_each_subpartition(n, k, p.hk_budget, [&](const Subpartition& sp) {
                    Mask uni = 0;
                    int minr = INT_MAX;
                    bool nonadj = true;
                    for (Mask part : sp) {
                        uni |= part;
                        minr = std::min(minr, t.hmin_rank(part));
                    }
                    for (std::size_t x = 0; x < sp.size() && nonadj; ++x) {
                        Mask nbr = 0;
                        for (int v = 0; v < n; ++v)
                            if (sp[x] >> v & 1) nbr |= g.adjacency(v);
                        for (std::size_t y = x + 1; y < sp.size(); ++y)
                            if (nbr & sp[y]) nonadj = false;
                    }
                    r.checks++;
                    int hu = t.hmin_rank(uni);
                    if (hu > minr || (nonadj && hu != minr)) {
                        r.failures++;
                        note_failure(r, "disjoint-h", i, g,
                                     nonadj ? "h(union) != min h(B_i) for nonadjacent parts"
                                            : "h(union) > min h(B_i)");
                        bad = true;
                        return false;
                    }
                    return true;
                });
            }
        });
}

SuiteResult run_certificates(const SuiteParams& p, std::ostream* log) {
    return run_parallel(
        "certificates", static_cast<std::uint64_t>(p.graphs), p, log,
        [&](std::uint64_t i, SuiteResult& r) {
            SplitMix64 rng(instance_seed(p.seed, i));
            int n = rng.range(2, std::min(p.n_max_random + 2, 12));
            GenOptions opts;
            opts.random_weights = (i % 2) == 1;
            WeightedGraph g = (i % 3) == 0 ? gen_random_forest(n, rng, opts)
                                           : gen_random_tree(n, rng, opts);
            n = g.n();
            CheegerSolver solver(g);
            const SubsetTable& t = solver.table();
            for (int k = 1; k <= n; ++k) {
                ForestCertificate cert = solver.forest_certificate(k, {p.budget, false});
                Rat hk = solver.dirichlet_k(k).value;  // = h_k on forests
                if (n <= 8) {
                    Rat direct = solver.cheeger_k(k, {p.hk_budget, false}).value;
                    r.checks++;
                    if (direct != hk) {
                        r.failures++;
                        note_failure(r, "certificates", i, g,
                                     "ll_k != h_k on a forest at k=" + std::to_string(k));
                    }
                }
                bool shape = static_cast<int>(cert.removed.size()) <= k - 1 &&
                             popcount(cert.dirichlet_set) == n - k + 1;
                Mask removed_mask = 0;
                for (int v : cert.removed) removed_mask |= Mask(1) << v;
                shape = shape && (cert.dirichlet_set | removed_mask) == g.vertices() &&
                        (cert.dirichlet_set & removed_mask) == 0;
                r.checks++;
                if (!shape) {
                    r.failures++;
                    note_failure(r, "certificates", i, g,
                                 "certificate shape invalid at k=" + std::to_string(k));
                    continue;
                }
                r.checks++;
                if (cert.value != hk || t.hmin(cert.dirichlet_set) != hk) {
                    r.failures++;
                    note_failure(r, "certificates", i, g,
                                 "h(dirichlet_set) != h_k at k=" + std::to_string(k));
                }
            }
        });
}

std::vector<std::string> suite_names() {
    return {"forest-identity", "beta-chain", "union-inv",   "rounding",  "cheeger-p2",
            "monotonicity",    "pigeonhole", "intersection", "basic-phi", "disjoint-h"};
}

SuiteResult run_suite(const std::string& name, const SuiteParams& p, std::ostream* log) {
    if (name == "forest-identity") return run_forest_identity(p, log);
    if (name == "beta-chain") return run_beta_chain(p, log);
    if (name == "union-inv") return run_union_inv(p, log);
    if (name == "rounding") return run_rounding(p, log);
    if (name == "cheeger-p2") return run_cheeger_p2(p, log);
    if (name == "monotonicity") return run_monotonicity(p, log);
    if (name == "pigeonhole") return run_pigeonhole(p, log);
    if (name == "intersection") return run_intersection(p, log);
    if (name == "basic-phi") return run_basic_phi(p, log);
    if (name == "disjoint-h") return run_disjoint_h(p, log);
    if (name == "certificates") return run_certificates(p, log);
    throw NotSupportedError("unknown suite: " + name);
}

}  // namespace cheeger_lab
