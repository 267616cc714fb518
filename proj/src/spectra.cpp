#include "cheeger_lab/spectra.hpp"

#include "cheeger_lab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cheeger_lab {

double rayleigh(const WeightedGraph& g, const VertexVector& x, double p) {
    if (static_cast<int>(x.size()) != g.n()) throw Error("vector length mismatch");
    if (p < 1.0) throw Error("p must be >= 1");
    double num = 0, den = 0;
    for (const Edge& e : g.edges())
        num += to_double(e.w) * std::pow(std::abs(x[e.u] - x[e.v]), p);
    for (int v = 0; v < g.n(); ++v) den += to_double(g.mu()[v]) * std::pow(std::abs(x[v]), p);
    if (den == 0) throw ZeroVectorError();
    return num / den;
}

Rat rayleigh1_exact(const WeightedGraph& g, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != g.n()) throw Error("vector length mismatch");
    Rat num = 0, den = 0;
    for (const Edge& e : g.edges()) {
        Rat d = x[e.u] - x[e.v];
        num += e.w * (d < 0 ? -d : d);
    }
    for (int v = 0; v < g.n(); ++v) den += g.mu()[v] * (x[v] < 0 ? -x[v] : x[v]);
    if (den == 0) throw ZeroVectorError();
    return num / den;
}

namespace {

// Cyclic Jacobi on a symmetric matrix; A is overwritten with the diagonalized
// form, V accumulates the rotations (columns are eigenvectors).
void jacobi(std::vector<double>& a, std::vector<double>& v, int n, double tol) {
    auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
    auto vt = [&](int i, int j) -> double& { return v[i * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vt(i, j) = (i == j) ? 1.0 : 0.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2 * at(i, j) * at(i, j);
        if (std::sqrt(off) < tol) return;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = vt(i, p), viq = vt(i, q);
                    vt(i, p) = c * vip - s * viq;
                    vt(i, q) = s * vip + c * viq;
                }
            }
        }
    }
}

}  // namespace

SpectrumReport laplacian_spectrum(const WeightedGraph& g, double tolerance) {
    if (tolerance <= 0) throw Error("tolerance must be positive");
    const int n = g.n();
    std::vector<double> mu(n), isq(n);
    for (int v = 0; v < n; ++v) {
        mu[v] = to_double(g.mu()[v]);
        isq[v] = 1.0 / std::sqrt(mu[v]);
    }
    // L entries (combinatorial Laplacian of w)
    std::vector<double> lap(n * n, 0.0);
    for (const Edge& e : g.edges()) {
        const double w = to_double(e.w);
        lap[e.u * n + e.u] += w;
        lap[e.v * n + e.v] += w;
        lap[e.u * n + e.v] -= w;
        lap[e.v * n + e.u] -= w;
    }
    std::vector<double> b(n * n), vec(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i * n + j] = lap[i * n + j] * isq[i] * isq[j];
    double trace = 0;
    for (int i = 0; i < n; ++i) trace += b[i * n + i];

    jacobi(b, vec, n, tolerance);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return b[i * n + i] < b[j * n + j]; });

    SpectrumReport rep;
    rep.tolerance = tolerance;
    double sum = 0;
    for (int oi = 0; oi < n; ++oi) {
        const int col = order[oi];
        const double lambda = b[col * n + col];
        rep.eigenvalues.push_back(lambda);
        sum += lambda;
        // x = M^{-1/2} y ; residual of L x = lambda M x
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = vec[i * n + col] * isq[i];
        double r2 = 0;
        for (int i = 0; i < n; ++i) {
            double r = -lambda * mu[i] * x[i];
            for (int j = 0; j < n; ++j) r += lap[i * n + j] * x[j];
            r2 += r * r;
        }
        rep.residuals.push_back(std::sqrt(r2));
    }
    rep.trace_error = std::abs(sum - trace);
    return rep;
}

SweepResult sweep_round(const WeightedGraph& g, const VertexVector& x) {
    if (static_cast<int>(x.size()) != g.n()) throw Error("vector length mismatch");
    const int n = g.n();
    VertexVector pos(n, 0.0), neg(n, 0.0);
    bool has_pos = false, has_neg = false;
    for (int v = 0; v < n; ++v) {
        if (x[v] > 0) {
            pos[v] = x[v];
            has_pos = true;
        } else if (x[v] < 0) {
            neg[v] = -x[v];
            has_neg = true;
        }
    }
    if (!has_pos && !has_neg) throw ZeroVectorError();
    const VertexVector* part = nullptr;
    if (!has_neg)
        part = &pos;
    else if (!has_pos)
        part = &neg;
    else
        part = rayleigh(g, pos, 1.0) <= rayleigh(g, neg, 1.0) ? &pos : &neg;

    // thresholds: every distinct positive entry u gives the superlevel set
    // {v : part_v >= u}
    std::vector<double> levels;
    for (double t : *part)
        if (t > 0) levels.push_back(t);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    Mask best = 0;
    Rat best_b, best_v;
    for (double u : levels) {
        Mask s = 0;
        for (int v = 0; v < n; ++v)
            if ((*part)[v] >= u) s |= Mask(1) << v;
        Rat b = g.boundary_weight(s), vol = g.volume(s);
        bool better;
        if (best == 0)
            better = true;
        else {
            const Rat lhs = b * best_v, rhs = best_b * vol;
            better = lhs < rhs ||
                     (lhs == rhs && (popcount(s) < popcount(best) ||
                                     (popcount(s) == popcount(best) && s < best)));
        }
        if (better) {
            best = s;
            best_b = std::move(b);
            best_v = std::move(vol);
        }
    }
    return SweepResult{best, best_b / best_v, rayleigh(g, x, 1.0)};
}

bool indicator_span_sup_check(const WeightedGraph& g, const Subpartition& sp, int samples,
                              SplitMix64& rng) {
    const int k = static_cast<int>(sp.size());
    if (!is_valid_subpartition(sp, g.n())) throw Error("invalid subpartition");
    Rat max_phi = 0;
    for (Mask p : sp) max_phi = std::max(max_phi, g.expansion(p));

    auto check = [&](const std::vector<Rat>& t) {
        bool nonzero = false;
        for (const Rat& c : t)
            if (c != 0) nonzero = true;
        if (!nonzero) return true;
        std::vector<Rat> x(g.n(), Rat(0));
        for (int i = 0; i < k; ++i)
            for (Mask m = sp[i]; m; m &= m - 1) x[lowest_bit(m)] = t[i];
        return rayleigh1_exact(g, x) <= max_phi;
    };

    // all sign patterns when cheap, sampled otherwise
    if (k <= 10) {
        for (Mask sel = 0; sel < (Mask(1) << k); ++sel) {
            std::vector<Rat> t(k);
            for (int i = 0; i < k; ++i) t[i] = ((sel >> i) & 1) ? Rat(-1) : Rat(1);
            if (!check(t)) return false;
        }
    }
    for (int s = 0; s < samples; ++s) {
        std::vector<Rat> t(k);
        for (int i = 0; i < k; ++i)
            t[i] = Rat(rng.range(-8, 8), rng.range(1, 8));
        if (!check(t)) return false;
    }
    return true;
}

OneLapBracket one_lap_bracket(const CheegerSolver& solver, int k, const CheegerOptions& opts) {
    OneLapBracket out;
    out.upper = solver.cheeger_k(k, opts).value;
    try {
        out.lower = solver.maxmin_cheeger(k, opts).value;
        out.lower_is_llk = false;
    } catch (const BudgetExceededError&) {
        out.lower = solver.dirichlet_k(k).value;
        out.lower_is_llk = true;
    }
    out.exact = (out.lower == out.upper);
    return out;
}

CheegerAudit cheeger_inequality_audit(const CheegerSolver& solver, int k,
                                      const CheegerOptions& opts, double slack) {
    const WeightedGraph& g = solver.graph();
    if (!g.mu_is_weighted_degree()) throw MuConventionError();
    CheegerAudit out;
    out.beta = g.betti_number();
    out.lambda_k = laplacian_spectrum(g).eigenvalues[k - 1];
    out.h_k = to_double(solver.cheeger_k(k, opts).value);
    const int j = k - out.beta;
    out.h_lower = j <= 0 ? 0.0 : to_double(solver.cheeger_k(j, opts).value);
    out.lower_margin = out.lambda_k - out.h_lower * out.h_lower / 2;
    out.upper_margin = 2 * out.h_k - out.lambda_k;
    out.lower_ok = out.lower_margin >= -slack;
    out.upper_ok = out.upper_margin >= -slack;
    return out;
}

MonotonicityAudit p_monotonicity_audit(const CheegerSolver& solver, int k,
                                       const CheegerOptions& opts, double slack) {
    const WeightedGraph& g = solver.graph();
    if (!g.is_forest()) throw NotAForestError();
    if (!g.mu_is_weighted_degree()) throw MuConventionError();
    MonotonicityAudit out;
    out.lambda1 = to_double(solver.cheeger_k(k, opts).value);  // = h_k on forests
    out.lambda2 = laplacian_spectrum(g).eigenvalues[k - 1];
    // p (2 lambda_p)^{1/p} increasing, 2^{-p} lambda_p decreasing, at p in {1,2}
    out.increasing_ok =
        2 * out.lambda1 <= 2 * std::sqrt(std::max(0.0, 2 * out.lambda2)) + slack;
    out.decreasing_ok = out.lambda1 / 2 >= out.lambda2 / 4 - slack;
    return out;
}

namespace {

int matrix_rank(std::vector<std::vector<double>> rows, int cols, double tol) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        double best = tol;
        for (int r = row; r < static_cast<int>(rows.size()); ++r)
            if (std::abs(rows[r][col]) > best) {
                best = std::abs(rows[r][col]);
                pivot = r;
            }
        if (pivot < 0) continue;
        std::swap(rows[row], rows[pivot]);
        for (int r = row + 1; r < static_cast<int>(rows.size()); ++r) {
            const double f = rows[r][col] / rows[row][col];
            for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

bool subspace_intersection_check(const WeightedGraph& g, const Subpartition& sp, int trials,
                                 SplitMix64& rng) {
    const int n = g.n();
    const int k = static_cast<int>(sp.size());
    const int dim_x = n - k + 1;
    std::vector<std::vector<double>> span;
    for (Mask p : sp) {
        std::vector<double> row(n, 0.0);
        for (Mask m = p; m; m &= m - 1) row[lowest_bit(m)] = 1.0;
        span.push_back(row);
    }
    const double tol = 1e-9;
    const int rank_span = matrix_rank(span, n, tol);
    for (int t = 0; t < trials; ++t) {
        std::vector<std::vector<double>> x;
        for (int r = 0; r < dim_x; ++r) {
            std::vector<double> row(n);
            for (int c = 0; c < n; ++c) row[c] = 2 * rng.unit() - 1;
            x.push_back(row);
        }
        const int rank_x = matrix_rank(x, n, tol);
        std::vector<std::vector<double>> stacked = x;
        stacked.insert(stacked.end(), span.begin(), span.end());
        const int rank_sum = matrix_rank(stacked, n, tol);
        if (rank_x + rank_span - rank_sum < 1) return false;
    }
    return true;
}

}  // namespace cheeger_lab
