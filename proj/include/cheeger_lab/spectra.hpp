#pragma once

#include "cheeger_lab/cheeger.hpp"
#include "cheeger_lab/graph.hpp"
#include "cheeger_lab/rng.hpp"

#include <vector>

namespace cheeger_lab {

using VertexVector = std::vector<double>;

// L^p Rayleigh quotient: sum w_uv |x_u - x_v|^p / sum mu_v |x_v|^p.
double rayleigh(const WeightedGraph& g, const VertexVector& x, double p);

// Exact-rational Phi_1; Phi_1(1_A) = phi(A) holds exactly on this path.
Rat rayleigh1_exact(const WeightedGraph& g, const std::vector<Rat>& x);

struct SpectrumReport {
    std::vector<double> eigenvalues;  // sorted ascending
    std::vector<double> residuals;    // ||L x - lambda M x||_2 per pair
    double tolerance;
    double trace_error;  // |sum lambda - trace(M^{-1/2} L M^{-1/2})|
};

// Eigenvalues of the pencil L x = lambda M x (L = combinatorial Laplacian of
// w, M = diag(mu)), via cyclic Jacobi sweeps on M^{-1/2} L M^{-1/2}.
SpectrumReport laplacian_spectrum(const WeightedGraph& g, double tolerance = 1e-10);

struct SweepResult {
    Mask set;        // superlevel set with minimum expansion
    Rat expansion;   // exact phi(set)
    double phi1_x;   // float Phi_1(x) for reference
};

// L^1 sweep rounding: splits x into signed parts, sweeps superlevel sets of
// the better part, returns the best set; phi(set) <= Phi_1(x) is guaranteed
// up to float slack in the Phi_1 evaluation.
SweepResult sweep_round(const WeightedGraph& g, const VertexVector& x);

// Samples coefficient vectors t (all +-1 sign patterns when 2^k is small,
// plus seeded random rational draws) and checks, in exact arithmetic,
// Phi_1(sum t_i 1_{A_i}) <= max_i phi(A_i) for every sample.
bool indicator_span_sup_check(const WeightedGraph& g, const Subpartition& sp, int samples,
                              SplitMix64& rng);

struct OneLapBracket {
    Rat lower;          // l_k, or ll_k when l_k is over budget
    Rat upper;          // h_k
    bool lower_is_llk;  // true when the budget forced the ll_k fallback
    bool exact;         // lower == upper; pins lambda_k(Delta_1)
};

OneLapBracket one_lap_bracket(const CheegerSolver& solver, int k, const CheegerOptions& opts = {});

struct CheegerAudit {
    int beta;
    double lambda_k;      // lambda_k(Delta_2)
    double h_k;           // float rendering of the exact value
    double h_lower;       // h_{k-beta} (equals h_k on forests)
    double lower_margin;  // lambda_k - h_lower^2 / 2
    double upper_margin;  // 2 h_k - lambda_k
    bool lower_ok;
    bool upper_ok;
    bool ok() const { return lower_ok && upper_ok; }
};

// p = 2 Cheeger inequalities: h_{k-beta}^2 / 2 <= lambda_k(Delta_2) <= 2 h_k
// (beta = 0 specializes to the forest form). Requires mu = weighted degree.
CheegerAudit cheeger_inequality_audit(const CheegerSolver& solver, int k,
                                      const CheegerOptions& opts = {}, double slack = 1e-8);

struct MonotonicityAudit {
    double lambda1;        // lambda_k(Delta_1) = h_k on forests
    double lambda2;        // lambda_k(Delta_2)
    bool increasing_ok;    // 2*lambda1 <= 2*sqrt(2*lambda2) + slack
    bool decreasing_ok;    // lambda1/2 >= lambda2/4 - slack
    bool ok() const { return increasing_ok && decreasing_ok; }
};

// Endpoint checks (p = 1 and p = 2) of the p-eigenvalue monotonicity on
// forests with mu = weighted degree.
MonotonicityAudit p_monotonicity_audit(const CheegerSolver& solver, int k,
                                       const CheegerOptions& opts = {}, double slack = 1e-8);

// Random (n-k+1)-dimensional subspaces X must intersect the k-dimensional
// indicator span of sp nontrivially: dim(X ∩ span) >= 1 via rank of the
// stacked basis.
bool subspace_intersection_check(const WeightedGraph& g, const Subpartition& sp, int trials,
                                 SplitMix64& rng);

}  // namespace cheeger_lab
