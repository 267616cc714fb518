// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. The suites stream their instance counts to stderr.

#include "cheeger_lab/cheeger.hpp"
#include "cheeger_lab/generators.hpp"
#include "cheeger_lab/spectra.hpp"
#include "cheeger_lab/verify.hpp"

#include <cmath>
#include <iostream>
#include <string>

using namespace cheeger_lab;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& text, bool ok) {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << text << "\n";
    if (!ok) ++g_failures;
}

}  // namespace

int main() {
    std::ostream* log = &std::cerr;

    SuiteParams forest;
    forest.n_max = 7;
    forest.n_max_random = 10;
    forest.graphs = 200;  // random trees per size
    forest.seed = 1;
    SuiteResult s1 = run_forest_identity(forest, log);
    criterion(1,
              "forest identity h_k = ll_k (= l_k in budget) on all trees n <= 7 "
              "and 200 random trees per n <= 10",
              s1.failures == 0 && s1.instances > 16807 && s1.lk_checked > 0);

    SuiteParams chain;
    chain.graphs = 500;
    chain.n_max_random = 8;
    chain.seed = 2;
    SuiteResult s2 = run_beta_chain(chain, log);
    criterion(2, "beta chain h_k >= l_k >= ll_k >= h_{k-beta} on 500 graphs n <= 8, "
                 "with a strict h_k > ll_k witness",
              s2.failures == 0 && s2.strict_gap_instances > 0);

    criterion(3, "union-closed h_k formulation agrees on every instance of suites 1-2",
              s1.union_failures == 0 && s2.union_failures == 0);

    SuiteParams rounding;
    rounding.vectors = 10000;
    rounding.n_max_random = 10;
    rounding.seed = 3;
    SuiteResult s4 = run_rounding(rounding, log);
    criterion(4, "sweep rounding phi(B) <= Phi_1(x) + 1e-12 on 10^4 vectors, "
                 "union-family membership on indicator spans",
              s4.passed());

    SuiteParams pigeon;
    pigeon.pairs = 10000;
    pigeon.n_max_random = 10;
    pigeon.seed = 4;
    SuiteResult s5 = run_pigeonhole(pigeon, log);
    criterion(5, "constructive common unions agree exactly on 10^4 subpartition pairs",
              s5.passed());

    // K2 tightness: lambda_2 = 2 h_2 within 1e-9
    bool k2_tight = false;
    {
        std::vector<Edge> e{{0, 1, Rat(1)}};
        WeightedGraph k2(2, default_mu(2, e), e);
        CheegerSolver s(k2);
        double l2 = laplacian_spectrum(k2).eigenvalues[1];
        k2_tight = std::fabs(l2 - 2 * to_double(s.cheeger_k(2).value)) <= 1e-9;
    }
    criterion(6, "p = 2 Cheeger inequalities on all instances of suites 1-2, "
                 "K2 attains lambda_2 = 2 h_2",
              s1.p2_failures == 0 && s2.p2_failures == 0 && k2_tight);

    criterion(7, "endpoint monotonicity at p in {1,2} on all forest instances",
              s1.mono_failures == 0);

    // C3 bracket fixture [1/2, 1]
    bool c3_bracket = false;
    {
        std::vector<Edge> e{{0, 1, Rat(1)}, {1, 2, Rat(1)}, {0, 2, Rat(1)}};
        WeightedGraph c3(3, default_mu(3, e), e);
        CheegerSolver s(c3);
        OneLapBracket b = one_lap_bracket(s, 2);
        c3_bracket = b.lower == Rat(1, 2) && b.upper == Rat(1) && !b.exact;
    }
    criterion(8, "1-Laplacian bracket collapses on forests, lower <= upper otherwise, "
                 "C3 k=2 reports [1/2, 1]",
              s1.bracket_failures == 0 && s2.bracket_failures == 0 && c3_bracket);

    SuiteParams certs;
    certs.graphs = 1000;
    certs.n_max_random = 10;  // forest sizes drawn up to 12
    certs.seed = 5;
    SuiteResult s9 = run_certificates(certs, log);
    criterion(9, "forest certificates: <= k-1 removed vertices and h(A) = h_k exactly "
                 "on 10^3 random forests n <= 12",
              s9.passed());

    criterion(10, "eigensolver health: residuals, trace identity and kernel "
                  "multiplicity on all spectral instances",
              s1.eigen_failures == 0 && s2.eigen_failures == 0);

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criteria failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
