#pragma once

#include "cheeger_lab/cheeger.hpp"
#include "cheeger_lab/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cheeger_lab {

struct SuiteParams {
    int n_max = 7;           // exhaustive tree size cap (forest-identity)
    int n_max_random = 10;   // random-instance size cap
    int graphs = 500;        // random instance count
    int vectors = 10000;     // rounding vectors
    int pairs = 10000;       // pigeonhole pairs
    int trials = 200;        // intersection trials
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;      // l_k exactness gate
    std::uint64_t hk_budget = 1'000'000'000'000ULL;  // h_k labelings allowance
    int threads = 0;  // 0 = CHEEGER_LAB_THREADS or hardware concurrency
};

struct SuiteResult {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;  // primary property failures
    // ride-along counters, one per acceptance criterion that runs on the
    // same instance stream
    std::uint64_t union_failures = 0;    // union-closed invariance
    std::uint64_t p2_failures = 0;       // p = 2 Cheeger inequalities
    std::uint64_t mono_failures = 0;     // endpoint monotonicity
    std::uint64_t bracket_failures = 0;  // 1-Laplacian bracket
    std::uint64_t eigen_failures = 0;    // eigensolver health
    std::uint64_t lk_checked = 0;        // (n,k) pairs where l_k was exact
    std::uint64_t strict_gap_instances = 0;  // h_k > ll_k strictly (power check)
    std::string first_failure;  // repro text of the earliest failing instance

    bool passed() const {
        return failures + union_failures + p2_failures + mono_failures + bracket_failures +
                   eigen_failures ==
               0;
    }
    void merge(const SuiteResult& other);
};

// Effective worker count: CHEEGER_LAB_THREADS env var caps it.
int worker_count(int requested = 0);

SuiteResult run_forest_identity(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_beta_chain(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_union_inv(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_rounding(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_pigeonhole(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_cheeger_p2(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_monotonicity(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_intersection(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_basic_phi(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_disjoint_h(const SuiteParams& p, std::ostream* log = nullptr);
SuiteResult run_certificates(const SuiteParams& p, std::ostream* log = nullptr);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteParams& p,
                      std::ostream* log = nullptr);

}  // namespace cheeger_lab
