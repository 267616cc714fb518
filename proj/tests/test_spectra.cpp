#include <doctest.h>

#include "cheeger_lab/errors.hpp"
#include "cheeger_lab/generators.hpp"

#include <algorithm>
#include "cheeger_lab/spectra.hpp"

using namespace cheeger_lab;

namespace {

WeightedGraph p3() {
    std::vector<Edge> edges{{0, 1, Rat(1)}, {1, 2, Rat(1)}};
    return WeightedGraph(3, default_mu(3, edges), edges);
}

WeightedGraph c3() {
    std::vector<Edge> edges{{0, 1, Rat(1)}, {1, 2, Rat(1)}, {0, 2, Rat(1)}};
    return WeightedGraph(3, default_mu(3, edges), edges);
}

}  // namespace

TEST_CASE("K2 and P3 spectra") {
    std::vector<Edge> e{{0, 1, Rat(1)}};
    WeightedGraph k2(2, default_mu(2, e), e);
    SpectrumReport s = laplacian_spectrum(k2);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(s.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-9));

    SpectrumReport t = laplacian_spectrum(p3());
    REQUIRE(t.eigenvalues.size() == 3);
    CHECK(t.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(t.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(t.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-9));
    for (double r : t.residuals) CHECK(r <= 1e-8);
    CHECK(t.trace_error <= 1e-8);
}

TEST_CASE("rayleigh quotient on indicators equals the expansion") {
    WeightedGraph g = p3();
    VertexVector x{1.0, 0.0, 0.0};
    CHECK(rayleigh(g, x, 1.0) == doctest::Approx(1.0));
    CHECK(rayleigh(g, x, 2.0) == doctest::Approx(1.0));
    std::vector<Rat> xr{Rat(1), Rat(0), Rat(0)};
    CHECK(rayleigh1_exact(g, xr) == g.expansion(0b001));
    std::vector<Rat> xr2{Rat(1), Rat(1), Rat(0)};
    CHECK(rayleigh1_exact(g, xr2) == g.expansion(0b011));
}

TEST_CASE("rayleigh rejects the zero vector and bad p") {
    WeightedGraph g = p3();
    CHECK_THROWS_AS(rayleigh(g, {0.0, 0.0, 0.0}, 2.0), ZeroVectorError);
    CHECK_THROWS_AS(rayleigh(g, {1.0, 0.0, 0.0}, 0.5), Error);
}

TEST_CASE("sweep rounding") {
    WeightedGraph g = p3();
    SweepResult one = sweep_round(g, {1.0, 0.0, 0.0});
    CHECK(one.set == 0b001);
    CHECK(one.expansion == Rat(1));

    SweepResult flat = sweep_round(g, {1.0, 1.0, 1.0});
    CHECK(flat.set == 0b111);
    CHECK(flat.expansion == Rat(0));

    SplitMix64 rng(31);
    for (int it = 0; it < 200; ++it) {
        GenOptions opts;
        opts.random_weights = true;
        int n = rng.range(3, 8);
        int beta = rng.range(0, std::min(2, n * (n - 1) / 2 - (n - 1)));
        WeightedGraph h = gen_random_connected(n, beta, rng, opts);
        VertexVector x(static_cast<std::size_t>(h.n()));
        for (auto& v : x) v = rng.unit() * 2 - 1;
        x[0] = 1.0;
        SweepResult sw = sweep_round(h, x);
        CHECK(to_double(sw.expansion) <= rayleigh(h, x, 1.0) + 1e-12);
    }
}

TEST_CASE("one-Laplacian bracket") {
    WeightedGraph path3 = p3();
    CheegerSolver forest(path3);
    OneLapBracket b2 = one_lap_bracket(forest, 2);
    CHECK(b2.exact);
    CHECK(b2.lower == Rat(1));
    CHECK(b2.upper == Rat(1));

    WeightedGraph cyc = c3();
    CheegerSolver s(cyc);
    OneLapBracket c = one_lap_bracket(s, 2);
    CHECK(c.lower == Rat(1, 2));
    CHECK(c.upper == Rat(1));
    CHECK(!c.exact);
}

TEST_CASE("p = 2 Cheeger inequality audit") {
    WeightedGraph g3 = p3();
    CheegerSolver s(g3);
    for (int k = 1; k <= 3; ++k) {
        CheegerAudit a = cheeger_inequality_audit(s, k);
        CHECK(a.beta == 0);
        CHECK(a.ok());
    }
    WeightedGraph cyc = c3();
    CheegerSolver c(cyc);
    CheegerAudit a2 = cheeger_inequality_audit(c, 2);
    CHECK(a2.beta == 1);
    CHECK(a2.ok());

    WeightedGraph bad(2, {Rat(5), Rat(5)}, {{0, 1, Rat(1)}});
    CheegerSolver sb(bad);
    CHECK_THROWS_AS(cheeger_inequality_audit(sb, 1), MuConventionError);
}

TEST_CASE("endpoint monotonicity audit") {
    WeightedGraph g3 = p3();
    CheegerSolver s(g3);
    for (int k = 1; k <= 3; ++k) CHECK(p_monotonicity_audit(s, k).ok());
    WeightedGraph cyc = c3();
    CheegerSolver c(cyc);
    CHECK_THROWS_AS(p_monotonicity_audit(c, 2), NotAForestError);
}

TEST_CASE("indicator span sup check") {
    WeightedGraph g = p3();
    SplitMix64 rng(37);
    Subpartition sp{0b001, 0b100};
    CHECK(indicator_span_sup_check(g, sp, 20, rng));
}

TEST_CASE("subspace intersection") {
    WeightedGraph g = p3();
    SplitMix64 rng(41);
    CHECK(subspace_intersection_check(g, {0b001, 0b010, 0b100}, 5, rng));  // k = n
    CHECK(subspace_intersection_check(g, {0b001, 0b110}, 10, rng));
}
