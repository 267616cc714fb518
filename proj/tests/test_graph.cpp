#include <doctest.h>

#include "cheeger_lab/errors.hpp"
#include "cheeger_lab/generators.hpp"
#include "cheeger_lab/graph.hpp"
#include "cheeger_lab/rng.hpp"

#include <algorithm>

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

TEST_CASE("P3 boundary, volume, expansion") {
    WeightedGraph g = p3();
    CHECK(g.mu() == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
    CHECK(g.boundary_weight(0b001) == Rat(1));
    CHECK(g.boundary_weight(0b010) == Rat(2));
    CHECK(g.boundary_weight(0b011) == Rat(1));
    CHECK(g.boundary_weight(0b111) == Rat(0));
    CHECK(g.volume(0b011) == Rat(3));
    CHECK(g.expansion(0b001) == Rat(1));
    CHECK(g.expansion(0b010) == Rat(1));
    CHECK(g.expansion(0b011) == Rat(1, 3));
    CHECK(g.expansion(0b101) == Rat(1));
}

TEST_CASE("boundary of a set equals boundary of its complement") {
    SplitMix64 rng(7);
    for (int it = 0; it < 20; ++it) {
        GenOptions opts;
        opts.random_weights = true;
        int n = rng.range(3, 8);
        int beta = rng.range(0, std::min(2, n * (n - 1) / 2 - (n - 1)));
        WeightedGraph g = gen_random_connected(n, beta, rng, opts);
        Mask all = g.vertices();
        for (Mask a = 1; a < all; ++a)
            CHECK(g.boundary_weight(a) == g.boundary_weight(all & ~a));
    }
}

TEST_CASE("connectivity and betti number") {
    WeightedGraph g = p3();
    CHECK(g.is_connected(0b111));
    CHECK(!g.is_connected(0b101));
    CHECK(g.component_count() == 1);
    CHECK(g.betti_number() == 0);
    CHECK(g.is_forest());
    auto comps = g.connected_components(0b101);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == 0b001);
    CHECK(comps[1] == 0b100);

    WeightedGraph c = c3();
    CHECK(c.betti_number() == 1);
    CHECK(!c.is_forest());
}

TEST_CASE("mu convention") {
    WeightedGraph g = p3();
    CHECK(g.mu_is_weighted_degree());
    CHECK(g.weighted_degree(1) == Rat(2));
    WeightedGraph h(2, {Rat(5), Rat(5)}, {{0, 1, Rat(1)}});
    CHECK(!h.mu_is_weighted_degree());
}

TEST_CASE("cut_profile agrees with the direct queries") {
    WeightedGraph g = c3();
    CutProfile p = cut_profile(g, 0b011);
    CHECK(p.boundary == Rat(2));
    CHECK(p.volume == Rat(4));
    CHECK(p.expansion == Rat(1, 2));
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(WeightedGraph(2, {Rat(1), Rat(1)}, {{0, 0, Rat(1)}}), Error);
    CHECK_THROWS_AS(WeightedGraph(2, {Rat(1), Rat(1)}, {{0, 1, Rat(0)}}), Error);
    CHECK_THROWS_AS(WeightedGraph(2, {Rat(1), Rat(1)}, {{0, 1, Rat(-1)}}), Error);
    CHECK_THROWS_AS(WeightedGraph(2, {Rat(1), Rat(1)},
                                  std::vector<Edge>{{0, 1, Rat(1)}, {1, 0, Rat(2)}}),
                    Error);
    CHECK_THROWS_AS(WeightedGraph(2, {Rat(0), Rat(1)}, {{0, 1, Rat(1)}}), Error);
    CHECK_THROWS_AS(p3().boundary_weight(0), EmptySetError);
    CHECK_THROWS_AS(p3().volume(0), EmptySetError);
    CHECK_THROWS_AS(default_mu(2, {}), ZeroMuError);
}

TEST_CASE("generators produce the promised shapes") {
    SplitMix64 rng(1);
    CHECK(gen_path(3, rng).edges().size() == 2);
    CHECK(gen_cycle(4, rng).betti_number() == 1);
    CHECK(gen_star(5, rng).edges().size() == 4);
    for (int it = 0; it < 10; ++it) {
        CHECK(gen_random_tree(8, rng).is_forest());
        CHECK(gen_unicyclic(6, rng).betti_number() == 1);
        WeightedGraph f = gen_random_forest(7, rng);
        CHECK(f.is_forest());
        CHECK(f.mu_is_weighted_degree());
        WeightedGraph c = gen_random_connected(7, 3, rng);
        CHECK(c.betti_number() == 3);
        CHECK(c.is_connected(c.vertices()));
    }
}

TEST_CASE("generation is deterministic under a fixed seed") {
    GenOptions opts;
    opts.random_weights = true;
    WeightedGraph a = generate("random-tree", 8, 42, opts);
    WeightedGraph b = generate("random-tree", 8, 42, opts);
    REQUIRE(a.edges().size() == b.edges().size());
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        CHECK(a.edges()[i].u == b.edges()[i].u);
        CHECK(a.edges()[i].v == b.edges()[i].v);
        CHECK(a.edges()[i].w == b.edges()[i].w);
    }
}
