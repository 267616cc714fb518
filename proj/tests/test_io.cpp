#include <doctest.h>

#include "cheeger_lab/errors.hpp"
#include "cheeger_lab/generators.hpp"
#include "cheeger_lab/io.hpp"

#include <algorithm>
#include <numeric>

using namespace cheeger_lab;

TEST_CASE("TSV parsing") {
    GraphDoc doc = parse_graph_tsv("# P3\n0\t1\t1\n1\t2\t1\n\n");
    CHECK(doc.graph.n() == 3);
    CHECK(!doc.mu_explicit);
    CHECK(doc.graph.mu() == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
    CHECK(doc.external_ids == std::vector<std::int64_t>{0, 1, 2});

    CHECK_THROWS_AS(parse_graph_tsv("0\t1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_tsv("0\t1\tx\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_tsv("0\t0\t1\n"), Error);
    try {
        parse_graph_tsv("0\t1\t1\nbroken\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("JSON parsing with explicit mu and rational weights") {
    std::string text = R"({
      "vertices": [{"id": 10, "mu": "1/2"}, {"id": 20, "mu": "0.25"}],
      "edges": [{"u": 10, "v": 20, "w": "3/7"}]
    })";
    GraphDoc doc = parse_graph_json(text);
    CHECK(doc.graph.n() == 2);
    CHECK(doc.mu_explicit);
    CHECK(doc.graph.mu() == std::vector<Rat>{Rat(1, 2), Rat(1, 4)});
    CHECK(doc.graph.edges()[0].w == Rat(3, 7));
    CHECK(doc.external_ids == std::vector<std::int64_t>{10, 20});
}

TEST_CASE("JSON numeric weights go through exact decimal text") {
    std::string text = R"({
      "vertices": [{"id": 0}, {"id": 1}],
      "edges": [{"u": 0, "v": 1, "w": 0.25}]
    })";
    GraphDoc doc = parse_graph_json(text);
    CHECK(doc.graph.edges()[0].w == Rat(1, 4));
}

TEST_CASE("unknown JSON fields are rejected") {
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [], "edges": [], "extra": 1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph_json(
                        R"({"vertices": [{"id": 0, "bogus": 1}, {"id": 1}],
                            "edges": [{"u": 0, "v": 1, "w": 1}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph_json(
                        R"({"vertices": [{"id": 0}, {"id": 1}],
                            "edges": [{"u": 0, "v": 1, "w": 1, "color": "red"}]})"),
                    ParseError);
}

TEST_CASE("mu must be all-or-none") {
    CHECK_THROWS_AS(parse_graph_json(
                        R"({"vertices": [{"id": 0, "mu": 1}, {"id": 1}],
                            "edges": [{"u": 0, "v": 1, "w": 1}]})"),
                    ParseError);
}

TEST_CASE("round trip: parse(emit(g)) == g") {
    SplitMix64 rng(43);
    for (int it = 0; it < 10; ++it) {
        GenOptions opts;
        opts.random_weights = true;
        opts.explicit_mu = (it % 2) == 1;
        int n = rng.range(3, 9);
        int beta = rng.range(0, std::min(3, n * (n - 1) / 2 - (n - 1)));
        WeightedGraph g = gen_random_connected(n, beta, rng, opts);
        std::vector<std::int64_t> ids(g.n());
        std::iota(ids.begin(), ids.end(), 0);
        GraphDoc doc{g, ids, opts.explicit_mu};

        GraphDoc back = parse_graph_text(emit_graph_json(doc));
        CHECK(graphs_equal(doc.graph, back.graph));
        if (!opts.explicit_mu) {
            GraphDoc tsv = parse_graph_text(emit_graph_tsv(doc));
            CHECK(graphs_equal(doc.graph, tsv.graph));
        }
    }
}

TEST_CASE("fingerprint is stable and shape-aware") {
    SplitMix64 rng(47);
    WeightedGraph a = gen_cycle(4, rng);
    Fingerprint fa = fingerprint(a);
    CHECK(fa.n == 4);
    CHECK(fa.edge_count == 4);
    CHECK(fa.beta == 1);
    CHECK(fingerprint(a).weight_hash == fa.weight_hash);
    WeightedGraph b = gen_path(4, rng);
    CHECK(fingerprint(b).weight_hash != fa.weight_hash);
}

TEST_CASE("graphs_equal ignores edge order, not weights") {
    WeightedGraph a(3, {Rat(1), Rat(2), Rat(1)}, {{0, 1, Rat(1)}, {1, 2, Rat(1)}});
    WeightedGraph b(3, {Rat(1), Rat(2), Rat(1)}, {{1, 2, Rat(1)}, {1, 0, Rat(1)}});
    WeightedGraph c(3, {Rat(1), Rat(2), Rat(1)}, {{0, 1, Rat(2)}, {1, 2, Rat(1)}});
    CHECK(graphs_equal(a, b));
    CHECK(!graphs_equal(a, c));
}
