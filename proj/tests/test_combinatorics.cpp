#include <doctest.h>

#include "cheeger_lab/combinatorics.hpp"
#include "cheeger_lab/errors.hpp"
#include "cheeger_lab/generators.hpp"
#include "cheeger_lab/rng.hpp"

#include <algorithm>
#include <set>

using namespace cheeger_lab;

namespace {

std::set<Subpartition> collect(int n, int k) {
    std::set<Subpartition> out;
    for_each_subpartition(n, k, kDefaultBudget, [&](const Subpartition& sp) {
        out.insert(sp);
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("subpartition stream counts") {
    CHECK(collect(2, 1).size() == 3);
    CHECK(collect(3, 2).size() == 6);
    CHECK(collect(3, 3).size() == 1);
    CHECK(collect(4, 2).size() == 25);
}

TEST_CASE("stream yields valid canonical subpartitions exactly once") {
    auto sps = collect(5, 3);
    for (const auto& sp : sps) {
        CHECK(is_valid_subpartition(sp, 5));
        CHECK(is_canonical_subpartition(sp));
        CHECK(sp.size() == 3);
    }
}

TEST_CASE("labeling_count and budget") {
    CHECK(labeling_count(3, 2) == 27);
    CHECK(labeling_count(1, 0) == 1);
    CHECK(labeling_count(24, 23) > 1000000);
    CHECK_THROWS_AS(for_each_subpartition(10, 9, 100, [](const Subpartition&) { return true; }),
                    BudgetExceededError);
    try {
        for_each_subpartition(5, 3, 10, [](const Subpartition&) { return true; });
        CHECK(false);
    } catch (const BudgetExceededError& e) {
        CHECK(e.count == 1024);
        CHECK(e.budget == 10);
    }
}

TEST_CASE("union_family") {
    Subpartition sp{0b001, 0b010};
    auto fam = union_family(sp);
    REQUIRE(fam.size() == 3);
    CHECK(fam[0] == 0b001);
    CHECK(fam[1] == 0b010);
    CHECK(fam[2] == 0b011);
}

TEST_CASE("connected subsets of P3") {
    SplitMix64 rng(1);
    WeightedGraph g = gen_path(3, rng);
    auto subs = enumerate_connected_subsets(g, g.vertices());
    std::set<Mask> s(subs.begin(), subs.end());
    CHECK(s == std::set<Mask>{0b001, 0b010, 0b100, 0b011, 0b110, 0b111});
}

TEST_CASE("connected subset stream matches the brute-force filter") {
    SplitMix64 rng(3);
    for (int it = 0; it < 15; ++it) {
        GenOptions opts;
        opts.random_weights = true;
        int n = rng.range(3, 7);
        int beta = rng.range(0, std::min(3, n * (n - 1) / 2 - (n - 1)));
        WeightedGraph g = gen_random_connected(n, beta, rng, opts);
        Mask a = static_cast<Mask>(rng.next()) & g.vertices();
        if (!a) a = g.vertices();
        auto subs = enumerate_connected_subsets(g, a);
        std::set<Mask> got(subs.begin(), subs.end());
        CHECK(got.size() == subs.size());  // no duplicates
        std::set<Mask> want;
        for (Mask m = a; m; m = (m - 1) & a)
            if (g.is_connected(m)) want.insert(m);
        CHECK(got == want);
    }
}

TEST_CASE("connected subpartition stream equals the filtered full stream") {
    SplitMix64 rng(5);
    for (int it = 0; it < 10; ++it) {
        int n = rng.range(3, 6);
        int beta = rng.range(0, std::min(2, n * (n - 1) / 2 - (n - 1)));
        WeightedGraph g = gen_random_connected(n, beta, rng);
        for (int k = 1; k <= g.n(); ++k) {
            std::set<Subpartition> got;
            for_each_connected_subpartition(g, k, kDefaultBudget,
                                            [&](const Subpartition& sp) {
                                                got.insert(sp);
                                                return true;
                                            });
            std::set<Subpartition> want;
            for_each_subpartition(g.n(), k, kDefaultBudget, [&](const Subpartition& sp) {
                if (std::all_of(sp.begin(), sp.end(),
                                [&](Mask p) { return g.is_connected(p); }))
                    want.insert(sp);
                return true;
            });
            CHECK(got == want);
        }
    }
}

TEST_CASE("common_union on hand examples") {
    {
        Subpartition a{0b001, 0b010};
        Subpartition b{0b011, 0b100};
        auto [ia, ib] = common_union(a, b, 3);
        Mask ua = 0, ub = 0;
        for (int i : ia) ua |= a[static_cast<std::size_t>(i)];
        for (int j : ib) ub |= b[static_cast<std::size_t>(j)];
        CHECK(ua == ub);
        CHECK(ua != 0);
    }
    {
        // partitions of [n]: the full unions always work
        Subpartition a{0b0011, 0b1100};
        Subpartition b{0b0001, 0b0110, 0b1000};
        auto [ia, ib] = common_union(a, b, 4);
        Mask ua = 0, ub = 0;
        for (int i : ia) ua |= a[static_cast<std::size_t>(i)];
        for (int j : ib) ub |= b[static_cast<std::size_t>(j)];
        CHECK(ua == ub);
    }
}

TEST_CASE("subpartition validity predicates") {
    CHECK(is_valid_subpartition({0b001, 0b110}, 3));
    CHECK(!is_valid_subpartition({0b001, 0b011}, 3));  // overlap
    CHECK(!is_valid_subpartition({0b001, 0}, 3));      // empty part
    CHECK(!is_valid_subpartition({0b1000}, 3));        // out of range
    CHECK(is_canonical_subpartition({0b001, 0b010}));
    CHECK(!is_canonical_subpartition({0b010, 0b001}));
}
