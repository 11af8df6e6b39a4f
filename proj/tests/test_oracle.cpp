#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hz/classify.hpp"
#include "hz/enumerate.hpp"
#include "hz/graph.hpp"
#include "hz/odelta.hpp"
#include "hz/oracle.hpp"
#include "hz/rng.hpp"

using namespace hz;

namespace {

SimpleGraph k5_minus_edge() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 3 && j == 4)) e.emplace_back(i, j);
    return SimpleGraph(5, e);
}

SimpleGraph random_graph(int n, double p, SplitMix64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next() % 1000 < p * 1000) e.emplace_back(i, j);
    return SimpleGraph(n, e);
}

}  // namespace

TEST_CASE("exact chromatic index on known graphs") {
    CHECK(chromatic_index_exact(cycle_graph(5)).chi_prime == 3);
    CHECK(chromatic_index_exact(cycle_graph(6)).chi_prime == 2);
    CHECK(chromatic_index_exact(petersen_star()).chi_prime == 4);
    CHECK(chromatic_index_exact(complete_graph(4)).chi_prime == 3);
    CHECK(chromatic_index_exact(complete_bipartite(3, 3)).chi_prime == 3);
    CHECK(chromatic_index_exact(k5_minus_edge()).chi_prime == 5);
    CHECK(chromatic_index_exact(petersen()).chi_prime == 4);  // class 2, not overfull
    CHECK(chromatic_index_exact(complete_graph(9)).chi_prime == 9);
    CHECK(chromatic_index_exact(SimpleGraph(3, {})).chi_prime == 0);
    CHECK(chromatic_index_exact(SimpleGraph(2, {{0, 1}})).chi_prime == 1);
}

TEST_CASE("oracle witnesses validate and use chi colors") {
    for (const SimpleGraph& g :
         {cycle_graph(5), petersen_star(), k5_minus_edge(), complete_bipartite(3, 4)}) {
        OracleResult res = chromatic_index_exact(g);
        CHECK(res.witness.k() == res.chi_prime);
        CHECK(res.witness.uncolored_count() == 0);
        CHECK(res.witness.validate());
        CHECK(res.chi_prime >= g.max_degree());
        CHECK(res.chi_prime <= g.max_degree() + 1);
    }
}

TEST_CASE("oracle determinism") {
    SimpleGraph g = petersen_star();
    OracleResult a = chromatic_index_exact(g);
    OracleResult b = chromatic_index_exact(g);
    CHECK(a.chi_prime == b.chi_prime);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.witness.same_coloring(b.witness));
}

TEST_CASE("budget exhaustion is a distinct error") {
    OracleOptions opts;
    opts.node_budget = 3;
    CHECK_THROWS_AS(chromatic_index_exact(petersen(), opts), BudgetExceeded);
}

TEST_CASE("capacity bound does not change answers") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        SimpleGraph g = random_graph(rng.range(2, 7), 0.5, rng);
        if (g.edge_count() == 0) continue;
        OracleOptions with, without;
        without.use_capacity_bound = false;
        CHECK(chromatic_index_exact(g, with).chi_prime ==
              chromatic_index_exact(g, without).chi_prime);
    }
}

TEST_CASE("coloring enumeration") {
    SUBCASE("triangle has one coloring up to color permutation") {
        int count = 0;
        EnumStatus st = enumerate_edge_colorings(cycle_graph(3), 3, -1,
                                                 [&](const std::vector<int>&) {
                                                     ++count;
                                                     return true;
                                                 });
        CHECK(st == EnumStatus::Complete);
        CHECK(count == 1);
    }
    SUBCASE("callback stop is reported") {
        EnumStatus st = enumerate_edge_colorings(cycle_graph(6), 2, -1,
                                                 [&](const std::vector<int>&) { return false; });
        CHECK(st == EnumStatus::StoppedByCallback);
    }
    SUBCASE("skip edge yields colorings of the deleted graph") {
        SimpleGraph g = k5_minus_edge();
        int skip = g.edge_index(0, 3);
        int count = 0;
        EnumStatus st = enumerate_edge_colorings(g, 4, skip, [&](const std::vector<int>& cols) {
            ++count;
            CHECK(cols[skip] == 0);
            PartialColoring c(g, 4, cols);
            CHECK(c.uncolored_count() == 1);
            return count < 100000;
        });
        CHECK(st == EnumStatus::Complete);
        CHECK(count > 0);
    }
}

TEST_CASE("constructive Delta+1 coloring") {
    SplitMix64 rng(29);
    for (const SimpleGraph& g : {complete_graph(4), petersen(), petersen_star(),
                                 k5_minus_edge(), complete_bipartite(4, 4)}) {
        PartialColoring c = vizing_plus_one_coloring(g);
        CHECK(c.k() == g.max_degree() + 1);
        CHECK(c.uncolored_count() == 0);
        CHECK(c.validate());
    }
    for (int trial = 0; trial < 60; ++trial) {
        SimpleGraph g = random_graph(rng.range(1, 12), 0.5, rng);
        PartialColoring c = vizing_plus_one_coloring(g);
        CHECK(c.uncolored_count() == 0);
        CHECK(c.validate());
    }
}

TEST_CASE("Delta coloring of class-1 graphs") {
    SUBCASE("even cycle alternates") {
        SimpleGraph c6 = cycle_graph(6);
        PartialColoring c = delta_edge_color(c6);
        CHECK(c.k() == 2);
        CHECK(c.uncolored_count() == 0);
        CHECK(c.validate());
    }
    SUBCASE("balanced complete bipartite") {
        SimpleGraph k33 = complete_bipartite(3, 3);
        PartialColoring c = delta_edge_color(k33);
        CHECK(c.k() == 3);
        CHECK(c.uncolored_count() == 0);
        CHECK(c.validate());
    }
    SUBCASE("every class-1 candidate with n <= 6 succeeds") {
        enumerate_hz_candidates(6, [&](const SimpleGraph& g) {
            if (chromatic_index_exact(g).chi_prime != g.max_degree()) return;
            DeltaColorStats stats;
            PartialColoring c = delta_edge_color(g, &stats);
            CHECK(c.k() == g.max_degree());
            CHECK(c.uncolored_count() == 0);
            CHECK(c.validate());
        });
    }
}

TEST_CASE("family members are class 2 for the oracle") {
    for (int delta = 4; delta <= 7; ++delta) {
        for (int n1 : feasible_n1(delta)) {
            ODeltaSpec spec;
            spec.delta = delta;
            spec.n1 = n1;
            SimpleGraph h1 = canonical_regular_graph(2, n1);
            SimpleGraph h2 = canonical_regular_graph(delta - 1 - n1, delta - 2);
            for (const auto& e : h1.edges()) spec.h1_edges.emplace_back(e.u, e.v);
            for (const auto& e : h2.edges()) spec.h2_edges.emplace_back(e.u, e.v);
            SimpleGraph g = build_o_delta(spec);
            if (g.vertex_count() > 11) continue;
            CHECK(chromatic_index_exact(g).chi_prime == delta + 1);
        }
    }
}
