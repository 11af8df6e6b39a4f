#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hz/campaign.hpp"
#include "hz/coloring.hpp"
#include "hz/graph.hpp"
#include "hz/json_io.hpp"
#include "hz/odelta.hpp"
#include "hz/oracle.hpp"
#include "hz/rng.hpp"
#include "hz/script.hpp"

using namespace hz;

namespace {

SimpleGraph o5_member() {
    ODeltaSpec spec{5, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {}};
    return build_o_delta(spec);
}

SimpleGraph k5_minus_edge() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 3 && j == 4)) e.emplace_back(i, j);
    return SimpleGraph(5, e);
}

}  // namespace

TEST_CASE("missing and present bookkeeping") {
    SUBCASE("triangle with three colors") {
        SimpleGraph tri = cycle_graph(3);
        // edges are (0,1), (0,2), (1,2); give each a distinct color
        PartialColoring c(tri, 3, {1, 2, 3});
        CHECK(c.missing(0) == std::vector<int>{3});  // opposite edge (1,2)
        CHECK(c.missing(1) == std::vector<int>{2});
        CHECK(c.missing(2) == std::vector<int>{1});
        CHECK(c.validate());
    }
    SUBCASE("isolated vertex misses everything") {
        SimpleGraph g(3, {{0, 1}});
        PartialColoring c(g, 3, {2});
        CHECK(c.missing(2) == std::vector<int>{1, 2, 3});
    }
    SUBCASE("triple missing-set sizes") {
        SimpleGraph g = k5_minus_edge();
        SplitMix64 rng(3);
        ColoringTriple t = make_random_triple(g, rng, 0, 1'000'000);
        CHECK(t.coloring.missing(t.r).size() == 1);
        CHECK(t.coloring.missing(t.s1).size() == 2);
    }
}

TEST_CASE("elementary sets") {
    SimpleGraph g(4, {{0, 1}, {2, 3}});
    PartialColoring c(g, 3, {1, 1});
    CHECK(is_elementary(c, {0}));           // singletons are elementary
    CHECK_FALSE(is_elementary(c, {0, 2}));  // both miss 2 and 3
    CHECK(c.missing(0) == std::vector<int>{2, 3});
}

TEST_CASE("chains") {
    SUBCASE("path chain from an endpoint") {
        SimpleGraph p = path_graph(3);  // edges (0,1), (1,2)
        PartialColoring c(p, 2, {1, 2});
        Chain chain = chain_through(c, 0, 1, 2);
        CHECK(chain.kind == Chain::Kind::Path);
        CHECK(chain.vertices == std::vector<int>{0, 1, 2});
        CHECK(chain.edge_ids.size() == 2);
        CHECK(chain.other_end() == 2);
    }
    SUBCASE("alternating 4-cycle from an interior vertex") {
        SimpleGraph c4 = cycle_graph(4);
        PartialColoring c(c4, 2, {1, 2, 2, 1});  // edges (0,1),(0,3),(1,2),(2,3)
        Chain chain = chain_through(c, 2, 1, 2);
        CHECK(chain.kind == Chain::Kind::EvenCycle);
        CHECK(chain.vertices.size() == 4);
        CHECK(chain.edge_ids.size() == 4);
        CHECK(chain.vertices.front() == 2);
        CHECK(chain.vertices[1] == 1);  // smaller neighbor first
    }
    SUBCASE("degenerate single-vertex chain") {
        SimpleGraph g(2, {{0, 1}});
        PartialColoring c(g, 3, {3});
        Chain chain = chain_through(c, 0, 1, 2);
        CHECK(chain.kind == Chain::Kind::Path);
        CHECK(chain.vertices == std::vector<int>{0});
        CHECK(chain.edge_ids.empty());
    }
    SUBCASE("interior path query lists the whole path in order") {
        SimpleGraph p = path_graph(5);
        PartialColoring c(p, 2, {1, 2, 1, 2});
        Chain chain = chain_through(c, 2, 1, 2);
        CHECK(chain.kind == Chain::Kind::Path);
        CHECK(chain.vertices.size() == 5);
        for (size_t i = 0; i + 1 < chain.vertices.size(); ++i)
            CHECK(p.has_edge(chain.vertices[i], chain.vertices[i + 1]));
    }
}

TEST_CASE("linked and meets_before") {
    SimpleGraph g(5, {{0, 1}, {2, 3}, {3, 4}});
    PartialColoring c(g, 2, {1, 1, 2});
    CHECK(linked(c, 0, 1, 1, 2));        // the single edge's endpoints
    CHECK_FALSE(linked(c, 0, 2, 1, 2));  // different components
    Chain chain = chain_through(c, 2, 1, 2);
    CHECK(meets_before(chain, 3, 4));
    CHECK_FALSE(meets_before(chain, 4, 3));
    CHECK_THROWS_AS(meets_before(chain, 0, 3), std::invalid_argument);
}

TEST_CASE("kempe swap") {
    SimpleGraph g = o5_member();
    SplitMix64 rng(11);
    ColoringTriple t = make_random_triple(g, rng, 5, 1'000'000);

    SUBCASE("involution and endpoint behavior over a randomized campaign") {
        PartialColoring c = t.coloring;
        for (int trial = 0; trial < 500; ++trial) {
            int x = rng.range(0, g.vertex_count() - 1);
            int a = rng.range(1, c.k());
            int b = rng.range(1, c.k());
            if (a == b) continue;
            std::vector<uint64_t> before;
            for (int v = 0; v < g.vertex_count(); ++v) before.push_back(c.missing_mask(v));

            Chain chain = chain_through(c, x, a, b);
            PartialColoring once = kempe_swap(c, chain);
            CHECK(once.validate());

            // missing sets change exactly at the endpoints of a path chain
            std::vector<int> changed;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (once.missing_mask(v) != before[v]) changed.push_back(v);
            if (chain.kind == Chain::Kind::EvenCycle || chain.edge_ids.empty()) {
                CHECK(changed.empty());
            } else {
                std::vector<int> ends{chain.vertices.front(), chain.vertices.back()};
                std::sort(ends.begin(), ends.end());
                CHECK(changed == ends);
            }

            Chain again = chain_through(once, x, a, b);
            PartialColoring twice = kempe_swap(once, again);
            CHECK(twice.same_coloring(c));

            c = std::move(once);
        }
    }
    SUBCASE("stale chains are rejected") {
        PartialColoring c = t.coloring;
        Chain chain = chain_through(c, 0, 1, 2);
        Chain other = chain_through(c, 1, 3, 4);
        kempe_swap_in_place(c, chain);
        CHECK_THROWS_AS(kempe_swap_in_place(c, other), std::logic_error);
    }
}

TEST_CASE("multi swap") {
    SimpleGraph g = o5_member();
    SplitMix64 rng(23);
    ColoringTriple t = make_random_triple(g, rng, 3, 1'000'000);
    const PartialColoring& c = t.coloring;
    const int delta = c.k();

    SUBCASE("two-color multi swap equals the single swap") {
        int x = t.s1;
        int b0 = c.missing(x)[0];
        int b1 = 0;
        for (int col = 1; col <= delta; ++col)
            if (!c.misses(x, col)) {
                b1 = col;
                break;
            }
        PartialColoring via_multi = multi_swap(c, x, {b0, b1});
        Chain chain = chain_through(c, x, b0, b1);
        PartialColoring via_single = kempe_swap(c, chain);
        CHECK(via_multi.same_coloring(via_single));
    }
    SUBCASE("color-cycling four-step swap returns the missing set") {
        // a vertex missing exactly one color m; cycle through three other
        // colors and back to m
        int x = -1, m = 0;
        for (int v = 0; v < g.vertex_count() && x < 0; ++v)
            if (__builtin_popcountll(c.missing_mask(v)) == 1) {
                x = v;
                m = c.missing(v)[0];
            }
        REQUIRE(x >= 0);
        std::vector<int> seq{m};
        for (int col = 1; col <= delta && seq.size() < 4; ++col)
            if (col != m) seq.push_back(col);
        seq.push_back(m);
        PartialColoring out = multi_swap(c, x, seq);
        CHECK(out.validate());
        CHECK(out.missing_mask(x) == c.missing_mask(x));
        CHECK(out.missing(x) == std::vector<int>{m});
    }
    SUBCASE("violations abort without touching the input") {
        PartialColoring snapshot = c;
        CHECK_THROWS_AS(multi_swap(c, t.s1, {c.missing(t.s1)[0], c.missing(t.s1)[1]}),
                        std::invalid_argument);
        CHECK(c.same_coloring(snapshot));
        int present = 0;
        for (int col = 1; col <= delta; ++col)
            if (!c.misses(t.s1, col)) {
                present = col;
                break;
            }
        CHECK_THROWS_AS(multi_swap(c, t.s1, {present, 1}), std::invalid_argument);
    }
}

TEST_CASE("stability") {
    SimpleGraph g = o5_member();
    SplitMix64 rng(31);
    ColoringTriple t = make_random_triple(g, rng, 0, 1'000'000);
    StableScope scope{{t.r, t.s1}, {g.edge_index(0, 1)}};

    CHECK(is_stable(t.coloring, t.coloring, scope));  // stable under itself

    auto samples = sample_stable_colorings(t.coloring, scope, 4, 10, rng.split("s"));
    for (const auto& s : samples) {
        CHECK(is_stable(s, t.coloring, scope));
        CHECK(s.validate());
    }
    // transitivity witness: stable(c3, c2) and stable(c2, c1) give stable(c3, c1)
    auto more = sample_stable_colorings(samples[0], scope, 1, 10, rng.split("t"));
    CHECK(is_stable(more[0], samples[0], scope));
    CHECK(is_stable(more[0], t.coloring, scope));

    // a swap on a chain disjoint from the scope is stable
    PartialColoring c = t.coloring;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == t.r || v == t.s1) continue;
        Chain chain = chain_through(c, v, 1, 2);
        bool touches = false;
        for (int w : chain.vertices)
            if (w == t.r || w == t.s1) touches = true;
        if (touches || chain.contains_edge(g.edge_index(0, 1))) continue;
        CHECK(is_stable(kempe_swap(c, chain), c, scope));
        break;
    }
}

TEST_CASE("validate catches corruption") {
    SimpleGraph p9 = petersen_star();
    OracleResult res = chromatic_index_exact(p9);
    CHECK(res.chi_prime == 4);
    CHECK(res.witness.validate());  // oracle-produced coloring validates

    PartialColoring c = res.witness;
    c.inject_cache_fault(0, 0);
    CHECK_FALSE(c.validate());
}

TEST_CASE("coloring json round trip") {
    SimpleGraph g = o5_member();
    SplitMix64 rng(41);
    ColoringTriple t = make_random_triple(g, rng, 2, 1'000'000);

    nlohmann::json j = coloring_to_json(t.coloring);
    PartialColoring back = coloring_from_json(g, j);
    CHECK(back.same_coloring(t.coloring));

    SUBCASE("reader rejects improper input") {
        nlohmann::json bad = j;
        auto& edges = bad["edges"];
        REQUIRE(edges.size() >= 2);
        int fixed = -1;
        for (auto& e : edges) {
            if (e[0].get<int>() == 0 || e[1].get<int>() == 0) {
                if (fixed < 0)
                    fixed = e[2].get<int>();
                else
                    e[2] = fixed;
            }
        }
        CHECK_THROWS_AS(coloring_from_json(g, bad), std::invalid_argument);
    }
    SUBCASE("dot export of a chain") {
        Chain chain = chain_through(t.coloring, t.r, 1, 2);
        std::string dot = chain_to_dot(t.coloring, chain);
        CHECK(dot.find("graph chain") != std::string::npos);
    }
}

TEST_CASE("recolor scripts") {
    SimpleGraph g = o5_member();
    SplitMix64 rng(53);
    ColoringTriple t = make_random_triple(g, rng, 4, 1'000'000);
    const PartialColoring& c = t.coloring;

    SUBCASE("empty script is the identity") {
        ScriptResult res = apply_script(c, {});
        REQUIRE(res.ok());
        CHECK(res.coloring->same_coloring(c));
    }
    SUBCASE("whole-chain subchain swap matches the plain swap") {
        int a = c.missing(t.s1)[0];
        Chain chain = chain_through(c, t.s1, a, a == 1 ? 2 : 1);
        if (chain.kind == Chain::Kind::Path && !chain.edge_ids.empty()) {
            RecolorScript script;
            script.steps.push_back(ScriptStep::swap_subchain(
                chain.vertices.front(), chain.vertices.back(), chain.color_a, chain.color_b));
            ScriptResult res = apply_script(c, script);
            REQUIRE(res.ok());
            CHECK(res.coloring->same_coloring(kempe_swap(c, chain)));
        }
    }
    SUBCASE("failing step reports its index and mutates nothing") {
        PartialColoring snapshot = c;
        RecolorScript script;
        script.steps.push_back(ScriptStep::swap_chain_at(t.r, 1, 2));
        // then recolor an edge with a color present at its endpoint
        int eid = -1, bad_color = 0;
        for (int id = 0; id < g.edge_count() && eid < 0; ++id) {
            if (c.color(id) == 0) continue;
            const auto& e = g.edge(id);
            for (int col = 1; col <= c.k(); ++col)
                if (col != c.color(id) && !c.misses(e.u, col)) {
                    eid = id;
                    bad_color = col;
                    break;
                }
        }
        REQUIRE(eid >= 0);
        script.steps.push_back(ScriptStep::set_edge(g.edge(eid).u, g.edge(eid).v, bad_color));
        ScriptResult res = apply_script(c, script);
        CHECK_FALSE(res.ok());
        CHECK(res.error->step_index == 1);
        CHECK(c.same_coloring(snapshot));  // atomicity
    }
    SUBCASE("multi-swap step") {
        auto miss = c.missing(t.s1);
        int m0 = (miss[0] == 1 && miss.size() > 1) ? miss[1] : miss[0];
        RecolorScript script;
        script.steps.push_back(ScriptStep::multi_swap_at(t.s1, {m0, 1}));
        ScriptResult res = apply_script(c, script);
        if (c.misses(t.s1, 1) && m0 != 1) {
            CHECK_FALSE(res.ok());  // the second stage's color is missing too
        } else {
            REQUIRE(res.ok());
            CHECK(res.coloring->validate());
        }
    }
}
