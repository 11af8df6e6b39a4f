#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hz/campaign.hpp"
#include "hz/fans.hpp"
#include "hz/graph.hpp"
#include "hz/lemmas.hpp"
#include "hz/odelta.hpp"
#include "hz/oracle.hpp"
#include "hz/rng.hpp"
#include "hz/script.hpp"

using namespace hz;

namespace {

SimpleGraph k5_minus_edge() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 3 && j == 4)) e.emplace_back(i, j);
    return SimpleGraph(5, e);
}

SimpleGraph odelta_member(int delta, int n1) {
    ODeltaSpec spec;
    spec.delta = delta;
    spec.n1 = n1;
    SimpleGraph h1 = canonical_regular_graph(2, n1);
    SimpleGraph h2 = canonical_regular_graph(delta - 1 - n1, delta - 2);
    for (const auto& e : h1.edges()) spec.h1_edges.emplace_back(e.u, e.v);
    for (const auto& e : h2.edges()) spec.h2_edges.emplace_back(e.u, e.v);
    return build_o_delta(spec);
}

// greedy closure with reversed tie-breaking, for order-invariance checks
std::vector<int> grow_reversed(const ColoringTriple& t) {
    const SimpleGraph& g = t.graph();
    const PartialColoring& c = t.coloring;
    std::vector<int> spokes{t.s1};
    uint64_t missing_union = c.missing_mask(t.r) | c.missing_mask(t.s1);
    std::vector<char> used(g.vertex_count(), 0);
    used[t.s1] = 1;
    for (;;) {
        int pick = -1;
        auto nb = g.neighbors(t.r);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
            int s = *it;
            if (used[s] || g.degree(s) != c.k() - 1) continue;
            int col = c.color(g.edge_index(t.r, s));
            if (col != 0 && (missing_union >> (col - 1) & 1)) {
                pick = s;
                break;
            }
        }
        if (pick < 0) break;
        used[pick] = 1;
        spokes.push_back(pick);
        missing_union |= c.missing_mask(pick);
    }
    return spokes;
}

// first seeded triple on g whose normalized fan satisfies pred
template <typename Pred>
TypicalMultifan find_fan(const SimpleGraph& g, Pred pred, int max_seeds = 400) {
    for (int seed = 0; seed < max_seeds; ++seed) {
        SplitMix64 rng(seed);
        ColoringTriple t = make_random_triple(g, rng, seed % 8, 10'000'000);
        Multifan f = grow_multifan(t);
        if (!is_elementary(t.coloring, f.vertex_set())) continue;
        TypicalMultifan tf = normalize_typical(f);
        if (pred(tf)) return tf;
    }
    REQUIRE(false);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("triple validation") {
    SimpleGraph g = k5_minus_edge();
    SplitMix64 rng(1);
    ColoringTriple t = make_random_triple(g, rng, 0, 1'000'000);
    CHECK(t.coloring.k() == 4);
    CHECK(g.degree(t.r) == 4);
    CHECK(g.degree(t.s1) == 3);

    // wrong endpoint degrees are rejected
    auto cols = t.coloring.edge_colors();
    CHECK_THROWS_AS(ColoringTriple::make(t.s1, t.r, PartialColoring(g, 4, cols)),
                    std::invalid_argument);
}

TEST_CASE("multifan growth over exhaustive colorings") {
    SimpleGraph g = k5_minus_edge();
    int r = 0;
    int grown_count = 0;
    for (int s : g.neighbors_of_degree(r, 3)) {
        int skip = g.edge_index(r, s);
        enumerate_edge_colorings(g, 4, skip, [&](const std::vector<int>& cols) {
            ColoringTriple t = ColoringTriple::make(r, s, PartialColoring(g, 4, cols));
            Multifan f = grow_multifan(t);
            ++grown_count;
            CHECK(validate_multifan(f));
            // elementary on every grown fan of a critical-edge coloring
            CHECK(is_elementary(t.coloring, f.vertex_set()));
            // growth order does not change the vertex set
            auto alt = grow_reversed(t);
            std::set<int> a(f.spokes.begin(), f.spokes.end()), b(alt.begin(), alt.end());
            CHECK(a == b);
            // center and spokes are chain-linked through their missing colors
            LemmaFinding linked_check = check_multifan_center_linked(f, true);
            CHECK(linked_check.outcome == CheckOutcome::Pass);
            return true;
        });
    }
    CHECK(grown_count > 0);
}

TEST_CASE("multifan validation catches corruption") {
    SimpleGraph g = odelta_member(5, 4);
    SplitMix64 rng(5);
    ColoringTriple t = make_random_triple(g, rng, 2, 1'000'000);
    Multifan f = grow_multifan(t);
    CHECK(validate_multifan(f));

    SUBCASE("a maximum-degree vertex cannot be a spoke") {
        Multifan bad = f;
        for (int v : g.neighbors(t.r))
            if (g.degree(v) == 5 &&
                std::find(bad.spokes.begin(), bad.spokes.end(), v) == bad.spokes.end()) {
                bad.spokes.push_back(v);
                break;
            }
        REQUIRE(bad.spokes.size() == f.spokes.size() + 1);
        CHECK_FALSE(validate_multifan(bad));
    }
    SUBCASE("an unfounded edge color fails") {
        // a spoke whose edge color is missed nowhere earlier
        const PartialColoring& c = t.coloring;
        for (int v : g.neighbors_of_degree(t.r, 4)) {
            if (v == t.s1) continue;
            int col = c.color(g.edge_index(t.r, v));
            uint64_t head = c.missing_mask(t.r) | c.missing_mask(t.s1);
            if (col != 0 && !(head >> (col - 1) & 1)) {
                Multifan bad{&t, {t.s1, v}};
                std::string why;
                CHECK_FALSE(validate_multifan(bad, &why));
                CHECK(why.find("missed nowhere earlier") != std::string::npos);
                break;
            }
        }
    }
}

TEST_CASE("typical normalization") {
    SimpleGraph g = odelta_member(6, 5);
    SplitMix64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        ColoringTriple t = make_random_triple(g, rng, trial % 10, 10'000'000);
        Multifan f = grow_multifan(t);
        if (!is_elementary(t.coloring, f.vertex_set())) continue;
        TypicalMultifan tf = normalize_typical(f);
        std::string why;
        CHECK(validate_typical(tf, &why));
        INFO(why);

        // the permutation sends the center's missing color to 1
        CHECK(tf.color_perm[t.coloring.sole_missing(t.r)] == 1);

        // semantics-preserving: per-vertex missing sets map through the perm
        for (int v = 0; v < g.vertex_count(); ++v) {
            uint64_t mapped = 0;
            for (int col : t.coloring.missing(v)) mapped |= 1ULL << (tf.color_perm[col] - 1);
            CHECK(mapped == tf.triple.coloring.missing_mask(v));
        }

        // normalizing an already-typical fan is the identity
        TypicalMultifan again = normalize_typical(tf.as_multifan());
        CHECK(again.spokes == tf.spokes);
        CHECK(again.alpha == tf.alpha);
        for (int col = 1; col <= 6; ++col) CHECK(again.color_perm[col] == col);
    }
}

TEST_CASE("inducing structure") {
    SimpleGraph g = odelta_member(6, 3);
    TypicalMultifan tf = find_fan(g, [](const TypicalMultifan& f) { return f.beta >= 2; });
    InducingStructure ind = inducing_structure(tf);

    CHECK(ind.inducer_of(2) == 2);        // the root induces itself
    CHECK(ind.position_of(2) == 0);
    CHECK(ind.inducer_of(6) == 6);
    CHECK(ind.last_inducing_color(2) == tf.alpha + 1);
    if (tf.beta > tf.alpha) {
        CHECK(ind.last_inducing_color(6) == tf.beta + 1);
        // colors in different runs are incomparable
        CHECK_FALSE(ind.comparable(3, tf.alpha + 2));
    } else {
        CHECK(ind.last_inducing_color(6) == 6);
    }
    if (tf.alpha >= 2) {
        CHECK(ind.precedes(2, 3));
        CHECK_FALSE(ind.precedes(3, 2));
    }
    CHECK_THROWS_AS(ind.inducer_of(1), std::invalid_argument);
}

TEST_CASE("shift") {
    SimpleGraph g = odelta_member(6, 5);

    SUBCASE("empty run is the identity") {
        SplitMix64 rng(3);
        ColoringTriple t = make_random_triple(g, rng, 0, 10'000'000);
        ShiftResult res = shift(t.coloring, t.r, {});
        REQUIRE(res.ok());
        CHECK(res.coloring->same_coloring(t.coloring));
    }

    SUBCASE("run vertices must miss exactly one color") {
        SplitMix64 rng(4);
        ColoringTriple t = make_random_triple(g, rng, 0, 10'000'000);
        ShiftResult res = shift(t.coloring, t.r, {t.s1});  // s1 misses two colors
        CHECK_FALSE(res.ok());
        CHECK(res.failed_index == 0);
    }

    SUBCASE("fan-run shift as in the reversal script") {
        // typical 2-inducing fan with alpha >= 3: uncolor the last spoke
        // edge, shift the middle of the run, recolor the first edge
        TypicalMultifan tf = find_fan(
            g, [](const TypicalMultifan& f) { return f.two_inducing() && f.alpha >= 3; });
        const SimpleGraph& gg = tf.triple.graph();
        const PartialColoring& c = tf.triple.coloring;
        int r = tf.triple.r, alpha = tf.alpha;

        RecolorScript script;
        script.steps.push_back(ScriptStep::set_edge(r, tf.spoke(alpha), 0));
        std::vector<int> run;
        for (int i = 2; i <= alpha - 1; ++i) run.push_back(tf.spoke(i));
        script.steps.push_back(ScriptStep::shift_run(r, run));
        script.steps.push_back(ScriptStep::set_edge(r, tf.spoke(1), 2));
        ScriptResult res = apply_script(c, script);
        REQUIRE(res.ok());
        CHECK(res.coloring->validate());

        // the reversed sequence is a multifan with respect to the new coloring
        ColoringTriple reversed =
            ColoringTriple::make(r, tf.spoke(alpha), *res.coloring);
        std::vector<int> rev_spokes;
        for (int i = alpha; i >= 1; --i) rev_spokes.push_back(tf.spoke(i));
        Multifan rf{&reversed, rev_spokes};
        CHECK(validate_multifan(rf));
        CHECK(reversed.coloring.missing(tf.spoke(1)) == std::vector<int>{6});

        // plain shift is invertible by restoring the recorded colors
        ShiftResult fwd = shift(c, r, run);
        if (fwd.ok()) {
            PartialColoring back = *fwd.coloring;
            for (int s : run) back.set(gg.edge_index(r, s), 0);
            for (int s : run) back.set(gg.edge_index(r, s), c.color(gg.edge_index(r, s)));
            CHECK(back.same_coloring(c));
        }
    }

    SUBCASE("a shifted fan run frees exactly one color at the center") {
        // needs a Delta-run of length at least two; those occur at Delta = 7
        SimpleGraph g7 = odelta_member(7, 4);
        TypicalMultifan tf = find_fan(
            g7, [](const TypicalMultifan& f) { return f.beta - f.alpha >= 2; });
        const SimpleGraph& gg = tf.triple.graph();
        PartialColoring c = tf.triple.coloring;
        int r = tf.triple.r;
        c.set(gg.edge_index(r, tf.spoke(tf.beta)), 0);
        std::vector<int> run;
        for (int i = tf.alpha + 1; i <= tf.beta - 1; ++i) run.push_back(tf.spoke(i));
        uint64_t before = c.present_mask(r);
        ShiftResult res = shift(c, r, run);
        REQUIRE(res.ok());
        uint64_t after = res.coloring->present_mask(r);
        CHECK(__builtin_popcountll(before & ~after) == 1);  // exactly one color freed
    }
}

TEST_CASE("maximum multifan search") {
    SimpleGraph g = k5_minus_edge();
    SUBCASE("exhaustive on the smallest member") {
        MaxFanSearchResult res = search_maximum_multifan(g, 0, 1'000'000);
        CHECK(res.certificate.exhaustive);
        CHECK(res.certificate.colorings_examined > 0);
        CHECK(res.certificate.best_size == static_cast<int>(res.spokes.size()) + 1);
        CHECK(res.certificate.best_size == 3);  // r and both low-degree neighbors
        CHECK(validate_multifan(res.fan()));
    }
    SUBCASE("budget zero gives a single greedy fan") {
        MaxFanSearchResult res = search_maximum_multifan(g, 0, 0);
        CHECK_FALSE(res.certificate.exhaustive);
        CHECK(res.certificate.colorings_examined == 1);
        CHECK(validate_multifan(res.fan()));
    }
}

TEST_CASE("kierstead paths") {
    SimpleGraph g = odelta_member(5, 4);
    SplitMix64 rng(7);
    bool built_any = false;
    for (int trial = 0; trial < 50 && !built_any; ++trial) {
        ColoringTriple t = make_random_triple(g, rng, trial % 6, 10'000'000);
        const PartialColoring& c = t.coloring;
        int c1 = c.sole_missing(t.r);
        int v2 = -1;
        for (int w : g.neighbors(t.s1))
            if (w != t.r && c.color(g.edge_index(t.s1, w)) == c1) v2 = w;
        if (v2 < 0) continue;
        uint64_t head = c.missing_mask(t.r) | c.missing_mask(t.s1);
        for (int v3 : g.neighbors(v2)) {
            if (v3 == t.r || v3 == t.s1) continue;
            int col = c.color(g.edge_index(v2, v3));
            if (col == 0 || !(head >> (col - 1) & 1)) continue;
            KiersteadPath kp = build_kierstead_path(t, v2, v3);
            CHECK(validate_kierstead_path(kp));
            CHECK(kp.vertices.size() == 4);
            built_any = true;

            // 3-vertex prefix also satisfies the membership rule
            KiersteadPath prefix{&t, {t.r, t.s1, v2}};
            CHECK(validate_kierstead_path(prefix));

            // a color with no earlier owner is rejected, reporting the index
            bool found_bad = false;
            for (int w : g.neighbors(v2)) {
                if (w == t.r || w == t.s1 || w == v3) continue;
                int wc = c.color(g.edge_index(v2, w));
                if (wc != 0 && !(head >> (wc - 1) & 1)) {
                    CHECK_THROWS_WITH_AS(build_kierstead_path(t, v2, w),
                                         doctest::Contains("edge 2"), std::invalid_argument);
                    found_bad = true;
                    break;
                }
            }
            (void)found_bad;
            break;
        }
    }
    CHECK(built_any);
}

TEST_CASE("pseudo-multifans over maximum fans") {
    SimpleGraph g = odelta_member(6, 3);  // Delta 6, spokes span 4 vertices
    SplitMix64 rng(19);
    int accepted = 0;
    for (int trial = 0; trial < 40; ++trial) {
        SplitMix64 trng = rng.split(trial);
        ColoringTriple t = make_random_triple(g, trng, trial % 12, 10'000'000);
        Multifan f = grow_multifan(t);
        if (!is_elementary(t.coloring, f.vertex_set())) continue;
        MaxFanSearchResult best = search_maximum_multifan(g, t.r, 100);
        if (static_cast<int>(f.spokes.size()) + 1 < best.certificate.best_size) continue;

        TypicalPseudoMultifan s;
        s.fan = normalize_typical(f);
        for (int w : g.neighbors_of_degree(t.r, 5))
            if (std::find(s.fan.spokes.begin(), s.fan.spokes.end(), w) == s.fan.spokes.end())
                s.tail.push_back(w);
        s.certificate = best.certificate;
        s.certificate.best_size = static_cast<int>(f.spokes.size()) + 1;

        PseudoFanReport rep = validate_pseudo_multifan(s, 30, trng.split("p2"));
        CHECK(rep.certificate_present);
        if (!rep.pass()) continue;
        ++accepted;

        // maximum fans here span every spoke, so the partition is empty
        RotationPartition part = find_rotations(s);
        CHECK_FALSE(part.structural_failure);
        size_t covered = 0;
        for (const Rotation& rot : part.rotations) covered += rot.vertices.size();
        CHECK(covered == s.tail.size());
    }
    CHECK(accepted > 0);
}

TEST_CASE("rotation partitions on short fans") {
    // Non-maximum fans leave a nonempty tail; the successor map either
    // decomposes it into rotations or reports the defect, never drops a
    // vertex silently.
    SimpleGraph g = odelta_member(6, 3);
    SplitMix64 rng(101);
    int partitions = 0, failures = 0, nonempty = 0;
    for (int trial = 0; trial < 200 && partitions < 5; ++trial) {
        SplitMix64 trng = rng.split(trial);
        ColoringTriple t = make_random_triple(g, trng, trial % 12, 10'000'000);
        Multifan f = grow_multifan(t);
        if (!is_elementary(t.coloring, f.vertex_set())) continue;

        TypicalPseudoMultifan s;
        s.fan = normalize_typical(f);
        for (int w : g.neighbors_of_degree(t.r, 5))
            if (std::find(s.fan.spokes.begin(), s.fan.spokes.end(), w) == s.fan.spokes.end())
                s.tail.push_back(w);
        s.certificate.best_size = s.t() + 1;
        if (s.tail.empty()) continue;
        ++nonempty;

        RotationPartition part = find_rotations(s);
        if (part.structural_failure) {
            ++failures;
            continue;
        }
        ++partitions;
        const PartialColoring& c = s.fan.triple.coloring;
        std::set<int> seen;
        size_t covered = 0;
        for (const Rotation& rot : part.rotations) {
            CHECK(validate_rotation(c, t.r, rot));
            covered += rot.vertices.size();
            // independent elementwise re-check of the successor relation
            for (size_t i = 0; i < rot.vertices.size(); ++i) {
                int w = rot.vertices[i];
                CHECK_FALSE(seen.count(w));
                seen.insert(w);
                int prev = rot.vertices[(i + rot.vertices.size() - 1) % rot.vertices.size()];
                CHECK(c.color(g.edge_index(t.r, w)) == c.sole_missing(prev));
            }
        }
        CHECK(covered == s.tail.size());
    }
    CHECK(nonempty > 0);
    CHECK(partitions > 0);
    (void)failures;
}

TEST_CASE("lollipops") {
    SimpleGraph g = odelta_member(6, 5);
    SUBCASE("x inside the fan is rejected") {
        TypicalMultifan tf = find_fan(g, [](const TypicalMultifan&) { return true; });
        int u = -1;
        for (int w : g.neighbors(tf.triple.r))
            if (g.degree(w) == 6) u = w;
        REQUIRE(u >= 0);
        CHECK_THROWS_AS(build_lollipop(tf, u, tf.spoke(1)), std::invalid_argument);
    }
    SUBCASE("found lollipops validate and may reuse tail spokes") {
        SplitMix64 rng(43);
        bool found = false;
        for (int trial = 0; trial < 300 && !found; ++trial) {
            SplitMix64 trng = rng.split(trial);
            ColoringTriple t = make_random_triple(g, trng, trial % 10, 10'000'000);
            Multifan f = grow_multifan(t);
            if (!is_elementary(t.coloring, f.vertex_set())) continue;
            TypicalMultifan tf = normalize_typical(f);
            const PartialColoring& c = tf.triple.coloring;
            int u = -1;
            for (int w : g.neighbors(tf.triple.r))
                if (c.color(g.edge_index(tf.triple.r, w)) == tf.alpha + 1 && g.degree(w) == 6)
                    u = w;
            if (u < 0) continue;
            for (int x : g.neighbors(u)) {
                if (g.degree(x) != 5) continue;
                if (std::find(tf.spokes.begin(), tf.spokes.end(), x) != tf.spokes.end()) continue;
                Lollipop l = build_lollipop(tf, u, x);
                CHECK(l.ru_color_is_alpha_plus_1);
                // on family members, x is one of the remaining spokes at r
                CHECK(g.has_edge(tf.triple.r, x));
                found = true;
                break;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("two-inducing transformation") {
    SimpleGraph g = odelta_member(6, 3);
    SplitMix64 rng(67);
    int transformed = 0, identity = 0;
    for (int trial = 0; trial < 200 && (transformed < 5 || identity < 1); ++trial) {
        SplitMix64 trng = rng.split(trial);
        ColoringTriple t = make_random_triple(g, trng, trial % 12, 10'000'000);
        Multifan f = grow_multifan(t);
        if (!is_elementary(t.coloring, f.vertex_set())) continue;
        MaxFanSearchResult best = search_maximum_multifan(g, t.r, 100);
        if (static_cast<int>(f.spokes.size()) + 1 < best.certificate.best_size) continue;

        TypicalPseudoMultifan s;
        s.fan = normalize_typical(f);
        for (int w : g.neighbors_of_degree(t.r, 5))
            if (std::find(s.fan.spokes.begin(), s.fan.spokes.end(), w) == s.fan.spokes.end())
                s.tail.push_back(w);
        s.certificate = best.certificate;
        s.certificate.best_size = static_cast<int>(f.spokes.size()) + 1;
        if (!validate_pseudo_multifan(s, 10, trng.split("p2")).pass()) continue;

        Make2InducingResult m2 = make_2_inducing(s);
        if (s.fan.beta == s.fan.alpha) {
            ++identity;
            CHECK_FALSE(m2.changed);
            CHECK(m2.transformed.same_coloring(s.fan.triple.coloring));
            continue;
        }
        ++transformed;
        CHECK(m2.changed);
        // the transformed coloring leaves the last spoke edge uncolored and
        // that spoke missing {beta, beta+1} in general; when the Delta-run
        // had length one the freed edge carried Delta instead of beta
        int sbeta = s.fan.spoke(s.fan.beta);
        int old_color = s.fan.triple.coloring.color(g.edge_index(t.r, sbeta));
        CHECK(m2.transformed.color(g.edge_index(t.r, sbeta)) == 0);
        CHECK(m2.transformed.missing_mask(sbeta) ==
              ((1ULL << (old_color - 1)) | (1ULL << s.fan.beta)));
        if (s.fan.beta > s.fan.alpha + 1) CHECK(old_color == s.fan.beta);

        CHECK(m2.normalized.fan.two_inducing());
        std::string why;
        CHECK(validate_typical(m2.normalized.fan, &why));
        auto va = s.vertex_set();
        auto vb = m2.normalized.vertex_set();
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        CHECK(va == vb);

        // the inverse restores the original coloring bit-exactly
        PartialColoring undone = undo_make_2_inducing(m2.transformed, s);
        CHECK(undone.same_coloring(s.fan.triple.coloring));
    }
    CHECK(transformed >= 5);
    CHECK(identity >= 1);
}

TEST_CASE("lemma evaluators re-verify hypotheses") {
    SimpleGraph g = odelta_member(5, 4);
    SplitMix64 rng(71);
    ColoringTriple t = make_random_triple(g, rng, 3, 10'000'000);
    Multifan f = grow_multifan(t);

    // class-2 certification is a hypothesis, not an assumption
    LemmaFinding finding = check_multifan_elementary(f, false);
    CHECK(finding.outcome == CheckOutcome::Vacuous);

    finding = check_multifan_elementary(f, true);
    CHECK(finding.outcome == CheckOutcome::Pass);

    // a broken fan is vacuous (hypotheses unmet), never a false alarm
    Multifan bad{&t, {t.s1, t.s1}};
    CHECK(check_multifan_center_linked(bad, true).outcome == CheckOutcome::Vacuous);
}
