#include "hz/lemmas.hpp"

#include <algorithm>

namespace hz {

std::string to_string(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::Pass: return "pass";
        case CheckOutcome::Vacuous: return "vacuous";
        case CheckOutcome::Fail: return "fail";
    }
    return "?";
}

namespace {

LemmaFinding vacuous(std::string check, std::string why) {
    return {std::move(check), CheckOutcome::Vacuous, std::move(why)};
}

LemmaFinding pass(std::string check) { return {std::move(check), CheckOutcome::Pass, ""}; }

LemmaFinding fail(std::string check, std::string detail) {
    return {std::move(check), CheckOutcome::Fail, std::move(detail)};
}

bool fan_hypotheses(const Multifan& f, bool class2, std::string* why) {
    if (!class2) {
        if (why) *why = "graph not certified class 2";
        return false;
    }
    return validate_multifan(f, why);
}

// lollipop hypotheses shared by the pendant lemmas: valid typical fan,
// pendant edge colored alpha+1, x missing exactly alpha+1
bool lollipop_hypotheses(const TypicalMultifan& f, const Lollipop& l, bool class2,
                         std::string* why) {
    if (!class2) {
        if (why) *why = "graph not certified class 2";
        return false;
    }
    if (!validate_typical(f, why)) return false;
    const SimpleGraph& g = f.triple.graph();
    if (g.edge_index(f.triple.r, l.u) < 0 || g.edge_index(l.u, l.x) < 0 ||
        g.degree(l.u) != f.triple.k() || g.degree(l.x) != f.triple.k() - 1 ||
        std::find(f.spokes.begin(), f.spokes.end(), l.x) != f.spokes.end()) {
        if (why) *why = "not a lollipop";
        return false;
    }
    if (!l.ru_color_is_alpha_plus_1 ||
        f.triple.coloring.color(g.edge_index(f.triple.r, l.u)) != f.alpha + 1) {
        if (why) *why = "pendant edge ru not colored alpha+1";
        return false;
    }
    if (!l.x_misses_alpha_plus_1 ||
        f.triple.coloring.missing_mask(l.x) != (1ULL << f.alpha)) {
        if (why) *why = "x does not miss exactly alpha+1";
        return false;
    }
    return true;
}

}  // namespace

LemmaFinding check_multifan_elementary(const Multifan& f, bool class2) {
    const std::string id = "multifan-elementary";
    std::string why;
    if (!fan_hypotheses(f, class2, &why)) return vacuous(id, why);
    if (is_elementary(f.triple->coloring, f.vertex_set())) return pass(id);
    return fail(id, "two fan vertices share a missing color");
}

LemmaFinding check_multifan_center_linked(const Multifan& f, bool class2) {
    const std::string id = "multifan-center-linked";
    std::string why;
    if (!fan_hypotheses(f, class2, &why)) return vacuous(id, why);
    const PartialColoring& c = f.triple->coloring;
    const int r = f.center();
    for (int a : c.missing(r)) {
        for (int s : f.spokes) {
            for (int b : c.missing(s)) {
                if (a == b) continue;  // covered by the elementary check
                if (!linked(c, r, s, a, b))
                    return fail(id, "center and spoke " + std::to_string(s) + " unlinked in (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
    }
    return pass(id);
}

namespace {

// missing color -> owning spoke of a typical fan, with run bookkeeping
struct FanColors {
    const TypicalMultifan& f;
    InducingStructure ind;

    explicit FanColors(const TypicalMultifan& fan) : f(fan), ind(fan) {}

    // vertex missing color c (typical pattern); -1 if c is not a fan color
    int owner(int c) const {
        const int delta = f.triple.k();
        if (c == 2 || c == delta) return f.spoke(1);
        if (c >= 3 && c <= f.beta + 1) return f.spoke(c - 1);
        return -1;
    }

    std::vector<int> spoke_missing_colors() const {
        std::vector<int> out{2, ind.delta()};
        for (int c = 3; c <= f.beta + 1; ++c) out.push_back(c);
        return out;
    }
};

}  // namespace

LemmaFinding check_cross_inducing_linked(const TypicalMultifan& f, bool class2) {
    const std::string id = "cross-inducing-linked";
    std::string why;
    if (!class2) return vacuous(id, "graph not certified class 2");
    if (!validate_typical(f, &why)) return vacuous(id, why);
    if (f.beta < 2) return vacuous(id, "fan has a single spoke");

    FanColors fc(f);
    const PartialColoring& c = f.triple.coloring;
    auto colors = fc.spoke_missing_colors();
    bool checked = false;
    for (int d : colors) {
        for (int l : colors) {
            if (d == l) continue;
            int sd = fc.owner(d), sl = fc.owner(l);
            if (sd == sl) continue;  // both at s_1
            if (fc.ind.inducer_of(d) == fc.ind.inducer_of(l)) continue;
            checked = true;
            if (!linked(c, sd, sl, d, l))
                return fail(id, "spokes missing " + std::to_string(d) + " and " +
                                    std::to_string(l) + " are unlinked");
        }
    }
    return checked ? pass(id) : vacuous(id, "no pair of colors with different roots");
}

LemmaFinding check_same_inducing_unlinked_via_center(const TypicalMultifan& f, bool class2) {
    const std::string id = "same-inducing-unlinked-via-center";
    std::string why;
    if (!class2) return vacuous(id, "graph not certified class 2");
    if (!validate_typical(f, &why)) return vacuous(id, why);

    FanColors fc(f);
    const PartialColoring& c = f.triple.coloring;
    auto colors = fc.spoke_missing_colors();
    bool checked = false;
    for (int d : colors) {
        for (int l : colors) {
            if (d == l) continue;
            int sd = fc.owner(d), sl = fc.owner(l);
            if (sd == sl) continue;
            if (!fc.ind.comparable(d, l) || !fc.ind.precedes(d, l)) continue;
            if (linked(c, sd, sl, d, l)) continue;  // hypothesis asks for unlinked
            checked = true;
            Chain chain = chain_through(c, sl, l, d);
            if (!chain.contains_vertex(f.triple.r))
                return fail(id, "unlinked pair (" + std::to_string(d) + "," + std::to_string(l) +
                                    ") but the later chain avoids the center");
        }
    }
    return checked ? pass(id) : vacuous(id, "no unlinked same-root pair");
}

namespace {

bool kierstead_hypotheses(const KiersteadPath& k, bool class2, std::string* why) {
    if (!class2) {
        if (why) *why = "graph not certified class 2";
        return false;
    }
    if (!validate_kierstead_path(k, why)) return false;
    if (k.vertices.size() != 4) {
        if (why) *why = "evaluator covers 4-vertex paths";
        return false;
    }
    const SimpleGraph& g = k.triple->graph();
    const int delta = k.triple->k();
    if (std::min(g.degree(k.vertices[1]), g.degree(k.vertices[2])) >= delta) {
        if (why) *why = "both interior vertices have maximum degree";
        return false;
    }
    return true;
}

}  // namespace

LemmaFinding check_kierstead_elementary(const KiersteadPath& k, bool class2) {
    const std::string id = "kierstead-elementary";
    std::string why;
    if (!kierstead_hypotheses(k, class2, &why)) return vacuous(id, why);
    if (is_elementary(k.triple->coloring, k.vertices)) return pass(id);
    return fail(id, "two path vertices share a missing color");
}

LemmaFinding check_kierstead_ends_linked(const KiersteadPath& k, bool class2) {
    const std::string id = "kierstead-ends-linked";
    std::string why;
    if (!kierstead_hypotheses(k, class2, &why)) return vacuous(id, why);
    const PartialColoring& c = k.triple->coloring;
    const SimpleGraph& g = k.triple->graph();
    int v0 = k.vertices[0], v1 = k.vertices[1], v2 = k.vertices[2], v3 = k.vertices[3];
    int c12 = c.color(g.edge_index(v1, v2)), c23 = c.color(g.edge_index(v2, v3));
    bool checked = false;
    for (int a : c.missing(v0)) {
        if (a == c12 || a == c23) continue;
        for (int d : c.missing(v3)) {
            if (a == d) continue;
            checked = true;
            if (!linked(c, v0, v3, a, d))
                return fail(id, "ends unlinked in (" + std::to_string(a) + "," +
                                    std::to_string(d) + ")");
        }
    }
    return checked ? pass(id) : vacuous(id, "no qualifying color pair");
}

namespace {

bool span_hypotheses(const TypicalPseudoMultifan& s, bool class2, std::string* why) {
    if (!class2) {
        if (why) *why = "graph not certified class 2";
        return false;
    }
    if (!validate_typical(s.fan, why)) return false;
    if (s.p() != s.fan.triple.k() - 2) {
        if (why) *why = "pseudo-multifan does not span all Delta-2 spokes";
        return false;
    }
    if (s.certificate.best_size != s.t() + 1) {
        if (why) *why = "embedded fan is not the certified best";
        return false;
    }
    if (!is_elementary(s.fan.triple.coloring, s.vertex_set())) {
        if (why) *why = "vertex set not elementary under the base coloring";
        return false;
    }
    return true;
}

}  // namespace

LemmaFinding check_tail_rotation_partition(const TypicalPseudoMultifan& s, bool class2) {
    const std::string id = "tail-rotation-partition";
    std::string why;
    if (!span_hypotheses(s, class2, &why)) return vacuous(id, why);
    if (s.tail.empty()) return pass(id);  // the empty partition covers the empty tail
    RotationPartition part = find_rotations(s);
    if (part.structural_failure) return fail(id, part.failure_detail);
    size_t covered = 0;
    for (const auto& rot : part.rotations) covered += rot.vertices.size();
    if (covered != s.tail.size()) return fail(id, "rotations do not cover the tail");
    return pass(id);
}

LemmaFinding check_tail_center_linked(const TypicalPseudoMultifan& s, bool class2) {
    const std::string id = "tail-center-linked";
    std::string why;
    if (!span_hypotheses(s, class2, &why)) return vacuous(id, why);
    if (s.tail.empty()) return vacuous(id, "fan already spans every spoke");
    const PartialColoring& c = s.fan.triple.coloring;
    for (int sj : s.tail) {
        int d = c.sole_missing(sj);
        if (!linked(c, sj, s.fan.triple.r, 1, d))
            return fail(id, "tail vertex " + std::to_string(sj) + " not (1," +
                                std::to_string(d) + ")-linked to the center");
    }
    return pass(id);
}

LemmaFinding check_fan_chain_through_center(const TypicalPseudoMultifan& s, bool class2) {
    const std::string id = "fan-chain-through-center";
    std::string why;
    if (!span_hypotheses(s, class2, &why)) return vacuous(id, why);
    if (s.tail.empty()) return vacuous(id, "fan already spans every spoke");

    const PartialColoring& c = s.fan.triple.coloring;
    const SimpleGraph& g = s.fan.triple.graph();
    const int r = s.fan.triple.r;
    FanColors fc(s.fan);

    for (int sj : s.tail) {
        int d = c.sole_missing(sj);
        for (int gamma : fc.spoke_missing_colors()) {
            if (gamma == d) continue;
            int y = fc.owner(gamma);
            Chain chain = chain_through(c, y, gamma, d);
            if (!chain.contains_vertex(r))
                return fail(id, "chain from the vertex missing " + std::to_string(gamma) +
                                    " avoids the center");
            if (!chain.contains_vertex(sj))
                return fail(id, "chain from the vertex missing " + std::to_string(gamma) +
                                    " does not end at tail vertex " + std::to_string(sj));
            // the chain meets the gamma-edge neighbor of r before r itself
            int z = -1;
            for (int w : g.neighbors(r))
                if (c.color(g.edge_index(r, w)) == gamma) z = w;
            if (z < 0) return fail(id, "no edge at the center carries " + std::to_string(gamma));
            if (!chain.contains_vertex(z))
                return fail(id, "the center's " + std::to_string(gamma) +
                                    "-neighbor is not on the chain");
            if (!meets_before(chain, z, r))
                return fail(id, "chain reaches the center before its " + std::to_string(gamma) +
                                    "-neighbor");
        }
    }
    return pass(id);
}

LemmaFinding check_tail_pair_chain(const TypicalPseudoMultifan& s, bool class2) {
    const std::string id = "tail-pair-chain";
    std::string why;
    if (!span_hypotheses(s, class2, &why)) return vacuous(id, why);
    if (s.tail.size() < 2) return vacuous(id, "tail has fewer than two vertices");

    const PartialColoring& c = s.fan.triple.coloring;
    const int r = s.fan.triple.r;
    for (int sj : s.tail) {
        int d = c.sole_missing(sj);
        for (int y : s.tail) {
            if (y == sj) continue;
            int dstar = c.sole_missing(y);
            if (!linked(c, y, sj, d, dstar))
                return fail(id, "tail vertices " + std::to_string(y) + " and " +
                                    std::to_string(sj) + " not on one (" + std::to_string(d) +
                                    "," + std::to_string(dstar) + ")-chain");
            Chain through_j = chain_through(c, sj, d, dstar);
            if (!through_j.contains_vertex(r)) {
                Chain at_r = chain_through(c, r, d, dstar);
                if (at_r.kind != Chain::Kind::EvenCycle)
                    return fail(id, "center neither on the tail chain nor on an even cycle in (" +
                                        std::to_string(d) + "," + std::to_string(dstar) + ")");
            }
        }
    }
    return pass(id);
}

LemmaFinding check_pendant_edge_on_center_chain(const TypicalMultifan& f, const Lollipop& l,
                                                bool class2) {
    const std::string id = "pendant-edge-on-center-chain";
    std::string why;
    if (!lollipop_hypotheses(f, l, class2, &why)) return vacuous(id, why);
    const PartialColoring& c = f.triple.coloring;
    const SimpleGraph& g = f.triple.graph();
    int ux = g.edge_index(l.u, l.x);
    int tau = c.color(ux);
    if (tau == 1) return fail(id, "pendant edge ux carries the center's missing color");
    Chain chain = chain_through(c, f.triple.r, 1, tau);
    if (!chain.contains_edge(ux)) return fail(id, "edge ux is not on the center's (1,tau)-chain");
    return pass(id);
}

LemmaFinding check_pendant_chain_ends_at_center(const TypicalMultifan& f, const Lollipop& l,
                                                bool class2) {
    const std::string id = "pendant-chain-ends-at-center";
    std::string why;
    if (!lollipop_hypotheses(f, l, class2, &why)) return vacuous(id, why);
    const PartialColoring& c = f.triple.coloring;
    const SimpleGraph& g = f.triple.graph();
    int ux = g.edge_index(l.u, l.x);
    int tau = c.color(ux);
    if (tau < 2 || tau > f.alpha + 1)
        return vacuous(id, "pendant edge color is not 2-inducing");
    PartialColoring cut = c;
    cut.set(ux, 0);  // the chain lives in the graph without ux
    Chain chain = chain_through(cut, l.x, 1, tau);
    if (chain.kind != Chain::Kind::Path || chain.vertices.front() != l.x)
        return fail(id, "no path chain from x after removing ux");
    if (chain.other_end() != f.triple.r)
        return fail(id, "chain from x ends at " + std::to_string(chain.other_end()) +
                            ", not the center");
    return pass(id);
}

LemmaFinding check_pendant_top_color_nonadjacency(const TypicalMultifan& f, const Lollipop& l,
                                                  bool class2) {
    const std::string id = "pendant-top-color-nonadjacency";
    std::string why;
    if (!lollipop_hypotheses(f, l, class2, &why)) return vacuous(id, why);
    if (!f.two_inducing()) return vacuous(id, "fan is not purely 2-inducing");
    const PartialColoring& c = f.triple.coloring;
    const SimpleGraph& g = f.triple.graph();
    if (c.color(g.edge_index(l.u, l.x)) != f.triple.k())
        return vacuous(id, "pendant edge ux not colored Delta");
    if (g.has_edge(l.u, f.spoke(1)))
        return fail(id, "u adjacent to s_1");
    if (g.has_edge(l.u, f.spoke(f.alpha)))
        return fail(id, "u adjacent to s_alpha");
    return pass(id);
}

LemmaFinding check_pendant_run_color_nonadjacency(const TypicalMultifan& f, const Lollipop& l,
                                                  bool class2) {
    const std::string id = "pendant-run-color-nonadjacency";
    std::string why;
    if (!lollipop_hypotheses(f, l, class2, &why)) return vacuous(id, why);
    if (!f.two_inducing()) return vacuous(id, "fan is not purely 2-inducing");
    const PartialColoring& c = f.triple.coloring;
    const SimpleGraph& g = f.triple.graph();
    int mu = c.color(g.edge_index(l.u, l.x));
    if (mu < 2 || mu > f.alpha) return vacuous(id, "pendant edge color is not 2-inducing");
    if (g.has_edge(l.u, f.spoke(mu - 1)))
        return fail(id, "u adjacent to s_{mu-1}");
    if (g.has_edge(l.u, f.spoke(mu)))
        return fail(id, "u adjacent to s_mu");
    return pass(id);
}

RotationChaseResult rotation_chase(const TypicalMultifan& f, int u, int w1) {
    RotationChaseResult res;
    const PartialColoring& c = f.triple.coloring;
    const SimpleGraph& g = f.triple.graph();
    const int r = f.triple.r;
    const int delta = f.triple.k();

    std::string why;
    if (!validate_typical(f, &why)) {
        res.detail = why;
        return res;
    }
    int ru = g.edge_index(r, u);
    if (ru < 0 || g.degree(u) != delta || c.color(ru) != f.alpha + 1) {
        res.detail = "pendant edge ru not colored alpha+1";
        return res;
    }
    // w1 must be a tail spoke whose edge color lies in [beta+2, Delta-1]
    if (g.edge_index(r, w1) < 0 || g.degree(w1) != delta - 1 ||
        std::find(f.spokes.begin(), f.spokes.end(), w1) != f.spokes.end()) {
        res.detail = "w1 is not a tail spoke";
        return res;
    }
    int tau1 = c.color(g.edge_index(r, w1));
    if (tau1 < f.beta + 2 || tau1 > delta - 1) {
        res.detail = "edge color of w1 outside [beta+2, Delta-1]";
        return res;
    }

    res.applicable = true;
    int cur = w1;
    std::vector<char> seen(g.vertex_count(), 0);
    for (;;) {
        res.sequence.push_back(cur);
        seen[cur] = 1;
        int missing = c.sole_missing(cur);
        if (!linked(c, r, cur, 1, missing)) res.linked_along_chase = false;
        if (missing == tau1) {
            res.branch = RotationChaseResult::Branch::StableRotation;
            return res;
        }
        if (missing == f.alpha + 1) {
            res.branch = RotationChaseResult::Branch::NearStable;
            return res;
        }
        if (missing < f.beta + 2 || missing > delta - 1) {
            res.branch = RotationChaseResult::Branch::ChaseFailed;
            res.detail = "missing color " + std::to_string(missing) + " leaves the eligible range";
            return res;
        }
        int nxt = -1;
        for (int w : g.neighbors(r))
            if (c.color(g.edge_index(r, w)) == missing) nxt = w;
        if (nxt < 0 || seen[nxt] || g.degree(nxt) != delta - 1 ||
            std::find(f.spokes.begin(), f.spokes.end(), nxt) != f.spokes.end()) {
            res.branch = RotationChaseResult::Branch::ChaseFailed;
            res.detail = "successor is not a fresh tail spoke";
            return res;
        }
        cur = nxt;
    }
}

std::vector<std::string> known_check_ids() {
    return {"multifan-elementary",
            "multifan-center-linked",
            "cross-inducing-linked",
            "same-inducing-unlinked-via-center",
            "kierstead-elementary",
            "kierstead-ends-linked",
            "tail-rotation-partition",
            "tail-center-linked",
            "fan-chain-through-center",
            "tail-pair-chain",
            "pendant-edge-on-center-chain",
            "pendant-chain-ends-at-center",
            "pendant-top-color-nonadjacency",
            "pendant-run-color-nonadjacency",
            "rotation-chase"};
}

}  // namespace hz
