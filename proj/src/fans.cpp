#include "hz/fans.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hz/oracle.hpp"

namespace hz {

ColoringTriple ColoringTriple::make(int r, int s1, PartialColoring coloring) {
    const SimpleGraph& g = coloring.graph();
    int delta = g.max_degree();
    if (coloring.k() != delta) throw std::invalid_argument("triple: coloring must use Delta colors");
    if (r < 0 || r >= g.vertex_count() || s1 < 0 || s1 >= g.vertex_count())
        throw std::invalid_argument("triple: vertex out of range");
    if (g.degree(r) != delta) throw std::invalid_argument("triple: center must have maximum degree");
    if (g.degree(s1) != delta - 1)
        throw std::invalid_argument("triple: s1 must have degree Delta-1");
    int eid = g.edge_index(r, s1);
    if (eid < 0) throw std::invalid_argument("triple: r and s1 not adjacent");
    if (coloring.uncolored_count() != 1 || coloring.color(eid) != 0)
        throw std::invalid_argument("triple: rs1 must be the sole uncolored edge");
    if (!coloring.validate()) throw std::invalid_argument("triple: coloring invalid");
    ColoringTriple t;
    t.r = r;
    t.s1 = s1;
    t.coloring = std::move(coloring);
    return t;
}

std::vector<int> Multifan::vertex_set() const {
    std::vector<int> out{center()};
    out.insert(out.end(), spokes.begin(), spokes.end());
    return out;
}

std::vector<int> Multifan::edge_ids() const {
    std::vector<int> out;
    const SimpleGraph& g = triple->graph();
    for (int s : spokes) out.push_back(g.edge_index(center(), s));
    return out;
}

StableScope Multifan::scope() const { return StableScope{vertex_set(), edge_ids()}; }

Multifan grow_multifan(const ColoringTriple& t) {
    const SimpleGraph& g = t.graph();
    const PartialColoring& c = t.coloring;
    const int delta = c.k();

    Multifan f;
    f.triple = &t;
    f.spokes = {t.s1};
    uint64_t missing_union = c.missing_mask(t.r) | c.missing_mask(t.s1);
    std::vector<char> used(g.vertex_count(), 0);
    used[t.s1] = 1;

    for (;;) {
        int pick = -1;
        for (int s : g.neighbors(t.r)) {
            if (used[s] || g.degree(s) != delta - 1) continue;
            int col = c.color(g.edge_index(t.r, s));
            if (col == 0) continue;
            if (missing_union >> (col - 1) & 1) {
                pick = s;
                break;
            }
        }
        if (pick < 0) break;
        used[pick] = 1;
        f.spokes.push_back(pick);
        missing_union |= c.missing_mask(pick);
    }
    return f;
}

bool validate_multifan(const Multifan& f, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (!f.triple) return fail("no triple");
    const ColoringTriple& t = *f.triple;
    const SimpleGraph& g = t.graph();
    const PartialColoring& c = t.coloring;
    const int delta = c.k();

    if (f.spokes.empty() || f.spokes[0] != t.s1) return fail("sequence must start at s1");
    std::vector<char> seen(g.vertex_count(), 0);
    seen[t.r] = 1;
    uint64_t missing_union = c.missing_mask(t.r) | c.missing_mask(t.s1);
    for (size_t i = 0; i < f.spokes.size(); ++i) {
        int s = f.spokes[i];
        if (s < 0 || s >= g.vertex_count() || seen[s]) return fail("repeated or invalid spoke");
        seen[s] = 1;
        int eid = g.edge_index(t.r, s);
        if (eid < 0) return fail("spoke not adjacent to center");
        if (g.degree(s) != delta - 1) return fail("spoke degree must be Delta-1");
        if (i == 0) {
            if (c.color(eid) != 0) return fail("rs1 must be uncolored");
            continue;
        }
        int col = c.color(eid);
        if (col == 0) return fail("later spoke edge uncolored");
        // the union so far excludes this spoke's own missing colors
        uint64_t prefix = missing_union & ~c.missing_mask(t.r);
        if (!(prefix >> (col - 1) & 1)) return fail("spoke edge color missed nowhere earlier");
        missing_union |= c.missing_mask(s);
    }
    return true;
}

// ---------------------------------------------------------------------------
// typical form

namespace {

// inducer chains hanging off s_1: for each root color of missing(s_1), the
// run of spokes whose edge colors propagate from it. Requires elementary.
struct Decomposition {
    int root_a, root_b;               // the two colors missing at s_1
    std::vector<int> chain_a, chain_b;  // spoke vertices in run order
};

Decomposition decompose_fan(const Multifan& f) {
    const ColoringTriple& t = *f.triple;
    const PartialColoring& c = t.coloring;
    const SimpleGraph& g = t.graph();

    auto s1_missing = c.missing(t.s1);
    if (s1_missing.size() != 2) throw std::invalid_argument("s1 must miss exactly two colors");
    Decomposition d;
    d.root_a = s1_missing[0];
    d.root_b = s1_missing[1];

    // color -> spoke missing it (spokes beyond s_1 miss exactly one color)
    std::map<int, int> missing_at;
    for (size_t i = 1; i < f.spokes.size(); ++i)
        missing_at[c.sole_missing(f.spokes[i])] = f.spokes[i];
    // spoke -> edge color
    auto edge_color = [&](int s) { return c.color(g.edge_index(t.r, s)); };
    std::map<int, int> spoke_of_edge_color;
    for (size_t i = 1; i < f.spokes.size(); ++i)
        spoke_of_edge_color[edge_color(f.spokes[i])] = f.spokes[i];

    auto follow = [&](int root, std::vector<int>& chain) {
        int want = root;
        while (true) {
            auto it = spoke_of_edge_color.find(want);
            if (it == spoke_of_edge_color.end()) break;
            chain.push_back(it->second);
            want = c.sole_missing(it->second);
        }
    };
    follow(d.root_a, d.chain_a);
    follow(d.root_b, d.chain_b);
    if (d.chain_a.size() + d.chain_b.size() != f.spokes.size() - 1)
        throw std::invalid_argument("fan does not decompose into two inducing runs");
    return d;
}

}  // namespace

TypicalMultifan normalize_typical(const Multifan& f) {
    std::string why;
    if (!validate_multifan(f, &why)) throw std::invalid_argument("normalize: invalid multifan: " + why);
    const ColoringTriple& t = *f.triple;
    const PartialColoring& c = t.coloring;
    if (!is_elementary(c, f.vertex_set()))
        throw std::invalid_argument("normalize: fan vertex set is not elementary");

    Decomposition d = decompose_fan(f);
    // the longer run heads color 2; ties toward the smaller original color
    bool a_first = d.chain_a.size() != d.chain_b.size() ? d.chain_a.size() > d.chain_b.size()
                                                        : d.root_a < d.root_b;
    int root2 = a_first ? d.root_a : d.root_b;
    int rootD = a_first ? d.root_b : d.root_a;
    const std::vector<int>& run2 = a_first ? d.chain_a : d.chain_b;
    const std::vector<int>& runD = a_first ? d.chain_b : d.chain_a;

    const int k = c.k();
    std::vector<int> perm(k + 1, 0);
    auto assign = [&](int from, int to) {
        if (perm[from] != 0 && perm[from] != to)
            throw std::logic_error("normalize: inconsistent color constraints");
        perm[from] = to;
    };
    assign(c.sole_missing(t.r), 1);
    assign(root2, 2);
    assign(rootD, k);
    int alpha = 1 + static_cast<int>(run2.size());
    for (size_t l = 0; l < run2.size(); ++l) assign(c.sole_missing(run2[l]), static_cast<int>(l) + 3);
    for (size_t l = 0; l < runD.size(); ++l)
        assign(c.sole_missing(runD[l]), alpha + 2 + static_cast<int>(l));
    // remaining colors keep ascending order
    std::vector<char> taken(k + 1, 0);
    for (int col = 1; col <= k; ++col)
        if (perm[col]) taken[perm[col]] = 1;
    int next_free = 1;
    for (int col = 1; col <= k; ++col) {
        if (perm[col]) continue;
        while (taken[next_free]) ++next_free;
        perm[col] = next_free;
        taken[next_free] = 1;
    }

    std::vector<int> renamed(c.edge_colors());
    for (int& col : renamed)
        if (col != 0) col = perm[col];

    TypicalMultifan out;
    out.triple = ColoringTriple::make(t.r, t.s1, PartialColoring(t.graph(), k, renamed));
    out.spokes = {t.s1};
    out.spokes.insert(out.spokes.end(), run2.begin(), run2.end());
    out.spokes.insert(out.spokes.end(), runD.begin(), runD.end());
    out.alpha = alpha;
    out.beta = static_cast<int>(out.spokes.size());
    out.color_perm = perm;

    if (!validate_typical(out, &why)) throw std::logic_error("normalize: output not typical: " + why);
    return out;
}

bool validate_typical(const TypicalMultifan& f, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const ColoringTriple& t = f.triple;
    const PartialColoring& c = t.coloring;
    const SimpleGraph& g = t.graph();
    const int k = c.k();

    Multifan base{&t, f.spokes};
    std::string base_why;
    if (!validate_multifan(base, &base_why)) return fail("not a multifan: " + base_why);
    if (f.beta != static_cast<int>(f.spokes.size())) return fail("beta must equal spoke count");
    if (f.alpha < 1 || f.alpha > f.beta) return fail("alpha out of range");
    if (c.missing_mask(t.r) != 1ULL) return fail("center must miss exactly color 1");
    if (c.missing_mask(t.s1) != ((1ULL << 1) | (1ULL << (k - 1))))
        return fail("s1 must miss exactly {2, Delta}");
    for (int i = 2; i <= f.beta; ++i) {
        int s = f.spoke(i);
        int col = c.color(g.edge_index(t.r, s));
        int expect_col = (i == f.alpha + 1) ? k : i;
        int expect_missing = (i == f.alpha + 1) ? f.alpha + 2 : i + 1;
        if (col != expect_col) return fail("spoke edge color breaks the typical pattern");
        if (c.sole_missing(s) != expect_missing) return fail("spoke missing color breaks the typical pattern");
    }
    // alpha marks the end of the 2-run: for i in [2, alpha] the typical
    // pattern above already pins everything; additionally a pure 2-run must
    // not be extendable as a Delta-run inside the sequence, which the edge
    // colors enforce.
    return true;
}

// ---------------------------------------------------------------------------
// inducing structure

InducingStructure::InducingStructure(const TypicalMultifan& f)
    : alpha_(f.alpha), beta_(f.beta), delta_(f.triple.k()) {}

bool InducingStructure::is_fan_missing_color(int c) const {
    return c == 1 || c == delta_ || (c >= 2 && c <= beta_ + 1);
}

int InducingStructure::inducer_of(int c) const {
    if (c == 1) throw std::invalid_argument("the center's missing color has no inducer");
    if (c == delta_) return delta_;
    if (c >= 2 && c <= alpha_ + 1) return 2;
    if (c >= alpha_ + 2 && c <= beta_ + 1) return delta_;
    throw std::invalid_argument("not a missing color of the fan");
}

int InducingStructure::position_of(int c) const {
    if (c == 2 || c == delta_) return 0;
    if (c >= 3 && c <= alpha_ + 1) return c - 2;
    if (c >= alpha_ + 2 && c <= beta_ + 1) return c - alpha_ - 1;
    throw std::invalid_argument("color has no inducing position");
}

bool InducingStructure::comparable(int c1, int c2) const {
    if (c1 == 1 || c2 == 1) return false;
    return inducer_of(c1) == inducer_of(c2);
}

bool InducingStructure::precedes(int c1, int c2) const {
    return comparable(c1, c2) && position_of(c1) < position_of(c2);
}

int InducingStructure::last_inducing_color(int inducer) const {
    if (inducer == 2) return alpha_ + 1;  // alpha == 1 collapses to the root 2
    if (inducer == delta_) return beta_ > alpha_ ? beta_ + 1 : delta_;
    throw std::invalid_argument("inducer must be 2 or Delta");
}

std::vector<int> InducingStructure::missing_colors() const {
    std::vector<int> out{1};
    for (int c = 2; c <= beta_ + 1; ++c) out.push_back(c);
    out.push_back(delta_);
    return out;
}

std::vector<int> InducingStructure::inducing_colors(int inducer) const {
    std::vector<int> out;
    if (inducer == 2) {
        for (int c = 2; c <= alpha_ + 1; ++c) out.push_back(c);
    } else if (inducer == delta_) {
        out.push_back(delta_);
        for (int c = alpha_ + 2; c <= beta_ + 1; ++c) out.push_back(c);
    } else {
        throw std::invalid_argument("inducer must be 2 or Delta");
    }
    return out;
}

InducingStructure inducing_structure(const TypicalMultifan& f) { return InducingStructure(f); }

// ---------------------------------------------------------------------------
// shift

ShiftResult shift(const PartialColoring& c, int r, const std::vector<int>& run) {
    ShiftResult res;
    const SimpleGraph& g = c.graph();
    PartialColoring out = c;

    std::vector<int> eids(run.size()), targets(run.size());
    std::vector<char> seen(g.vertex_count(), 0);
    for (size_t i = 0; i < run.size(); ++i) {
        int s = run[i];
        if (s < 0 || s >= g.vertex_count() || s == r || seen[s]) {
            res.failed_index = static_cast<int>(i);
            res.message = "invalid or repeated run vertex";
            return res;
        }
        seen[s] = 1;
        eids[i] = g.edge_index(r, s);
        if (eids[i] < 0) {
            res.failed_index = static_cast<int>(i);
            res.message = "run vertex not adjacent to center";
            return res;
        }
        uint64_t m = c.missing_mask(s);
        if (__builtin_popcountll(m) != 1) {
            res.failed_index = static_cast<int>(i);
            res.message = "run vertex must miss exactly one color";
            return res;
        }
        targets[i] = __builtin_ctzll(m) + 1;
    }
    // the whole run recolors at once: clear first, then assign
    for (int eid : eids) out.set(eid, 0);
    for (size_t i = 0; i < run.size(); ++i) {
        if (!out.try_set(eids[i], targets[i])) {
            res.failed_index = static_cast<int>(i);
            res.message = "recoloring violates properness";
            return res;
        }
    }
    res.coloring = std::move(out);
    return res;
}

// ---------------------------------------------------------------------------
// maximum multifan search

MaxFanSearchResult search_maximum_multifan(const SimpleGraph& g, int r, uint64_t budget) {
    const int delta = g.max_degree();
    if (g.degree(r) != delta)
        throw std::invalid_argument("search_maximum_multifan: r must have maximum degree");
    std::vector<int> candidates = g.neighbors_of_degree(r, delta - 1);
    if (candidates.empty())
        throw std::invalid_argument("search_maximum_multifan: r has no degree-(Delta-1) neighbor");

    std::optional<MaxFanSearchResult> best;
    uint64_t examined = 0;
    bool exhausted_all = true;
    const uint64_t cap = budget == 0 ? 1 : budget;
    auto shared = std::make_shared<const SimpleGraph>(g);

    for (int s : candidates) {
        int skip = g.edge_index(r, s);
        bool complete = EnumStatus::Complete ==
                        enumerate_edge_colorings(g, delta, skip, [&](const std::vector<int>& colors) {
            ++examined;
            ColoringTriple t = ColoringTriple::make(r, s, PartialColoring(shared, delta, colors));
            Multifan f = grow_multifan(t);
            if (!best || f.spokes.size() + 1 > static_cast<size_t>(best->certificate.best_size)) {
                MaxFanSearchResult cand;
                cand.spokes = f.spokes;
                cand.certificate.best_size = static_cast<int>(f.spokes.size()) + 1;
                cand.triple = std::move(t);
                best = std::move(cand);
            }
            return examined < cap;  // keep going?
        });
        if (!complete) {
            exhausted_all = false;
            break;
        }
        if (budget == 0) {
            exhausted_all = false;
            break;
        }
    }
    if (!best) throw std::runtime_error("search_maximum_multifan: no coloring found");
    best->certificate.exhaustive = exhausted_all;
    best->certificate.colorings_examined = examined;
    return std::move(*best);
}

// ---------------------------------------------------------------------------
// Kierstead paths

KiersteadPath build_kierstead_path(const ColoringTriple& t, int v2, int v3) {
    KiersteadPath k;
    k.triple = &t;
    k.vertices = {t.r, t.s1, v2, v3};
    std::string why;
    if (!validate_kierstead_path(k, &why)) throw std::invalid_argument("kierstead path: " + why);
    return k;
}

bool validate_kierstead_path(const KiersteadPath& k, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (!k.triple) return fail("no triple");
    const ColoringTriple& t = *k.triple;
    const SimpleGraph& g = t.graph();
    const PartialColoring& c = t.coloring;
    const auto& v = k.vertices;
    if (v.size() < 2) return fail("needs at least two vertices");
    // either orientation of the uncolored edge roots the path
    if (!((v[0] == t.r && v[1] == t.s1) || (v[0] == t.s1 && v[1] == t.r)))
        return fail("must start with the triple's uncolored edge");

    std::vector<char> seen(g.vertex_count(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= g.vertex_count() || seen[v[i]]) return fail("repeated or invalid vertex");
        seen[v[i]] = 1;
    }
    uint64_t missing_union = c.missing_mask(v[0]);
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        missing_union |= c.missing_mask(v[i]);
        int eid = g.edge_index(v[i], v[i + 1]);
        if (eid < 0) return fail("edge " + std::to_string(i) + " absent");
        int col = c.color(eid);
        if (col == 0) return fail("edge " + std::to_string(i) + " uncolored");
        uint64_t prefix = missing_union & ~c.missing_mask(v[i]);  // strictly earlier vertices
        if (!(prefix >> (col - 1) & 1))
            return fail("edge " + std::to_string(i) + " color missed at no earlier vertex");
    }
    return true;
}

// ---------------------------------------------------------------------------
// pseudo-multifans

std::vector<int> TypicalPseudoMultifan::all_spokes() const {
    std::vector<int> out = fan.spokes;
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

std::vector<int> TypicalPseudoMultifan::vertex_set() const {
    std::vector<int> out{fan.triple.r};
    auto sp = all_spokes();
    out.insert(out.end(), sp.begin(), sp.end());
    return out;
}

std::vector<PartialColoring> sample_stable_colorings(const PartialColoring& base,
                                                     const StableScope& scope, int count,
                                                     int max_swaps, SplitMix64 rng,
                                                     int fixed_color,
                                                     const std::vector<int>* forbidden_endpoints) {
    const SimpleGraph& g = base.graph();
    const int k = base.k();
    const std::vector<int>& forbidden = forbidden_endpoints ? *forbidden_endpoints : scope.vertices;
    auto is_forbidden = [&](int v) {
        return std::find(forbidden.begin(), forbidden.end(), v) != forbidden.end();
    };

    std::vector<PartialColoring> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        PartialColoring work = base;
        int accepted = 0;
        for (int attempt = 0; attempt < max_swaps * 10 && accepted < max_swaps; ++attempt) {
            int x = rng.range(0, g.vertex_count() - 1);
            int a = fixed_color ? fixed_color : rng.range(1, k);
            int b = rng.range(1, k);
            if (a == b) continue;
            Chain chain = chain_through(work, x, a, b);
            if (chain.kind == Chain::Kind::Path &&
                (is_forbidden(chain.vertices.front()) || is_forbidden(chain.vertices.back())))
                continue;
            PartialColoring trial = kempe_swap(work, chain);
            if (!is_stable(trial, base, scope)) continue;
            work = std::move(trial);
            ++accepted;
        }
        out.push_back(std::move(work));
    }
    return out;
}

PseudoFanReport validate_pseudo_multifan(const TypicalPseudoMultifan& s, int sample_count,
                                         SplitMix64 rng) {
    PseudoFanReport rep;
    rep.certificate_present = s.certificate.best_size == s.t() + 1;
    const PartialColoring& base = s.fan.triple.coloring;
    rep.base_elementary = is_elementary(base, s.vertex_set());

    StableScope scope = s.fan.as_multifan().scope();
    auto samples = sample_stable_colorings(base, scope, sample_count, 20, rng);
    rep.samples_run = static_cast<int>(samples.size());
    for (const auto& sample : samples) {
        if (!is_elementary(sample, s.vertex_set())) {
            ++rep.violations;
            if (rep.violating_colorings.size() < 4) rep.violating_colorings.push_back(sample);
        }
    }
    return rep;
}

bool validate_rotation(const PartialColoring& c, int r, const Rotation& rot, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const SimpleGraph& g = c.graph();
    const auto& w = rot.vertices;
    if (w.empty()) return fail("empty rotation");
    if (!is_elementary(c, w)) return fail("rotation set not elementary");
    for (size_t l = 0; l < w.size(); ++l) {
        int prev = w[(l + w.size() - 1) % w.size()];
        int eid = g.edge_index(r, w[l]);
        if (eid < 0) return fail("rotation vertex not adjacent to center");
        if (c.color(eid) != c.sole_missing(prev))
            return fail("edge color does not match predecessor's missing color");
    }
    return true;
}

RotationPartition find_rotations(const TypicalPseudoMultifan& s) {
    const ColoringTriple& t = s.fan.triple;
    const PartialColoring& c = t.coloring;
    const SimpleGraph& g = t.graph();
    const int delta = c.k();
    if (s.p() != delta - 2)
        throw std::invalid_argument("find_rotations: pseudo-multifan must span all Delta-2 spokes");

    RotationPartition part;
    const std::vector<int>& tail = s.tail;
    if (tail.empty()) return part;

    // successor: the tail vertex whose center-edge color is w's missing color
    std::map<int, int> tail_by_edge_color;
    for (int w : tail) tail_by_edge_color[c.color(g.edge_index(t.r, w))] = w;
    std::map<int, int> next;
    for (int w : tail) {
        auto it = tail_by_edge_color.find(c.sole_missing(w));
        if (it == tail_by_edge_color.end()) {
            part.structural_failure = true;
            part.failure_detail = "missing color of vertex " + std::to_string(w) +
                                  " is not a tail edge color; successor map is not a permutation";
            return part;
        }
        next[w] = it->second;
    }
    // injectivity (distinct missing colors) makes `next` a permutation
    std::map<int, int> indegree;
    for (auto& [w, n] : next) indegree[n]++;
    for (int w : tail)
        if (indegree[w] != 1) {
            part.structural_failure = true;
            part.failure_detail = "vertex " + std::to_string(w) + " is reached " +
                                  std::to_string(indegree[w]) + " times; not a permutation";
            return part;
        }

    std::vector<int> sorted_tail = tail;
    std::sort(sorted_tail.begin(), sorted_tail.end());
    std::map<int, char> done;
    for (int start : sorted_tail) {
        if (done[start]) continue;
        Rotation rot;
        int w = start;
        do {
            rot.vertices.push_back(w);
            done[w] = 1;
            w = next[w];
        } while (w != start);
        std::string why;
        if (!validate_rotation(c, t.r, rot, &why)) {
            part.structural_failure = true;
            part.failure_detail = "cycle through " + std::to_string(start) + " invalid: " + why;
            return part;
        }
        part.rotations.push_back(std::move(rot));
    }
    return part;
}

// ---------------------------------------------------------------------------
// lollipops

Lollipop build_lollipop(const TypicalMultifan& f, int u, int x) {
    const ColoringTriple& t = f.triple;
    const SimpleGraph& g = t.graph();
    const PartialColoring& c = t.coloring;
    const int delta = c.k();

    if (g.edge_index(t.r, u) < 0) throw std::invalid_argument("lollipop: u must be adjacent to r");
    if (g.degree(u) != delta) throw std::invalid_argument("lollipop: u must have maximum degree");
    if (g.edge_index(u, x) < 0) throw std::invalid_argument("lollipop: x must be adjacent to u");
    if (g.degree(x) != delta - 1) throw std::invalid_argument("lollipop: x must have degree Delta-1");
    if (std::find(f.spokes.begin(), f.spokes.end(), x) != f.spokes.end())
        throw std::invalid_argument("lollipop: x must lie outside the fan");
    if (x == t.r) throw std::invalid_argument("lollipop: x must differ from r");

    Lollipop l;
    l.u = u;
    l.x = x;
    l.ru_color_is_alpha_plus_1 = c.color(g.edge_index(t.r, u)) == f.alpha + 1;
    l.x_misses_alpha_plus_1 = c.missing_mask(x) == (1ULL << f.alpha);
    return l;
}

// ---------------------------------------------------------------------------
// make_2_inducing

Make2InducingResult make_2_inducing(const TypicalPseudoMultifan& s) {
    const TypicalMultifan& f = s.fan;
    const ColoringTriple& t = f.triple;
    const SimpleGraph& g = t.graph();
    const int k = t.k();
    const int alpha = f.alpha, beta = f.beta;

    Make2InducingResult res{false, t.coloring, f.spokes, s};
    if (beta == alpha) return res;

    PartialColoring work = t.coloring;
    work.set(g.edge_index(t.r, f.spoke(beta)), 0);  // uncolor rs_beta
    std::vector<int> run(f.spokes.begin() + alpha, f.spokes.begin() + (beta - 1));
    ShiftResult sh = shift(work, t.r, run);
    if (!sh.ok())
        throw std::logic_error("make_2_inducing: shift failed at run index " +
                               std::to_string(sh.failed_index) + ": " + sh.message);
    work = std::move(*sh.coloring);
    work.set(g.edge_index(t.r, t.s1), k);  // color rs_1 with Delta

    res.changed = true;
    res.transformed = work;
    // new order: s_beta, s_{beta-1}, ..., s_{alpha+1}, s_1, ..., s_alpha
    res.new_spokes.clear();
    for (int i = beta; i >= alpha + 1; --i) res.new_spokes.push_back(f.spoke(i));
    for (int i = 1; i <= alpha; ++i) res.new_spokes.push_back(f.spoke(i));

    ColoringTriple nt = ColoringTriple::make(t.r, f.spoke(beta), std::move(work));
    Multifan nf{&nt, res.new_spokes};
    TypicalMultifan typical = normalize_typical(nf);
    if (!typical.two_inducing())
        throw std::logic_error("make_2_inducing: normalized fan is not purely 2-inducing");
    res.normalized = TypicalPseudoMultifan{std::move(typical), s.tail, s.certificate};
    return res;
}

PartialColoring undo_make_2_inducing(const PartialColoring& transformed,
                                     const TypicalPseudoMultifan& original) {
    const TypicalMultifan& f = original.fan;
    const ColoringTriple& t = f.triple;
    const SimpleGraph& g = t.graph();
    const int alpha = f.alpha, beta = f.beta;
    if (beta == alpha) return transformed;

    PartialColoring work = transformed;
    work.set(g.edge_index(t.r, t.s1), 0);  // uncolor rs_1
    std::vector<int> run(f.spokes.begin() + alpha, f.spokes.begin() + (beta - 1));
    ShiftResult sh = shift(work, t.r, run);
    if (!sh.ok())
        throw std::logic_error("undo_make_2_inducing: shift failed at run index " +
                               std::to_string(sh.failed_index) + ": " + sh.message);
    work = std::move(*sh.coloring);
    // restore the last spoke edge: beta in general, Delta when the Delta-run
    // had length one
    int eid = g.edge_index(t.r, f.spoke(beta));
    work.set(eid, t.coloring.color(eid));
    return work;
}

}  // namespace hz
