#include "hz/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace hz {

namespace {
std::shared_ptr<const SimpleGraph> empty_graph() {
    static const auto g = std::make_shared<const SimpleGraph>(0, std::vector<std::pair<int, int>>{});
    return g;
}
}  // namespace

PartialColoring::PartialColoring() : g_(empty_graph()), k_(0), uncolored_count_(0) {}

PartialColoring::PartialColoring(std::shared_ptr<const SimpleGraph> g, int k)
    : g_(std::move(g)), k_(k) {
    if (!g_) throw std::invalid_argument("null graph");
    if (k < 0 || k > 63) throw std::invalid_argument("color count out of supported range");
    edge_color_.assign(g_->edge_count(), 0);
    present_.assign(g_->vertex_count(), 0);
    uncolored_count_ = g_->edge_count();
}

PartialColoring::PartialColoring(const SimpleGraph& g, int k)
    : PartialColoring(std::make_shared<const SimpleGraph>(g), k) {}

PartialColoring::PartialColoring(std::shared_ptr<const SimpleGraph> g, int k,
                                 const std::vector<int>& edge_colors)
    : PartialColoring(std::move(g), k) {
    if (static_cast<int>(edge_colors.size()) != g_->edge_count())
        throw std::invalid_argument("edge color vector size mismatch");
    for (int id = 0; id < g_->edge_count(); ++id)
        if (edge_colors[id] != 0) set(id, edge_colors[id]);
    version_ = 0;
}

PartialColoring::PartialColoring(const SimpleGraph& g, int k, const std::vector<int>& edge_colors)
    : PartialColoring(std::make_shared<const SimpleGraph>(g), k, edge_colors) {}

int PartialColoring::color(int u, int v) const {
    int id = g_->edge_index(u, v);
    if (id < 0) throw std::invalid_argument("no such edge");
    return edge_color_[id];
}

std::vector<int> PartialColoring::missing(int v) const {
    std::vector<int> out;
    uint64_t m = missing_mask(v);
    for (int c = 1; c <= k_; ++c)
        if (m >> (c - 1) & 1) out.push_back(c);
    return out;
}

int PartialColoring::sole_missing(int v) const {
    uint64_t m = missing_mask(v);
    if (__builtin_popcountll(m) != 1) throw std::logic_error("vertex does not miss exactly one color");
    return __builtin_ctzll(m) + 1;
}

std::vector<int> PartialColoring::uncolored_edges() const {
    std::vector<int> out;
    for (int id = 0; id < static_cast<int>(edge_color_.size()); ++id)
        if (edge_color_[id] == 0) out.push_back(id);
    return out;
}

int PartialColoring::sole_uncolored_edge() const {
    if (uncolored_count_ != 1) throw std::logic_error("expected exactly one uncolored edge");
    for (int id = 0; id < static_cast<int>(edge_color_.size()); ++id)
        if (edge_color_[id] == 0) return id;
    throw std::logic_error("uncolored-edge counter out of sync");
}

void PartialColoring::set_unchecked(int edge_id, int c) {
    const auto& e = g_->edge(edge_id);
    int old = edge_color_[edge_id];
    if (old != 0) {
        present_[e.u] &= ~(1ULL << (old - 1));
        present_[e.v] &= ~(1ULL << (old - 1));
        ++uncolored_count_;
    }
    edge_color_[edge_id] = c;
    if (c != 0) {
        present_[e.u] |= 1ULL << (c - 1);
        present_[e.v] |= 1ULL << (c - 1);
        --uncolored_count_;
    }
    ++version_;
}

bool PartialColoring::try_set(int edge_id, int c) {
    if (edge_id < 0 || edge_id >= static_cast<int>(edge_color_.size())) return false;
    if (c < 0 || c > k_) return false;
    if (c != 0 && c != edge_color_[edge_id]) {
        const auto& e = g_->edge(edge_id);
        uint64_t bit = 1ULL << (c - 1);
        uint64_t u_present = present_[e.u];
        uint64_t v_present = present_[e.v];
        if (edge_color_[edge_id] != 0) {
            uint64_t old_bit = 1ULL << (edge_color_[edge_id] - 1);
            u_present &= ~old_bit;
            v_present &= ~old_bit;
        }
        if ((u_present | v_present) & bit) return false;
    }
    set_unchecked(edge_id, c);
    return true;
}

void PartialColoring::set(int edge_id, int c) {
    if (!try_set(edge_id, c)) throw std::invalid_argument("improper edge assignment");
}

bool PartialColoring::validate() const {
    std::vector<uint64_t> present(g_->vertex_count(), 0);
    int uncolored = 0;
    for (int id = 0; id < g_->edge_count(); ++id) {
        int c = edge_color_[id];
        if (c == 0) {
            ++uncolored;
            continue;
        }
        if (c < 1 || c > k_) return false;
        const auto& e = g_->edge(id);
        uint64_t bit = 1ULL << (c - 1);
        if ((present[e.u] | present[e.v]) & bit) return false;  // improper
        present[e.u] |= bit;
        present[e.v] |= bit;
    }
    return present == present_ && uncolored == uncolored_count_;
}

// ---------------------------------------------------------------------------

namespace {

// the edge at v colored a or b, excluding arrived_by; -1 if none
int next_chain_edge(const PartialColoring& c, int v, int a, int b, int arrived_by) {
    const SimpleGraph& g = c.graph();
    for (int w : g.neighbors(v)) {
        int id = g.edge_index(v, w);
        if (id == arrived_by) continue;
        int col = c.color(id);
        if (col == a || col == b) return id;
    }
    return -1;
}

}  // namespace

Chain chain_through(const PartialColoring& c, int x, int alpha, int beta) {
    if (alpha == beta) throw std::invalid_argument("chain colors must differ");
    if (alpha < 1 || alpha > c.k() || beta < 1 || beta > c.k())
        throw std::invalid_argument("chain color out of range");
    const SimpleGraph& g = c.graph();
    if (x < 0 || x >= g.vertex_count()) throw std::invalid_argument("chain vertex out of range");

    std::vector<int> seed;  // edges at x colored alpha or beta
    for (int w : g.neighbors(x)) {
        int id = g.edge_index(x, w);
        int col = c.color(id);
        if (col == alpha || col == beta) seed.push_back(id);
    }

    Chain chain;
    chain.color_a = alpha;
    chain.color_b = beta;
    chain.start = x;
    chain.version = c.version();

    auto walk = [&](int first_edge, std::vector<int>& verts, std::vector<int>& eids) {
        // from x along first_edge until the component ends or closes at x
        int prev = x;
        int eid = first_edge;
        for (;;) {
            const auto& e = g.edge(eid);
            int nxt = e.u == prev ? e.v : e.u;
            eids.push_back(eid);
            verts.push_back(nxt);
            if (nxt == x) return true;  // closed a cycle
            int cont = next_chain_edge(c, nxt, alpha, beta, eid);
            if (cont < 0) return false;
            prev = nxt;
            eid = cont;
        }
    };

    if (seed.empty()) {  // degenerate single-vertex path
        chain.kind = Chain::Kind::Path;
        chain.vertices = {x};
        return chain;
    }

    if (seed.size() == 1) {
        chain.kind = Chain::Kind::Path;
        chain.vertices = {x};
        walk(seed[0], chain.vertices, chain.edge_ids);
        return chain;
    }

    // both colors present at x: cycle, or path with x interior.
    // orient toward the smaller neighbor first.
    auto other = [&](int eid) {
        const auto& e = g.edge(eid);
        return e.u == x ? e.v : e.u;
    };
    if (other(seed[0]) > other(seed[1])) std::swap(seed[0], seed[1]);

    std::vector<int> fwd_v{x}, fwd_e;
    bool closed = walk(seed[0], fwd_v, fwd_e);
    if (closed) {
        chain.kind = Chain::Kind::EvenCycle;
        fwd_v.pop_back();  // drop repeated x
        chain.vertices = std::move(fwd_v);
        chain.edge_ids = std::move(fwd_e);
        return chain;
    }
    // path with x interior: walked side becomes the front, reversed
    std::vector<int> back_v{x}, back_e;
    walk(seed[1], back_v, back_e);
    chain.kind = Chain::Kind::Path;
    std::reverse(fwd_v.begin(), fwd_v.end());
    std::reverse(fwd_e.begin(), fwd_e.end());
    chain.vertices = std::move(fwd_v);
    chain.vertices.insert(chain.vertices.end(), back_v.begin() + 1, back_v.end());
    chain.edge_ids = std::move(fwd_e);
    chain.edge_ids.insert(chain.edge_ids.end(), back_e.begin(), back_e.end());
    return chain;
}

bool Chain::contains_vertex(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Chain::contains_edge(int edge_id) const {
    return std::find(edge_ids.begin(), edge_ids.end(), edge_id) != edge_ids.end();
}

int Chain::other_end() const {
    if (kind != Kind::Path || vertices.empty() || vertices.front() != start)
        throw std::logic_error("chain is not a path from its query vertex");
    return vertices.back();
}

bool linked(const PartialColoring& c, int x, int y, int alpha, int beta) {
    if (x == y) throw std::invalid_argument("linked: vertices must differ");
    return chain_through(c, x, alpha, beta).contains_vertex(y);
}

bool meets_before(const Chain& chain, int u, int v) {
    if (chain.kind != Chain::Kind::Path || chain.vertices.front() != chain.start)
        throw std::invalid_argument("meets_before: chain is not a path from its query vertex");
    auto pu = std::find(chain.vertices.begin(), chain.vertices.end(), u);
    auto pv = std::find(chain.vertices.begin(), chain.vertices.end(), v);
    if (pu == chain.vertices.end() || pv == chain.vertices.end())
        throw std::invalid_argument("meets_before: vertex not on chain");
    return pu < pv;
}

void PartialColoring::swap_chain(const Chain& chain) {
    if (chain.version != version_)
        throw std::logic_error("stale chain: coloring mutated since extraction");
    // clear the whole chain before recoloring: flipping edge by edge would
    // transiently put one color on two edges at a shared vertex and corrupt
    // the presence masks
    std::vector<std::pair<int, int>> flipped;
    flipped.reserve(chain.edge_ids.size());
    for (int id : chain.edge_ids) {
        int col = edge_color_[id];
        flipped.emplace_back(id, col == chain.color_a ? chain.color_b : chain.color_a);
        set_unchecked(id, 0);
    }
    for (auto [id, col] : flipped) set_unchecked(id, col);
    if (chain.edge_ids.empty()) ++version_;  // degenerate swap still invalidates snapshots
}

void kempe_swap_in_place(PartialColoring& c, const Chain& chain) { c.swap_chain(chain); }

PartialColoring kempe_swap(const PartialColoring& c, const Chain& chain) {
    PartialColoring out = c;
    kempe_swap_in_place(out, chain);
    return out;
}

PartialColoring multi_swap(const PartialColoring& c, int x, const std::vector<int>& colors) {
    if (colors.size() < 2) throw std::invalid_argument("multi_swap needs at least two colors");
    for (int col : colors)
        if (col < 1 || col > c.k()) throw std::invalid_argument("multi_swap color out of range");
    if (!c.misses(x, colors[0]))
        throw std::invalid_argument("multi_swap: first color must be missing at x");

    // validated stage by stage: sequences may cycle back to an earlier color
    // once an intermediate swap has made it present again
    PartialColoring out = c;
    for (size_t i = 1; i < colors.size(); ++i) {
        if (colors[i] == colors[i - 1]) continue;  // an (a,a)-swap does nothing
        if (out.misses(x, colors[i]))
            throw std::invalid_argument("multi_swap: stage " + std::to_string(i) +
                                        " color not present at x");
        Chain chain = chain_through(out, x, colors[i - 1], colors[i]);
        kempe_swap_in_place(out, chain);
    }
    return out;
}

bool is_elementary(const PartialColoring& c, const std::vector<int>& xs) {
    uint64_t seen = 0;
    for (int v : xs) {
        uint64_t m = c.missing_mask(v);
        if (seen & m) return false;
        seen |= m;
    }
    return true;
}

bool is_stable(const PartialColoring& c2, const PartialColoring& c1, const StableScope& t) {
    if (!c2.same_graph(c1) || c2.k() != c1.k())
        throw std::invalid_argument("is_stable: colorings not comparable");
    if (c2.uncolored_edges() != c1.uncolored_edges())
        throw std::invalid_argument("is_stable: colorings differ in uncolored edges");
    for (int v : t.vertices)
        if (c2.missing_mask(v) != c1.missing_mask(v)) return false;
    for (int id : t.edge_ids)
        if (c2.color(id) != c1.color(id)) return false;
    return true;
}

}  // namespace hz
