#include "hz/iso.hpp"

#include <algorithm>
#include <stdexcept>

namespace hz {

namespace {

inline uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t combine(uint64_t h, uint64_t v) { return mix(h ^ mix(v)); }

}  // namespace

MaskGraph MaskGraph::of(const SimpleGraph& g) {
    if (g.vertex_count() > kMaxN) throw std::invalid_argument("graph too large for MaskGraph");
    MaskGraph m;
    m.n = g.vertex_count();
    for (const auto& e : g.edges()) {
        m.adj[e.u] |= static_cast<uint16_t>(1u << e.v);
        m.adj[e.v] |= static_cast<uint16_t>(1u << e.u);
    }
    return m;
}

SimpleGraph MaskGraph::to_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u] & (1u << v)) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

int MaskGraph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
}

bool MaskGraph::connected() const {
    if (n <= 1) return true;
    uint16_t seen = 1, frontier = 1;
    while (frontier) {
        uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == static_cast<uint16_t>((1u << n) - 1);
}

std::vector<uint64_t> vertex_invariants(const MaskGraph& g) {
    const int n = g.n;
    std::vector<uint64_t> color(n), next(n);

    // seed colors: degree, triangle count, distance profile
    for (int v = 0; v < n; ++v) {
        int tri = 0;
        for (int w = 0; w < n; ++w)
            if (g.adj[v] & (1u << w)) tri += __builtin_popcount(g.adj[v] & g.adj[w]);
        uint64_t h = combine(0x5b5d, static_cast<uint64_t>(g.degree(v)));
        h = combine(h, static_cast<uint64_t>(tri / 2));
        uint16_t seen = static_cast<uint16_t>(1u << v), frontier = seen;
        while (frontier) {
            h = combine(h, __builtin_popcount(seen));
            uint16_t nxt = 0;
            for (int w = 0; w < n; ++w)
                if (frontier & (1u << w)) nxt |= g.adj[w];
            frontier = nxt & ~seen;
            seen |= nxt;
        }
        color[v] = h;
    }

    // a few rounds of neighborhood refinement
    std::vector<uint64_t> nb;
    nb.reserve(n);
    for (int round = 0; round < 3; ++round) {
        for (int v = 0; v < n; ++v) {
            nb.clear();
            for (int w = 0; w < n; ++w)
                if (g.adj[v] & (1u << w)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            uint64_t h = combine(0xab1e, color[v]);
            for (uint64_t c : nb) h = combine(h, c);
            next[v] = h;
        }
        color.swap(next);
    }
    return color;
}

uint64_t iso_invariant(const MaskGraph& g) {
    auto colors = vertex_invariants(g);
    std::sort(colors.begin(), colors.end());
    uint64_t h = combine(0x6e0a, static_cast<uint64_t>(g.n));
    h = combine(h, static_cast<uint64_t>(g.edge_count()));
    for (uint64_t c : colors) h = combine(h, c);
    return h;
}

uint64_t iso_invariant(const SimpleGraph& g) { return iso_invariant(MaskGraph::of(g)); }

bool is_isomorphic(const MaskGraph& a, const MaskGraph& b) {
    if (a.n != b.n) return false;
    if (a.edge_count() != b.edge_count()) return false;
    const int n = a.n;
    if (n == 0) return true;

    auto ca = vertex_invariants(a);
    auto cb = vertex_invariants(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // map rarest color classes first
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> class_size(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ca[j] == ca[i]) ++class_size[i];
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (class_size[x] != class_size[y]) return class_size[x] < class_size[y];
        if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
        return x < y;
    });

    std::vector<int> map(n, -1);
    uint16_t used_b = 0;

    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        const int u = order[k];
        // adjacency pattern u must realize against already-mapped vertices
        uint16_t required = 0, mapped_b = 0;
        for (int i = 0; i < k; ++i) {
            int w = order[i];
            mapped_b |= static_cast<uint16_t>(1u << map[w]);
            if (a.adj[u] & (1u << w)) required |= static_cast<uint16_t>(1u << map[w]);
        }
        for (int v = 0; v < n; ++v) {
            if (used_b & (1u << v)) continue;
            if (cb[v] != ca[u]) continue;
            if ((b.adj[v] & mapped_b) != required) continue;
            map[u] = v;
            used_b |= static_cast<uint16_t>(1u << v);
            if (self(self, k + 1)) return true;
            used_b &= static_cast<uint16_t>(~(1u << v));
            map[u] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return is_isomorphic(MaskGraph::of(a), MaskGraph::of(b));
}

}  // namespace hz
