#include "hz/odelta.hpp"

#include <algorithm>

#include "hz/iso.hpp"

namespace hz {

namespace {

// sorted degree check for an edge list on [0, order)
void require_regular(const std::vector<std::pair<int, int>>& edges, int order, int degree,
                     const char* name) {
    std::vector<int> deg(order, 0);
    std::vector<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw ODeltaSpecError(std::string(name) + ": edge endpoint out of range");
        if (u == v) throw ODeltaSpecError(std::string(name) + ": self-loop");
        if (u > v) std::swap(u, v);
        seen.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ODeltaSpecError(std::string(name) + ": parallel edge");
    for (int v = 0; v < order; ++v)
        if (deg[v] != degree)
            throw ODeltaSpecError(std::string(name) + ": vertex " + std::to_string(v) +
                                  " has degree " + std::to_string(deg[v]) + ", expected " +
                                  std::to_string(degree));
}

}  // namespace

void validate_odelta_spec(const ODeltaSpec& spec) {
    if (spec.delta < 4) throw ODeltaSpecError("delta must be at least 4");
    if (spec.n1 < 3 || spec.n1 > spec.delta - 1)
        throw ODeltaSpecError("n1 must lie in [3, delta-1]");
    if ((spec.n1 + spec.delta - 2) % 2 == 0)
        throw ODeltaSpecError("n1 + (delta-2) must be odd");
    if (spec.h2_degree() * spec.h2_order() % 2 != 0)
        throw ODeltaSpecError("no regular graph with odd degree sum exists for H2");
    require_regular(spec.h1_edges, spec.n1, 2, "H1");
    require_regular(spec.h2_edges, spec.h2_order(), spec.h2_degree(), "H2");
}

SimpleGraph build_o_delta(const ODeltaSpec& spec) {
    validate_odelta_spec(spec);
    const int n1 = spec.n1;
    const int n = n1 + spec.h2_order();
    std::vector<std::pair<int, int>> edges = spec.h1_edges;
    for (auto [u, v] : spec.h2_edges) edges.emplace_back(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = n1; v < n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

std::optional<ODeltaSpec> recognize_o_delta(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 0 || n < 5) return std::nullopt;
    const int delta = g.max_degree();
    if (delta < 4) return std::nullopt;

    std::vector<int> top = g.vertices_of_degree(delta);
    std::vector<int> low = g.vertices_of_degree(delta - 1);
    if (static_cast<int>(top.size() + low.size()) != n) return std::nullopt;
    const int n1 = static_cast<int>(top.size());
    if (n1 < 3 || n1 > delta - 1) return std::nullopt;
    if (static_cast<int>(low.size()) != delta - 2) return std::nullopt;

    for (int u : top)
        for (int v : low)
            if (!g.has_edge(u, v)) return std::nullopt;

    SimpleGraph h1 = g.induced(top);
    SimpleGraph h2 = g.induced(low);
    for (int v = 0; v < h1.vertex_count(); ++v)
        if (h1.degree(v) != 2) return std::nullopt;
    for (int v = 0; v < h2.vertex_count(); ++v)
        if (h2.degree(v) != delta - 1 - n1) return std::nullopt;

    ODeltaSpec spec;
    spec.delta = delta;
    spec.n1 = n1;
    for (const auto& e : h1.edges()) spec.h1_edges.emplace_back(e.u, e.v);
    for (const auto& e : h2.edges()) spec.h2_edges.emplace_back(e.u, e.v);
    return spec;
}

bool odelta_specs_equivalent(const ODeltaSpec& a, const ODeltaSpec& b) {
    if (a.delta != b.delta || a.n1 != b.n1) return false;
    SimpleGraph h1a(a.n1, a.h1_edges), h1b(b.n1, b.h1_edges);
    SimpleGraph h2a(a.h2_order(), a.h2_edges), h2b(b.h2_order(), b.h2_edges);
    return is_isomorphic(h1a, h1b) && is_isomorphic(h2a, h2b);
}

SimpleGraph canonical_regular_graph(int degree, int order) {
    if (degree < 0 || degree >= std::max(order, 1))
        throw std::invalid_argument("no simple regular graph with that degree");
    if (degree * order % 2 != 0)
        throw std::invalid_argument("degree sum must be even");
    std::vector<std::pair<int, int>> edges;
    if (degree == 0) return SimpleGraph(order, edges);
    if (degree == 1) {  // perfect matching
        for (int v = 0; v + 1 < order; v += 2) edges.emplace_back(v, v + 1);
        return SimpleGraph(order, edges);
    }
    // circulant with offsets 1..degree/2, plus the antipode for odd degree
    for (int off = 1; off <= degree / 2; ++off)
        for (int v = 0; v < order; ++v) edges.emplace_back(v, (v + off) % order);
    if (degree % 2 == 1)
        for (int v = 0; v < order / 2; ++v) edges.emplace_back(v, v + order / 2);
    // the loop above generates each offset edge twice when off == order/2
    std::vector<std::pair<int, int>> dedup;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        dedup.emplace_back(u, v);
    }
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    return SimpleGraph(order, dedup);
}

std::vector<SimpleGraph> regular_graphs_up_to_iso(int degree, int order, size_t cap) {
    std::vector<SimpleGraph> out;
    if (degree < 0 || degree >= std::max(order, 1) || (degree * order) % 2 != 0) return out;
    if (order > MaskGraph::kMaxN) throw std::invalid_argument("order too large for enumeration");

    std::vector<MaskGraph> found;
    std::vector<uint64_t> keys;
    MaskGraph work;
    work.n = order;

    // complete the smallest deficient vertex by choosing neighbor sets among
    // higher-indexed vertices; every labeled regular graph appears once
    auto rec = [&](auto&& self) -> void {
        if (out.size() >= cap) return;
        int u = -1;
        for (int v = 0; v < order; ++v)
            if (work.degree(v) < degree) {
                u = v;
                break;
            }
        if (u < 0) {
            uint64_t key = iso_invariant(work);
            for (size_t i = 0; i < found.size(); ++i)
                if (keys[i] == key && is_isomorphic(found[i], work)) return;
            found.push_back(work);
            keys.push_back(key);
            out.push_back(work.to_graph());
            return;
        }
        int need = degree - work.degree(u);
        std::vector<int> cands;
        for (int v = u + 1; v < order; ++v)
            if (!(work.adj[u] >> v & 1) && work.degree(v) < degree) cands.push_back(v);
        if (static_cast<int>(cands.size()) < need) return;
        // choose `need` of the candidates
        std::vector<int> pick(need);
        auto choose = [&](auto&& chooser, int start, int depth) -> void {
            if (out.size() >= cap) return;
            if (depth == need) {
                for (int i = 0; i < need; ++i) {
                    work.adj[u] |= 1u << pick[i];
                    work.adj[pick[i]] |= 1u << u;
                }
                self(self);
                for (int i = 0; i < need; ++i) {
                    work.adj[u] &= ~(1u << pick[i]);
                    work.adj[pick[i]] &= ~(1u << u);
                }
                return;
            }
            for (size_t i = start; i + (need - depth) <= cands.size(); ++i) {
                pick[depth] = cands[i];
                chooser(chooser, static_cast<int>(i) + 1, depth + 1);
            }
        };
        choose(choose, 0, 0);
    };
    rec(rec);
    return out;
}

std::vector<int> feasible_n1(int delta) {
    std::vector<int> out;
    for (int n1 = 3; n1 <= delta - 1; ++n1) {
        if ((n1 + delta - 2) % 2 == 0) continue;
        if ((delta - 1 - n1) * (delta - 2) % 2 != 0) continue;
        out.push_back(n1);
    }
    return out;
}

}  // namespace hz
