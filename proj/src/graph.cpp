#include "hz/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hz {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.assign(n, {});
    incident_edge_.assign(n, {});
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        edges_.push_back({u, v});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("parallel edge");
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        const Edge& e = edges_[id];
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        incident_edge_[e.u].push_back(id);
        incident_edge_[e.v].push_back(id);
    }
    for (int v = 0; v < n; ++v) {
        // neighbor lists sorted; edges_ were added in lex order so each
        // adj_[v] is already sorted ascending
        delta_ = std::max(delta_, degree(v));
    }
}

int SimpleGraph::edge_index(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return incident_edge_[u][it - nb.begin()];
}

bool SimpleGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

std::vector<int> SimpleGraph::vertices_of_degree(int d) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == d) out.push_back(v);
    return out;
}

std::vector<int> SimpleGraph::neighbors_of_degree(int v, int d) const {
    std::vector<int> out;
    for (int w : adj_[v])
        if (degree(w) == d) out.push_back(w);
    return out;
}

std::vector<int> SimpleGraph::degree_sequence() const {
    std::vector<int> ds(n_);
    for (int v = 0; v < n_; ++v) ds[v] = degree(v);
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& verts, std::vector<int>* back_map) const {
    std::vector<int> pos(n_, -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
        if (pos[v] >= 0) throw std::invalid_argument("induced: duplicate vertex");
        pos[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> sub_edges;
    for (const Edge& e : edges_)
        if (pos[e.u] >= 0 && pos[e.v] >= 0) sub_edges.emplace_back(pos[e.u], pos[e.v]);
    if (back_map) *back_map = verts;
    return SimpleGraph(static_cast<int>(verts.size()), sub_edges);
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
    int id = edge_index(u, v);
    if (id < 0) throw std::invalid_argument("without_edge: no such edge");
    std::vector<std::pair<int, int>> keep;
    keep.reserve(edges_.size() - 1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
        if (i != id) keep.emplace_back(edges_[i].u, edges_[i].v);
    return SimpleGraph(n_, keep);
}

DegreeClassView core(const SimpleGraph& g) {
    DegreeClassView view;
    view.delta = g.max_degree();
    view.v_delta = g.vertices_of_degree(view.delta);
    view.v_delta_minus_1 = g.vertices_of_degree(view.delta - 1);
    view.core_subgraph = g.induced(view.v_delta, &view.core_to_graph);
    return view;
}

SimpleGraph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, i + 5);                // spokes
    }
    return SimpleGraph(10, e);
}

SimpleGraph petersen_star() {
    SimpleGraph p = petersen();
    std::vector<std::pair<int, int>> e;
    for (const auto& ed : p.edges())
        if (ed.u != 0 && ed.v != 0) e.emplace_back(ed.u - 1, ed.v - 1);
    return SimpleGraph(9, e);
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, e);
}

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return SimpleGraph(n, e);
}

SimpleGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return SimpleGraph(a + b, e);
}

SimpleGraph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph(n, e);
}

}  // namespace hz
