#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hz {

/// Undirected simple graph on vertices 0..n-1. Immutable after construction;
/// derived views (degree classes, induced subgraphs) are computed on demand.
class SimpleGraph {
public:
    struct Edge {
        int u, v;  // normalized u < v
        bool operator==(const Edge&) const = default;
    };

    SimpleGraph() = default;

    /// Builds from an edge list. Throws std::invalid_argument on self-loops,
    /// parallel edges, or endpoints outside [0, n).
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const { return delta_; }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    /// Index of edge {u,v} into edges(), or -1 if absent.
    int edge_index(int u, int v) const;
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }

    bool is_connected() const;

    /// Vertices of degree exactly d, ascending.
    std::vector<int> vertices_of_degree(int d) const;
    /// Neighbors of v with degree exactly d, ascending.
    std::vector<int> neighbors_of_degree(int v, int d) const;
    /// Degree multiset, descending.
    std::vector<int> degree_sequence() const;

    /// Induced subgraph on `verts` (need not be sorted). The i-th vertex of
    /// the result corresponds to verts[i]; the mapping is reported through
    /// `back_map` when non-null.
    SimpleGraph induced(const std::vector<int>& verts,
                        std::vector<int>* back_map = nullptr) const;

    SimpleGraph without_edge(int u, int v) const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    int delta_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    // per-vertex, parallel to adj_: id of the edge {v, adj_[v][i]}
    std::vector<std::vector<int>> incident_edge_;
};

/// Degree-class view of a graph: the maximum degree, the vertex classes
/// attaining it and one below it, and the subgraph induced by the top class.
struct DegreeClassView {
    int delta = 0;
    std::vector<int> v_delta;
    std::vector<int> v_delta_minus_1;
    SimpleGraph core_subgraph;
    std::vector<int> core_to_graph;  // core vertex -> original label
};

DegreeClassView core(const SimpleGraph& g);

/// The Petersen graph on its standard labeling (outer 5-cycle 0..4, inner
/// pentagram 5..9, spokes i -- i+5).
SimpleGraph petersen();

/// The Petersen graph minus vertex 0, relabeled to 0..8. Fixed table so that
/// tests are bit-stable.
SimpleGraph petersen_star();

SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph path_graph(int n);

}  // namespace hz
