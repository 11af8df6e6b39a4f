#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hz/graph.hpp"

namespace hz {

/// Bitmask adjacency for graphs on at most 12 vertices; the representation
/// the small-graph enumerator and isomorphism tests run on.
struct MaskGraph {
    int n = 0;
    std::array<uint16_t, 12> adj{};

    static constexpr int kMaxN = 12;

    static MaskGraph of(const SimpleGraph& g);
    SimpleGraph to_graph() const;

    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const;
    bool connected() const;

    bool operator==(const MaskGraph&) const = default;
};

/// Isomorphism-invariant hash. Equal graphs (up to relabeling) hash equal;
/// unequal hashes certify non-isomorphism. Collisions between non-isomorphic
/// graphs are possible and resolved by is_isomorphic.
uint64_t iso_invariant(const MaskGraph& g);
uint64_t iso_invariant(const SimpleGraph& g);

/// Refined per-vertex color classes (same value = not distinguished by the
/// refinement). Stable under isomorphism.
std::vector<uint64_t> vertex_invariants(const MaskGraph& g);

/// Exact isomorphism test by color-guided backtracking. Intended for graphs
/// up to MaskGraph::kMaxN vertices.
bool is_isomorphic(const MaskGraph& a, const MaskGraph& b);
bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace hz
