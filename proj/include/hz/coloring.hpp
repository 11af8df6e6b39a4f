#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hz/graph.hpp"

namespace hz {

/// Partial proper edge k-coloring. Colors are 1..k; 0 marks an uncolored
/// edge. Missing/present sets are kept incrementally as per-vertex bitmasks
/// (bit c-1 of the mask = color c) and rebuilt only by validate().
///
/// The recoloring machinery works on colorings with at most one uncolored
/// edge; the constructive colorers build through states with more. Single
/// writer; clone to ship a snapshot elsewhere.
class PartialColoring {
public:
    /// Empty coloring over the empty graph; a valid placeholder state.
    PartialColoring();
    /// All edges uncolored. The graph is copied into shared ownership, so a
    /// coloring never outlives its graph; copies of a coloring share it.
    PartialColoring(const SimpleGraph& g, int k);
    PartialColoring(std::shared_ptr<const SimpleGraph> g, int k);
    /// From explicit edge colors (indexed like g.edges()). Throws on an
    /// improper assignment or out-of-range color.
    PartialColoring(const SimpleGraph& g, int k, const std::vector<int>& edge_colors);
    PartialColoring(std::shared_ptr<const SimpleGraph> g, int k,
                    const std::vector<int>& edge_colors);

    const SimpleGraph& graph() const { return *g_; }
    const std::shared_ptr<const SimpleGraph>& graph_ptr() const { return g_; }
    int k() const { return k_; }
    uint64_t version() const { return version_; }

    int color(int edge_id) const { return edge_color_[edge_id]; }
    int color(int u, int v) const;
    const std::vector<int>& edge_colors() const { return edge_color_; }

    /// Colors c with (mask >> (c-1)) & 1 set are present at v.
    uint64_t present_mask(int v) const { return present_[v]; }
    uint64_t missing_mask(int v) const { return ~present_[v] & full_mask(); }
    bool misses(int v, int c) const { return !(present_[v] >> (c - 1) & 1); }
    std::vector<int> missing(int v) const;
    /// The single missing color at v; throws unless |missing(v)| == 1.
    int sole_missing(int v) const;

    int uncolored_count() const { return uncolored_count_; }
    std::vector<int> uncolored_edges() const;
    /// The one uncolored edge; throws unless uncolored_count() == 1.
    int sole_uncolored_edge() const;

    /// Recolors (or uncolors, color = 0) an edge; throws on a properness
    /// violation, leaving the coloring unchanged.
    void set(int edge_id, int c);
    /// Like set, but reports failure instead of throwing.
    bool try_set(int edge_id, int c);

    /// Full re-scan: properness of edge colors plus consistency of the
    /// present/missing caches and the uncolored-edge counter.
    bool validate() const;

    /// Fault-injection hook for validation campaigns: clobbers the cached
    /// present mask of v so validate() has something to catch.
    void inject_cache_fault(int v, uint64_t mask) { present_[v] = mask; }

    bool same_coloring(const PartialColoring& other) const {
        return same_graph(other) && k_ == other.k_ && edge_color_ == other.edge_color_;
    }
    bool same_graph(const PartialColoring& other) const {
        return g_ == other.g_ || *g_ == *other.g_;
    }

    uint64_t full_mask() const { return k_ >= 64 ? ~0ULL : (1ULL << k_) - 1; }

    /// Exchanges the two colors along a chain extracted from this coloring.
    /// Throws std::logic_error if the chain is stale.
    void swap_chain(const struct Chain& chain);

private:
    void set_unchecked(int edge_id, int c);

    std::shared_ptr<const SimpleGraph> g_;
    int k_;
    std::vector<int> edge_color_;
    std::vector<uint64_t> present_;
    int uncolored_count_;
    uint64_t version_ = 0;
};

/// A two-color component: a path (possibly a single vertex) or an even
/// cycle. Snapshot of one coloring version; swapping through a stale
/// snapshot is rejected.
struct Chain {
    enum class Kind { Path, EvenCycle };

    int color_a, color_b;
    Kind kind;
    int start;                  // queried vertex
    std::vector<int> vertices;  // path order; cycles listed from start
    std::vector<int> edge_ids;  // parallel runs of alternating colors
    uint64_t version;

    bool contains_vertex(int v) const;
    bool contains_edge(int edge_id) const;
    bool is_endpoint(int v) const {
        return kind == Kind::Path && !vertices.empty() &&
               (v == vertices.front() || v == vertices.back());
    }
    /// For paths queried from an endpoint, the far end; otherwise throws.
    int other_end() const;
};

/// The two-color component through x. If x misses exactly one of the colors
/// the result is a path starting at x; if x misses both it is the
/// single-vertex degenerate path. Interior/cycle queries orient toward the
/// smaller neighbor first.
Chain chain_through(const PartialColoring& c, int x, int alpha, int beta);

/// True iff x and y lie on the same (alpha,beta)-chain.
bool linked(const PartialColoring& c, int x, int y, int alpha, int beta);

/// For a path chain queried from its endpoint: true iff the chain reaches u
/// strictly before v. Throws if the chain was not queried from an endpoint
/// or u/v are absent.
bool meets_before(const Chain& chain, int u, int v);

/// Exchanges the two colors along the chain. Throws std::logic_error if the
/// chain is stale (coloring mutated since extraction).
PartialColoring kempe_swap(const PartialColoring& c, const Chain& chain);
/// In-place variant.
void kempe_swap_in_place(PartialColoring& c, const Chain& chain);

/// Swap at x with colors beta0 (missing at x), beta1..betat (present at x):
/// t successive chain swaps, each anchored at x. Throws on a precondition
/// violation; the input is never mutated.
PartialColoring multi_swap(const PartialColoring& c, int x, const std::vector<int>& colors);

bool is_elementary(const PartialColoring& c, const std::vector<int>& xs);

/// Scope for stability comparisons: the vertices and edges of a structure.
struct StableScope {
    std::vector<int> vertices;
    std::vector<int> edge_ids;
};

/// True iff c2 agrees with c1 on every missing set of the scope's vertices
/// and every color of the scope's edges. Throws if the two colorings are not
/// over the same graph, k, and uncolored edge set.
bool is_stable(const PartialColoring& c2, const PartialColoring& c1, const StableScope& t);

}  // namespace hz
