#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hz/coloring.hpp"
#include "hz/graph.hpp"

namespace hz {

/// Search gave up before deciding. Never a wrong answer: callers see this
/// exception, not a guess.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    uint64_t node_budget = 100'000'000;
    /// Admissible counting bound: k color classes are matchings, so at most
    /// k*floor(n/2) edges are colorable. Prunes without affecting exactness.
    bool use_capacity_bound = true;
};

struct OracleResult {
    int chi_prime = 0;  // Delta or Delta+1
    PartialColoring witness;
    uint64_t nodes_explored = 0;
};

/// Exact chromatic index by backtracking over edges (most-constrained static
/// order, colors pinned at the first processed vertex). Intended for desk
/// scale (n <= 12 or so).
OracleResult chromatic_index_exact(const SimpleGraph& g, const OracleOptions& opts = {});

/// First proper k-coloring in a deterministic order, or nullopt if none
/// exists. skip_edge_id >= 0 leaves that edge uncolored (coloring of G - e).
/// dynamic_order picks the most constrained edge next, which finds colorings
/// of tight instances far faster; the default static order matches the
/// oracle. Throws BudgetExceeded.
std::optional<std::vector<int>> find_edge_coloring(const SimpleGraph& g, int k, int skip_edge_id,
                                                   uint64_t node_budget,
                                                   uint64_t* nodes_explored = nullptr,
                                                   bool use_capacity_bound = true,
                                                   bool dynamic_order = false);

enum class EnumStatus { Complete, StoppedByCallback, BudgetExhausted };

/// Enumerates complete proper k-colorings of g (minus the skipped edge), up
/// to color permutation: the first processed vertex's edge colors are
/// pinned, so each permutation class yields at least one representative.
/// The callback returns false to stop early.
EnumStatus enumerate_edge_colorings(const SimpleGraph& g, int k, int skip_edge_id,
                                    const std::function<bool(const std::vector<int>&)>& cb,
                                    uint64_t node_budget = UINT64_MAX);

/// Complete proper (Delta+1)-coloring built edge by edge with fan rotations
/// and chain swaps. No search.
PartialColoring vizing_plus_one_coloring(const SimpleGraph& g);

struct DeltaColorStats {
    int greedy_colored = 0;
    int repairs_attempted = 0;
    int repairs_succeeded = 0;
    bool used_fallback = false;
};

/// Complete proper Delta-coloring. Caller asserts one exists (the classifier
/// says Class 1); greedy extension with fan repair, bounded backtracking as
/// a fallback. Throws BudgetExceeded or std::runtime_error if the graph has
/// no Delta-coloring after all.
PartialColoring delta_edge_color(const SimpleGraph& g, DeltaColorStats* stats = nullptr,
                                 uint64_t fallback_budget = 100'000'000);

}  // namespace hz
