#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hz/graph.hpp"

namespace hz {

struct ODeltaSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parameters of the join family: a 2-regular H1 on n1 vertices joined
/// completely to a (delta-1-n1)-regular H2 on delta-2 vertices, with
/// n1 + (delta-2) odd.
struct ODeltaSpec {
    int delta = 0;
    int n1 = 0;
    std::vector<std::pair<int, int>> h1_edges;  // on vertices [0, n1)
    std::vector<std::pair<int, int>> h2_edges;  // on vertices [0, delta-2)

    int h2_order() const { return delta - 2; }
    int h2_degree() const { return delta - 1 - n1; }
};

/// Throws ODeltaSpecError describing the violated invariant, if any.
void validate_odelta_spec(const ODeltaSpec& spec);

/// The join: H1 vertices come first (degree delta), H2 vertices after
/// (degree delta-1), all cross edges present.
SimpleGraph build_o_delta(const ODeltaSpec& spec);

/// Inverse of the construction: a spec such that build reproduces g up to
/// the identity relabeling used here, or nullopt if g is not in the family.
std::optional<ODeltaSpec> recognize_o_delta(const SimpleGraph& g);

/// Same family member up to graph isomorphism of the two parts.
bool odelta_specs_equivalent(const ODeltaSpec& a, const ODeltaSpec& b);

/// A fixed d-regular graph on m vertices: disjoint cycles for d = 2, a
/// perfect matching for d = 1, circulants in general. Throws if infeasible.
SimpleGraph canonical_regular_graph(int degree, int order);

/// All d-regular simple graphs on m vertices up to isomorphism (connected or
/// not), deterministic order, at most `cap` of them. Desk scale only.
std::vector<SimpleGraph> regular_graphs_up_to_iso(int degree, int order, size_t cap = 50);

/// All feasible (delta, n1) pairs for a given delta.
std::vector<int> feasible_n1(int delta);

}  // namespace hz
