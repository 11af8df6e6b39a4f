#pragma once

#include <functional>

#include "hz/graph.hpp"
#include "hz/iso.hpp"

namespace hz {

/// Streams all connected graphs up to isomorphism with min_n <= n <= max_n,
/// ascending in n, in a deterministic order. Built level by level: each
/// connected graph on n vertices is some (n-1)-vertex connected graph plus
/// one vertex attached to a nonempty subset, deduplicated by invariant
/// hashing plus exact isomorphism tests.
void enumerate_connected(int max_n, const std::function<void(const MaskGraph&)>& yield,
                         int min_n = 1);

/// Connected graphs with at least one edge whose core has maximum degree at
/// most 2, up to isomorphism, n <= max_n. max_n is capped at 10 and n = 10
/// must be opted into with allow_slow.
void enumerate_hz_candidates(int max_n, const std::function<void(const SimpleGraph&)>& yield,
                             bool allow_slow = false);

/// The candidate filter on the mask representation.
bool mask_is_hz_candidate(const MaskGraph& g);

}  // namespace hz
