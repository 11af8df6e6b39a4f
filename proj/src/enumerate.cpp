#include "hz/enumerate.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hz {

namespace {

struct Level {
    std::vector<MaskGraph> graphs;  // insertion order = emission order
    std::unordered_map<uint64_t, std::vector<int>> buckets;

    bool insert(const MaskGraph& g) {
        uint64_t key = iso_invariant(g);
        auto& bucket = buckets[key];
        for (int idx : bucket)
            if (is_isomorphic(graphs[idx], g)) return false;
        bucket.push_back(static_cast<int>(graphs.size()));
        graphs.push_back(g);
        return true;
    }
};

}  // namespace

void enumerate_connected(int max_n, const std::function<void(const MaskGraph&)>& yield,
                         int min_n) {
    if (max_n < 1) return;
    if (max_n > MaskGraph::kMaxN) throw std::invalid_argument("enumerate_connected: n too large");

    Level prev;
    MaskGraph k1;
    k1.n = 1;
    prev.graphs.push_back(k1);
    if (min_n <= 1) yield(k1);

    for (int n = 2; n <= max_n; ++n) {
        Level cur;
        const uint16_t all_subsets = static_cast<uint16_t>(1u << (n - 1));
        for (const MaskGraph& parent : prev.graphs) {
            MaskGraph child = parent;
            child.n = n;
            for (uint16_t subset = 1; subset < all_subsets; ++subset) {
                child.adj[n - 1] = subset;
                for (int v = 0; v < n - 1; ++v) {
                    if (subset >> v & 1)
                        child.adj[v] |= static_cast<uint16_t>(1u << (n - 1));
                    else
                        child.adj[v] &= static_cast<uint16_t>(~(1u << (n - 1)));
                }
                cur.insert(child);
            }
        }
        if (n >= min_n)
            for (const MaskGraph& g : cur.graphs) yield(g);
        prev = std::move(cur);
    }
}

bool mask_is_hz_candidate(const MaskGraph& g) {
    if (g.n < 2 || g.edge_count() < 1) return false;
    int delta = 0;
    for (int v = 0; v < g.n; ++v) delta = std::max(delta, g.degree(v));
    uint16_t core_mask = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == delta) core_mask |= static_cast<uint16_t>(1u << v);
    for (int v = 0; v < g.n; ++v)
        if ((core_mask >> v & 1) && __builtin_popcount(g.adj[v] & core_mask) > 2) return false;
    return true;  // connectivity guaranteed by the generator; callers check otherwise
}

void enumerate_hz_candidates(int max_n, const std::function<void(const SimpleGraph&)>& yield,
                             bool allow_slow) {
    if (max_n > 10) throw std::invalid_argument("enumeration is capped at n = 10");
    if (max_n == 10 && !allow_slow)
        throw std::invalid_argument("n = 10 enumeration must be enabled explicitly");
    enumerate_connected(max_n, [&](const MaskGraph& g) {
        if (mask_is_hz_candidate(g)) yield(g.to_graph());
    });
}

}  // namespace hz
