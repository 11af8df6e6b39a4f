#include "hz/oracle.hpp"

#include <algorithm>

namespace hz {

namespace {

// Backtracking over edges. Static mode: a fixed order (min endpoint degree
// descending, then lexicographic), the first processed vertex's edges first
// and, under symmetry breaking, pinned to colors 1, 2, .... Dynamic mode:
// the most constrained uncolored edge next; used when only one coloring is
// wanted and the solution space is thin.
class EdgeColorSearch {
public:
    EdgeColorSearch(const SimpleGraph& g, int k, int skip_edge, bool capacity_bound,
                    uint64_t node_budget, bool dynamic_order)
        : g_(g), k_(k), capacity_bound_(capacity_bound), dynamic_(dynamic_order),
          budget_(node_budget) {
        std::vector<int> ids;
        for (int id = 0; id < g.edge_count(); ++id)
            if (id != skip_edge) ids.push_back(id);
        auto key = [&](int id) {
            const auto& e = g.edge(id);
            return std::tuple(-std::min(g.degree(e.u), g.degree(e.v)), e.u, e.v);
        };
        std::sort(ids.begin(), ids.end(), [&](int a, int b) { return key(a) < key(b); });

        if (!ids.empty()) {
            const auto& first = g.edge(ids[0]);
            first_vertex_ = g.degree(first.u) >= g.degree(first.v) ? first.u : first.v;
            std::stable_partition(ids.begin(), ids.end(), [&](int id) {
                const auto& e = g.edge(id);
                return e.u == first_vertex_ || e.v == first_vertex_;
            });
        }
        order_ = std::move(ids);

        colors_.assign(g.edge_count(), -1);  // -1 marks the skipped edge
        for (int id : order_) colors_[id] = 0;
        used_.assign(g.vertex_count(), 0);
        full_ = k >= 64 ? ~0ULL : (1ULL << k) - 1;
        class_capacity_.assign(k + 1, g.vertex_count() / 2);
        total_capacity_ = static_cast<long>(k) * (g.vertex_count() / 2);

        incident_.assign(g.vertex_count(), {});
        for (int id : order_) {
            const auto& e = g.edge(id);
            incident_[e.u].push_back(id);
            incident_[e.v].push_back(id);
        }
    }

    void enable_symmetry_breaking() {
        if (dynamic_ || first_vertex_ < 0) return;
        size_t incident = 0;
        for (size_t pos = 0; pos < order_.size(); ++pos) {
            const auto& e = g_.edge(order_[pos]);
            if (e.u == first_vertex_ || e.v == first_vertex_)
                ++incident;
            else
                break;
        }
        pin_count_ = incident;
    }

    uint64_t nodes() const { return nodes_; }

    // dfs; calls sink with a 0-for-skipped color vector on every complete
    // coloring, stops when sink returns false. Returns false iff stopped.
    bool run(const std::function<bool(const std::vector<int>&)>& sink) {
        sink_ = &sink;
        return dfs(0);
    }

private:
    uint64_t avail_mask(int id) const {
        const auto& e = g_.edge(id);
        return ~(used_[e.u] | used_[e.v]) & full_;
    }

    bool dfs(size_t pos) {
        if (pos == order_.size()) {
            std::vector<int> out(colors_);
            for (int& c : out)
                if (c < 0) c = 0;
            return (*sink_)(out);
        }
        if (capacity_bound_ && total_capacity_ < static_cast<long>(order_.size() - pos))
            return true;  // not enough matching capacity left

        if (dynamic_ && pos >= pin_count_) {
            size_t best = pos;
            int best_count = 65;
            for (size_t i = pos; i < order_.size(); ++i) {
                int cnt = __builtin_popcountll(avail_mask(order_[i]));
                if (cnt < best_count) {
                    best_count = cnt;
                    best = i;
                    if (cnt <= 1) break;
                }
            }
            std::swap(order_[pos], order_[best]);
            bool keep = branch(pos);
            std::swap(order_[pos], order_[best]);
            return keep;
        }
        return branch(pos);
    }

    bool branch(size_t pos) {
        const int id = order_[pos];
        const auto& e = g_.edge(id);
        uint64_t avail = avail_mask(id);
        if (pos < pin_count_) avail &= 1ULL << pos;  // pinned color
        while (avail) {
            int c = __builtin_ctzll(avail) + 1;
            uint64_t bit = avail & -avail;
            avail ^= bit;
            if (++nodes_ > budget_) throw BudgetExceeded("edge-coloring search budget exhausted");
            if (capacity_bound_ && class_capacity_[c] == 0) continue;

            colors_[id] = c;
            used_[e.u] |= bit;
            used_[e.v] |= bit;
            --class_capacity_[c];
            --total_capacity_;

            if (!wipeout(e.u, e.v)) {
                if (!dfs(pos + 1)) return false;
            }

            colors_[id] = 0;
            used_[e.u] &= ~bit;
            used_[e.v] &= ~bit;
            ++class_capacity_[c];
            ++total_capacity_;
        }
        return true;
    }

    // an uncolored edge at u or v with no color left kills the branch
    bool wipeout(int u, int v) const {
        for (int w : {u, v})
            for (int id : incident_[w])
                if (colors_[id] == 0 && avail_mask(id) == 0) return true;
        return false;
    }

    const SimpleGraph& g_;
    int k_;
    bool capacity_bound_;
    bool dynamic_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    int first_vertex_ = -1;
    size_t pin_count_ = 0;
    uint64_t full_ = 0;
    long total_capacity_ = 0;
    std::vector<int> order_;
    std::vector<int> colors_;
    std::vector<uint64_t> used_;
    std::vector<int> class_capacity_;
    std::vector<std::vector<int>> incident_;
    const std::function<bool(const std::vector<int>&)>* sink_ = nullptr;
};

}  // namespace

std::optional<std::vector<int>> find_edge_coloring(const SimpleGraph& g, int k, int skip_edge_id,
                                                   uint64_t node_budget, uint64_t* nodes_explored,
                                                   bool use_capacity_bound, bool dynamic_order) {
    EdgeColorSearch search(g, k, skip_edge_id, use_capacity_bound, node_budget, dynamic_order);
    search.enable_symmetry_breaking();
    std::optional<std::vector<int>> found;
    search.run([&](const std::vector<int>& colors) {
        found = colors;
        return false;
    });
    if (nodes_explored) *nodes_explored += search.nodes();
    return found;
}

EnumStatus enumerate_edge_colorings(const SimpleGraph& g, int k, int skip_edge_id,
                                    const std::function<bool(const std::vector<int>&)>& cb,
                                    uint64_t node_budget) {
    EdgeColorSearch search(g, k, skip_edge_id, true, node_budget, false);
    search.enable_symmetry_breaking();
    try {
        bool complete = search.run(cb);
        return complete ? EnumStatus::Complete : EnumStatus::StoppedByCallback;
    } catch (const BudgetExceeded&) {
        return EnumStatus::BudgetExhausted;
    }
}

OracleResult chromatic_index_exact(const SimpleGraph& g, const OracleOptions& opts) {
    const int delta = g.max_degree();
    OracleResult res{delta, PartialColoring(g, delta), 0};
    if (g.edge_count() == 0) return res;

    auto at_delta = find_edge_coloring(g, delta, -1, opts.node_budget, &res.nodes_explored,
                                       opts.use_capacity_bound);
    if (at_delta) {
        res.chi_prime = delta;
        res.witness = PartialColoring(g, delta, *at_delta);
        return res;
    }
    uint64_t remaining = opts.node_budget > res.nodes_explored
                             ? opts.node_budget - res.nodes_explored
                             : 0;
    auto at_delta1 = find_edge_coloring(g, delta + 1, -1, remaining, &res.nodes_explored,
                                        opts.use_capacity_bound);
    if (!at_delta1) throw std::logic_error("no (Delta+1)-coloring found; this cannot happen");
    res.chi_prime = delta + 1;
    res.witness = PartialColoring(g, delta + 1, *at_delta1);
    return res;
}

// ---------------------------------------------------------------------------
// constructive colorers

namespace {

// One fan-rotation step: colors the uncolored edge (u,v), possibly after a
// chain inversion. Mutates c only on success. With k >= Delta+1 this always
// succeeds; with k == Delta it may dead-end (returns false).
bool fan_extend(PartialColoring& c, int u, int v) {
    const SimpleGraph& g = c.graph();
    PartialColoring work = c;

    std::vector<int> fan{v};
    std::vector<char> in_fan(g.vertex_count(), 0);
    in_fan[v] = 1;
    for (bool extended = true; extended;) {
        extended = false;
        for (int w : g.neighbors(u)) {
            if (in_fan[w]) continue;
            int col = work.color(g.edge_index(u, w));
            if (col == 0) continue;
            if (work.misses(fan.back(), col)) {
                fan.push_back(w);
                in_fan[w] = 1;
                extended = true;
                break;
            }
        }
    }

    uint64_t mu = work.missing_mask(u);
    if (!mu) return false;
    int cu = __builtin_ctzll(mu) + 1;
    uint64_t ml = work.missing_mask(fan.back());
    if (!ml) return false;
    int d = __builtin_ctzll(ml) + 1;

    if (!work.misses(u, d)) {
        Chain chain = chain_through(work, u, cu, d);
        kempe_swap_in_place(work, chain);
        if (!work.misses(u, d)) return false;
    }
    size_t w_idx = fan.size();
    for (size_t i = 0; i < fan.size(); ++i)
        if (work.misses(fan[i], d)) {
            w_idx = i;
            break;
        }
    if (w_idx == fan.size()) return false;

    // rotate the fan prefix: each edge takes its successor's color, the last
    // one takes d
    std::vector<int> cols(w_idx + 1);
    for (size_t j = 1; j <= w_idx; ++j) cols[j] = work.color(g.edge_index(u, fan[j]));
    if (w_idx > 0 && !work.try_set(g.edge_index(u, fan[w_idx]), 0)) return false;
    for (size_t j = w_idx; j >= 1; --j)
        if (!work.try_set(g.edge_index(u, fan[j - 1]), cols[j])) return false;
    if (!work.try_set(g.edge_index(u, fan[w_idx]), d)) return false;

    c = std::move(work);
    return true;
}

}  // namespace

PartialColoring vizing_plus_one_coloring(const SimpleGraph& g) {
    const int k = g.max_degree() + 1;
    PartialColoring c(g, k);
    for (int id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        uint64_t avail = c.missing_mask(e.u) & c.missing_mask(e.v);
        if (avail) {
            c.set(id, __builtin_ctzll(avail) + 1);
            continue;
        }
        if (!fan_extend(c, e.u, e.v) && !fan_extend(c, e.v, e.u))
            throw std::logic_error("fan rotation failed with Delta+1 colors; this cannot happen");
    }
    if (!c.validate() || c.uncolored_count() != 0)
        throw std::logic_error("constructive coloring left an invalid state");
    return c;
}

PartialColoring delta_edge_color(const SimpleGraph& g, DeltaColorStats* stats,
                                 uint64_t fallback_budget) {
    const int delta = g.max_degree();
    DeltaColorStats local;
    DeltaColorStats& st = stats ? *stats : local;

    PartialColoring c(g, delta);
    bool stuck = false;
    for (int id = 0; id < g.edge_count() && !stuck; ++id) {
        const auto& e = g.edge(id);
        uint64_t avail = c.missing_mask(e.u) & c.missing_mask(e.v);
        if (avail) {
            c.set(id, __builtin_ctzll(avail) + 1);
            ++st.greedy_colored;
            continue;
        }
        ++st.repairs_attempted;
        if (fan_extend(c, e.u, e.v) || fan_extend(c, e.v, e.u)) {
            ++st.repairs_succeeded;
            continue;
        }
        stuck = true;
    }
    if (!stuck) {
        if (!c.validate()) throw std::logic_error("delta coloring left an invalid state");
        return c;
    }

    st.used_fallback = true;
    auto full = find_edge_coloring(g, delta, -1, fallback_budget, nullptr, true, true);
    if (!full) throw std::runtime_error("graph admits no Delta-edge-coloring");
    return PartialColoring(g, delta, *full);
}

}  // namespace hz
