#include "hz/script.hpp"

#include <algorithm>

#include "hz/fans.hpp"

namespace hz {

ScriptStep ScriptStep::swap_chain_at(int x, int alpha, int beta) {
    ScriptStep s;
    s.kind = Kind::SwapChainAt;
    s.x = x;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

ScriptStep ScriptStep::swap_subchain(int x, int y, int alpha, int beta) {
    ScriptStep s;
    s.kind = Kind::SwapSubchain;
    s.x = x;
    s.y = y;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

ScriptStep ScriptStep::shift_run(int center, std::vector<int> run) {
    ScriptStep s;
    s.kind = Kind::Shift;
    s.center = center;
    s.run = std::move(run);
    return s;
}

ScriptStep ScriptStep::set_edge(int u, int v, int color) {
    ScriptStep s;
    s.kind = Kind::SetEdge;
    s.edge_u = u;
    s.edge_v = v;
    s.color = color;
    return s;
}

ScriptStep ScriptStep::multi_swap_at(int x, std::vector<int> colors) {
    ScriptStep s;
    s.kind = Kind::MultiSwap;
    s.x = x;
    s.colors = std::move(colors);
    return s;
}

namespace {

// swap colors on the subchain between x and y of a path chain; the ends of
// the subchain may end up improper, which the caller's validation catches
bool swap_subchain_step(PartialColoring& c, const ScriptStep& st, std::string& msg) {
    if (st.alpha == st.beta) {
        msg = "subchain colors must differ";
        return false;
    }
    Chain chain = chain_through(c, st.x, st.alpha, st.beta);
    if (chain.kind != Chain::Kind::Path) {
        msg = "subchain swap requires a path chain";
        return false;
    }
    auto px = std::find(chain.vertices.begin(), chain.vertices.end(), st.x);
    auto py = std::find(chain.vertices.begin(), chain.vertices.end(), st.y);
    if (px == chain.vertices.end() || py == chain.vertices.end()) {
        msg = "subchain endpoints not on one chain";
        return false;
    }
    size_t i = px - chain.vertices.begin(), j = py - chain.vertices.begin();
    if (i > j) std::swap(i, j);
    // edges between vertex positions i..j are edge_ids[i..j-1]; the whole
    // subchain flips at once
    std::vector<std::pair<int, int>> wants;
    for (size_t e = i; e < j; ++e) {
        int id = chain.edge_ids[e];
        int col = c.color(id);
        wants.emplace_back(id, col == st.alpha ? st.beta : st.alpha);
    }
    for (auto [id, want] : wants) c.set(id, 0);
    for (auto [id, want] : wants) {
        if (!c.try_set(id, want)) {
            msg = "subchain swap made the coloring improper";
            return false;
        }
    }
    return true;
}

}  // namespace

ScriptResult apply_script(const PartialColoring& c, const RecolorScript& script) {
    ScriptResult res;
    PartialColoring work = c;
    for (size_t idx = 0; idx < script.steps.size(); ++idx) {
        const ScriptStep& st = script.steps[idx];
        std::string msg;
        bool ok = true;
        try {
            switch (st.kind) {
                case ScriptStep::Kind::SwapChainAt: {
                    if (st.alpha == st.beta) break;  // an (a,a)-swap does nothing
                    Chain chain = chain_through(work, st.x, st.alpha, st.beta);
                    kempe_swap_in_place(work, chain);
                    break;
                }
                case ScriptStep::Kind::SwapSubchain:
                    ok = swap_subchain_step(work, st, msg);
                    break;
                case ScriptStep::Kind::Shift: {
                    ShiftResult sh = shift(work, st.center, st.run);
                    if (!sh.ok()) {
                        ok = false;
                        msg = "shift failed at run index " + std::to_string(sh.failed_index) +
                              ": " + sh.message;
                    } else {
                        work = std::move(*sh.coloring);
                    }
                    break;
                }
                case ScriptStep::Kind::SetEdge: {
                    int id = work.graph().edge_index(st.edge_u, st.edge_v);
                    if (id < 0) {
                        ok = false;
                        msg = "no such edge";
                    } else if (!work.try_set(id, st.color)) {
                        ok = false;
                        msg = "edge recoloring violates properness";
                    }
                    break;
                }
                case ScriptStep::Kind::MultiSwap:
                    work = multi_swap(work, st.x, st.colors);
                    break;
            }
        } catch (const std::exception& e) {
            ok = false;
            msg = e.what();
        }
        if (ok && !work.validate()) {
            ok = false;
            msg = "coloring left improper";
        }
        if (!ok) {
            res.error = ScriptError{static_cast<int>(idx), msg};
            return res;
        }
    }
    res.coloring = std::move(work);
    return res;
}

}  // namespace hz
