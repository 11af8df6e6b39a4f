#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hz/coloring.hpp"

namespace hz {

/// One step of a recoloring script. Scripts mirror the two-row operation
/// matrices used to describe recolorings: swap a chain anchored at a vertex,
/// swap only the subchain between two vertices, shift a run of spokes at a
/// center, recolor or uncolor a single edge, or run a multi-swap.
struct ScriptStep {
    enum class Kind { SwapChainAt, SwapSubchain, Shift, SetEdge, MultiSwap };

    Kind kind;
    int x = -1, y = -1;         // vertices (SwapChainAt, SwapSubchain, MultiSwap)
    int alpha = 0, beta = 0;    // chain colors
    int center = -1;            // Shift
    std::vector<int> run;       // Shift
    int edge_u = -1, edge_v = -1, color = 0;  // SetEdge (color 0 = uncolor)
    std::vector<int> colors;    // MultiSwap

    static ScriptStep swap_chain_at(int x, int alpha, int beta);
    static ScriptStep swap_subchain(int x, int y, int alpha, int beta);
    static ScriptStep shift_run(int center, std::vector<int> run);
    static ScriptStep set_edge(int u, int v, int color);
    static ScriptStep multi_swap_at(int x, std::vector<int> colors);
};

struct RecolorScript {
    std::vector<ScriptStep> steps;
};

struct ScriptError {
    int step_index;
    std::string message;
};

struct ScriptResult {
    std::optional<PartialColoring> coloring;
    std::optional<ScriptError> error;

    bool ok() const { return coloring.has_value(); }
};

/// Runs the script transactionally: the full post-script coloring, or the
/// index of the first failing step. The input coloring is never mutated.
/// Properness is revalidated after every step.
ScriptResult apply_script(const PartialColoring& c, const RecolorScript& script);

}  // namespace hz
