#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hz/coloring.hpp"
#include "hz/graph.hpp"
#include "hz/rng.hpp"

namespace hz {

/// A graph G, an edge r-s1 from a maximum-degree vertex r to a neighbor of
/// degree Delta-1, and a proper Delta-coloring of G - rs1 (rs1 is the one
/// uncolored edge).
struct ColoringTriple {
    int r = -1;
    int s1 = -1;
    PartialColoring coloring;

    const SimpleGraph& graph() const { return coloring.graph(); }
    int k() const { return coloring.k(); }

    /// Validates d(r) = Delta, d(s1) = Delta-1, k = Delta, rs1 the sole
    /// uncolored edge, coloring proper. Throws std::invalid_argument.
    static ColoringTriple make(int r, int s1, PartialColoring coloring);
};

/// Multifan at r: spokes s_1..s_p, rs_1 uncolored, and every later spoke's
/// edge color missed somewhere earlier in the sequence. All spokes have
/// degree Delta-1.
struct Multifan {
    const ColoringTriple* triple = nullptr;
    std::vector<int> spokes;

    int center() const { return triple->r; }
    std::vector<int> vertex_set() const;  // r + spokes
    std::vector<int> edge_ids() const;    // rs_1..rs_p
    StableScope scope() const;
};

/// Greedy closure from the triple's s1: repeatedly appends the
/// lowest-indexed unused degree-(Delta-1) neighbor whose edge color is
/// missed by the current vertex set. Maximal for this coloring.
Multifan grow_multifan(const ColoringTriple& t);

bool validate_multifan(const Multifan& f, std::string* why = nullptr);

/// Multifan in normalized form: missing(r) = {1}, missing(s_1) = {2, Delta},
/// the 2-run s_2..s_alpha carries edge colors 2..alpha, the Delta-run
/// s_{alpha+1}..s_beta carries Delta, alpha+2..beta, and missing colors
/// follow suit. Owns the renamed coloring.
struct TypicalMultifan {
    ColoringTriple triple;
    std::vector<int> spokes;  // reordered; spokes[0] == triple.s1
    int alpha = 1;
    int beta = 1;
    std::vector<int> color_perm;  // old color c -> color_perm[c]; index 0 unused

    Multifan as_multifan() const { return Multifan{&triple, spokes}; }
    int spoke(int i) const { return spokes[i - 1]; }  // s_i, 1-indexed
    bool two_inducing() const { return alpha == beta; }
};

bool validate_typical(const TypicalMultifan& f, std::string* why = nullptr);

/// Renames colors and reorders spokes so the fan is typical. The longer
/// inducing run becomes the 2-run (ties toward the smaller original color).
/// Throws std::invalid_argument if the fan's vertex set is not elementary.
TypicalMultifan normalize_typical(const Multifan& f);

/// Inducer bookkeeping for the missing colors of a typical multifan:
/// which of the two colors of missing(s_1) roots each color, its position
/// along that run, and the induced strict order within a run.
class InducingStructure {
public:
    explicit InducingStructure(const TypicalMultifan& f);

    int alpha() const { return alpha_; }
    int beta() const { return beta_; }
    int delta() const { return delta_; }

    bool is_fan_missing_color(int c) const;  // c in missing(V(F))
    /// 2 or Delta. Color 1 (missing at the center) has no inducer; throws.
    int inducer_of(int c) const;
    /// 0 for the two roots at s_1, else the run position of the spoke
    /// missing c.
    int position_of(int c) const;
    bool comparable(int c1, int c2) const;
    bool precedes(int c1, int c2) const;  // strict, within one run
    int last_inducing_color(int inducer) const;
    std::vector<int> missing_colors() const;
    std::vector<int> inducing_colors(int inducer) const;  // run order

private:
    int alpha_, beta_, delta_;
};

InducingStructure inducing_structure(const TypicalMultifan& f);

/// Bulk recoloring: every rs along the run simultaneously takes the color
/// its spoke misses. Transactional: on a properness violation nothing is
/// changed and the failing run index is reported.
struct ShiftResult {
    std::optional<PartialColoring> coloring;
    int failed_index = -1;
    std::string message;
    bool ok() const { return coloring.has_value(); }
};

ShiftResult shift(const PartialColoring& c, int r, const std::vector<int>& run);

/// What a maximum-multifan search actually covered. exhaustive means every
/// coloring of G - rs was enumerated (up to color permutation, which fan
/// size is invariant under) for every eligible s; otherwise best_size is
/// only a lower bound.
struct MaxFanCertificate {
    bool exhaustive = false;
    uint64_t colorings_examined = 0;
    int best_size = 0;
};

struct MaxFanSearchResult {
    ColoringTriple triple;
    std::vector<int> spokes;
    MaxFanCertificate certificate;

    Multifan fan() const { return Multifan{&triple, spokes}; }
};

/// Best multifan at r over all degree-(Delta-1) neighbors s and a budgeted
/// set of colorings of G - rs. budget counts enumerated colorings; 0 means
/// one greedy fan from the first coloring found per s.
MaxFanSearchResult search_maximum_multifan(const SimpleGraph& g, int r, uint64_t budget);

/// Kierstead path v_0, v_0v_1, v_1, ..., v_p: each later edge's color is
/// missed at a strictly earlier vertex.
struct KiersteadPath {
    const ColoringTriple* triple = nullptr;
    std::vector<int> vertices;  // v_0..v_p
};

/// The 4-vertex path (r, rs_1, s_1, s_1v2, v2, v2v3, v3). Throws
/// std::invalid_argument naming the first failing edge index.
KiersteadPath build_kierstead_path(const ColoringTriple& t, int v2, int v3);

bool validate_kierstead_path(const KiersteadPath& k, std::string* why = nullptr);

/// Maximum multifan extended by further degree-(Delta-1) neighbors of r that
/// keep the whole vertex set elementary under stable recolorings.
struct TypicalPseudoMultifan {
    TypicalMultifan fan;
    std::vector<int> tail;  // s_{t+1}..s_p
    MaxFanCertificate certificate;

    int t() const { return static_cast<int>(fan.spokes.size()); }
    int p() const { return t() + static_cast<int>(tail.size()); }
    std::vector<int> all_spokes() const;
    std::vector<int> vertex_set() const;  // r + all spokes
};

/// Samples colorings stable on `scope`, generated from `base` by random
/// Kempe swaps whose path endpoints avoid scope vertices, rejection-tested
/// for stability. fixed_color pins one of the two swap colors (0 = free);
/// forbidden_endpoints defaults to the scope's vertices.
std::vector<PartialColoring> sample_stable_colorings(const PartialColoring& base,
                                                     const StableScope& scope, int count,
                                                     int max_swaps, SplitMix64 rng,
                                                     int fixed_color = 0,
                                                     const std::vector<int>* forbidden_endpoints = nullptr);

struct PseudoFanReport {
    bool certificate_present = false;
    bool base_elementary = false;
    int samples_run = 0;
    int violations = 0;
    std::vector<PartialColoring> violating_colorings;  // first few, replayable
    bool pass() const { return certificate_present && base_elementary && violations == 0; }
};

PseudoFanReport validate_pseudo_multifan(const TypicalPseudoMultifan& s, int sample_count,
                                         SplitMix64 rng);

/// Cyclically consistent family w_1..w_t: the edge color of each w equals
/// the color missing at its predecessor (wrapping around).
struct Rotation {
    enum class Flavor { Plain, Stable, NearStable };
    std::vector<int> vertices;
    Flavor flavor = Flavor::Plain;
};

bool validate_rotation(const PartialColoring& c, int r, const Rotation& rot, std::string* why = nullptr);

/// Partitions the tail of a full-span pseudo-multifan (p = Delta-2) by
/// following the successor map. A tail vertex whose successor chase leaves
/// the tail is a structural failure, reported rather than dropped.
struct RotationPartition {
    std::vector<Rotation> rotations;
    bool structural_failure = false;
    std::string failure_detail;
};

RotationPartition find_rotations(const TypicalPseudoMultifan& s);

/// Pendant r-u-x on a typical multifan: u a maximum-degree neighbor of r,
/// x a degree-(Delta-1) neighbor of u outside the fan.
struct Lollipop {
    int u = -1;
    int x = -1;
    bool ru_color_is_alpha_plus_1 = false;
    bool x_misses_alpha_plus_1 = false;
};

Lollipop build_lollipop(const TypicalMultifan& f, int u, int x);

/// Turns a typical pseudo-multifan whose fan has a nonempty Delta-run into
/// an equivalent one that is purely 2-inducing: uncolor rs_beta, shift the
/// Delta-run below it, color rs_1 with Delta, then rename. The inverse
/// script undoes the transformation bit-exactly.
struct Make2InducingResult {
    bool changed = false;
    PartialColoring transformed;        // before renaming; rs_beta uncolored
    std::vector<int> new_spokes;        // fan spokes in the new order
    TypicalPseudoMultifan normalized;   // typical 2-inducing
};

Make2InducingResult make_2_inducing(const TypicalPseudoMultifan& s);

/// Applies the inverse transformation to a coloring produced by
/// make_2_inducing, restoring the original. Defined by the same run of
/// spokes that the forward direction shifted.
PartialColoring undo_make_2_inducing(const PartialColoring& transformed,
                                     const TypicalPseudoMultifan& original);

}  // namespace hz
