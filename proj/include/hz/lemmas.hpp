#pragma once

#include <string>
#include <vector>

#include "hz/fans.hpp"

namespace hz {

enum class CheckOutcome { Pass, Vacuous, Fail };

std::string to_string(CheckOutcome o);

struct LemmaFinding {
    std::string check;
    CheckOutcome outcome = CheckOutcome::Vacuous;
    std::string detail;  // failure witness or vacuity reason
};

/// Every evaluator re-derives its hypotheses and returns Vacuous when they
/// do not hold, so misconstructed instances cannot raise false alarms.
/// `class2` is caller-certified (overfull, or an exact-oracle verdict).

// Fan vertex sets are elementary.
LemmaFinding check_multifan_elementary(const Multifan& f, bool class2);
// The center and each spoke are (a,b)-linked for a missing at the center, b
// missing at the spoke.
LemmaFinding check_multifan_center_linked(const Multifan& f, bool class2);

// Missing colors rooted at different colors of missing(s_1): their spokes
// are chain-linked.
LemmaFinding check_cross_inducing_linked(const TypicalMultifan& f, bool class2);
// Same root, earlier before later, unlinked: the later spoke's chain passes
// through the center.
LemmaFinding check_same_inducing_unlinked_via_center(const TypicalMultifan& f, bool class2);

// 4-vertex Kierstead paths with an interior vertex below maximum degree.
LemmaFinding check_kierstead_elementary(const KiersteadPath& k, bool class2);
LemmaFinding check_kierstead_ends_linked(const KiersteadPath& k, bool class2);

// Full-span pseudo-multifans (p = Delta-2): the tail partitions into
// rotations; tail vertices link to the center through color 1; chain
// geometry through the center.
LemmaFinding check_tail_rotation_partition(const TypicalPseudoMultifan& s, bool class2);
LemmaFinding check_tail_center_linked(const TypicalPseudoMultifan& s, bool class2);
LemmaFinding check_fan_chain_through_center(const TypicalPseudoMultifan& s, bool class2);
LemmaFinding check_tail_pair_chain(const TypicalPseudoMultifan& s, bool class2);

// Lollipop with pendant edge colored alpha+1 and x missing alpha+1.
LemmaFinding check_pendant_edge_on_center_chain(const TypicalMultifan& f, const Lollipop& l,
                                                bool class2);
LemmaFinding check_pendant_chain_ends_at_center(const TypicalMultifan& f, const Lollipop& l,
                                                bool class2);

// Purely 2-inducing fans: non-adjacency of u to named spokes, by the color
// of ux.
LemmaFinding check_pendant_top_color_nonadjacency(const TypicalMultifan& f, const Lollipop& l,
                                                  bool class2);
LemmaFinding check_pendant_run_color_nonadjacency(const TypicalMultifan& f, const Lollipop& l,
                                                  bool class2);

/// Successor chase from a tail vertex w1 with edge color in [beta+2,
/// Delta-1]: ends in a closed rotation (missing color returns to the start's
/// edge color), at a vertex missing alpha+1, or neither. Which branch occurs
/// is recorded as data; linkedness of the visited vertices to the center is
/// verified along the way.
struct RotationChaseResult {
    bool applicable = false;
    enum class Branch { StableRotation, NearStable, ChaseFailed } branch = Branch::ChaseFailed;
    std::vector<int> sequence;
    bool linked_along_chase = true;  // each w_i (1, missing(w_i))-linked to r
    std::string detail;
};

/// u is the pendant vertex; the chase needs its edge colored alpha+1 but no
/// pendant x.
RotationChaseResult rotation_chase(const TypicalMultifan& f, int u, int w1);

/// Dispatcher for the report-driven interface; throws std::invalid_argument
/// for an unknown check id. Known ids are the kebab-case names used by the
/// evaluators above.
std::vector<std::string> known_check_ids();

}  // namespace hz
