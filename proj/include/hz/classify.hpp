#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "hz/graph.hpp"

namespace hz {

/// classify() refuses graphs outside its contract with this error so callers
/// can tell contract violations from other failures.
struct NotACandidateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// |E(G)| > Delta * floor(n/2).
bool is_overfull(const SimpleGraph& g);

/// Connected and the core (subgraph induced by maximum-degree vertices) has
/// maximum degree at most 2.
bool is_hz_candidate(const SimpleGraph& g);

bool is_odd_cycle(const SimpleGraph& g);

struct ClassLabel {
    enum class Value { Class1, Class2 };
    enum class Reason { Overfull, OddCycle, PetersenStar, NotOverfull };

    Value value;
    Reason reason;

    int chromatic_index_offset() const { return value == Value::Class2 ? 1 : 0; }
    bool operator==(const ClassLabel&) const = default;
};

std::string to_string(ClassLabel::Value v);
std::string to_string(ClassLabel::Reason r);

/// O(1)-structure classification of an HZ-candidate: Class 2 iff overfull,
/// or an odd cycle (Delta = 2), or the Petersen graph minus a vertex
/// (Delta = 3). Throws NotACandidateError when is_hz_candidate fails.
ClassLabel classify(const SimpleGraph& g);

/// One clause of the structural report: not applicable (hypothesis unmet),
/// or pass/fail with a human-readable witness on failure.
struct ClauseReport {
    bool applicable = false;
    bool pass = true;
    std::string witness;
};

/// Structural facts that hold for every class-2 candidate: (a) every edge
/// critical and the core 2-regular, (b) minimum degree Delta-1 (or an odd
/// cycle when Delta = 2), (c) at least two core neighbors everywhere.
/// chi_prime is the injected exact oracle used for the criticality clause.
struct HzStructureReport {
    bool vacuous = false;  // is_class2 was false; nothing to check
    ClauseReport critical_and_core_two_regular;
    ClauseReport min_degree;
    ClauseReport two_core_neighbors;

    bool all_pass() const {
        return vacuous || (critical_and_core_two_regular.pass && min_degree.pass &&
                           two_core_neighbors.pass);
    }
};

HzStructureReport check_hz_structure(const SimpleGraph& g, bool is_class2,
                                     const std::function<int(const SimpleGraph&)>& chi_prime);

}  // namespace hz
