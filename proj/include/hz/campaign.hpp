#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hz/fans.hpp"
#include "hz/graph.hpp"
#include "hz/lemmas.hpp"
#include "hz/rng.hpp"

namespace hz {

struct CampaignConfig {
    uint64_t seed = 1;
    int trials = 100;
    int max_n = 9;
    uint64_t budget = 100'000'000;  // oracle node budget
    std::string suite = "census";   // census | theorems | lemmas | odelta
    bool allow_slow = false;
    int sample_count = 100;  // stable-coloring samples per pseudo-multifan
    int workers = 0;         // 0 = hardware concurrency

    nlohmann::json to_json() const;  // workers excluded: must not affect bytes
};

struct CheckStats {
    int pass = 0;
    int vacuous = 0;
    int fail = 0;
    std::vector<nlohmann::json> witnesses;  // replayable, capped

    void add(CheckOutcome outcome, const nlohmann::json& witness);
};

struct VerificationReport {
    std::string suite;
    CampaignConfig config;
    std::map<std::string, CheckStats> checks;
    std::map<std::string, int64_t> branch_stats;
    std::map<std::string, int64_t> counters;

    bool all_pass() const;
    int total_failures() const;
    /// Deterministic body; wall time goes to the caller's console, never the
    /// report, so identical configs produce identical bytes.
    nlohmann::json to_json() const;
};

/// Exhaustive small-n census: classify vs the exact oracle on every
/// candidate, family recognition on class-2 instances, Delta-colorings on
/// class-1 instances, plus the uniqueness of the two base-case exceptions.
/// `graphs` overrides the built-in enumeration (e.g. a graph6 file).
VerificationReport run_census(const CampaignConfig& cfg,
                              const std::vector<SimpleGraph>* graphs = nullptr);

/// Structure statements over generated family members and the Petersen
/// exception; vacuous hypotheses reported as vacuous, never as passes.
VerificationReport run_theorem_suite(const CampaignConfig& cfg);

/// Seeded recoloring campaigns: triples on family members, grown fans,
/// Kierstead paths, pseudo-multifans, rotations, lollipops, and the
/// two-inducing transformation, with every predicate evaluated literally.
VerificationReport run_lemma_suite(const CampaignConfig& cfg);

/// Family generator properties: connectivity, 2-regular core, overfullness,
/// recognition round trips, and oracle agreement on every member built.
VerificationReport run_odelta_suite(const CampaignConfig& cfg);

/// Re-evaluates one embedded witness; returns {"check", "outcome", "detail"}.
nlohmann::json replay_witness(const nlohmann::json& witness);

/// A seeded triple on g: seeded choice of center and first spoke, a
/// Delta-coloring of the rest found by search, then seeded chain swaps.
ColoringTriple make_random_triple(const SimpleGraph& g, SplitMix64& rng, int perturb_swaps,
                                  uint64_t node_budget);

}  // namespace hz
