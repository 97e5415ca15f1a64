#pragma once

/**
 * Candidate countermeasures: mutations against the protection state,
 * per-candidate evaluation (RM / ARC / RORI) and deterministic ranking.
 */

#include <optional>
#include <string>
#include <vector>

#include "riposte/diagnostics.hpp"
#include "riposte/financial.hpp"
#include "riposte/model.hpp"

namespace riposte {

struct Scenario;

enum class MutationAction {
    kSetEffectiveness,
    kSetCoverage,
    kSetDeployed,
    kRemove,
};

/// One change a candidate applies to the protection state. Only the field
/// matching `action` is meaningful. Setting any field on a pair with no
/// existing assignment first creates one (effectiveness 0, full coverage,
/// deployed).
struct ProtectionMutation {
    std::string threat_id;
    std::string service_id;
    MutationAction action = MutationAction::kSetEffectiveness;
    double effectiveness = 0.0;  // kSetEffectiveness
    Coverage coverage;           // kSetCoverage
    bool deployed = true;        // kSetDeployed

    friend bool operator==(const ProtectionMutation&,
                           const ProtectionMutation&) = default;
};

/// A named countermeasure: mutations plus its yearly cost ledger.
///
/// `rm_override`, when set, replaces the computed risk mitigation with an
/// analyst-pinned fraction in [-1, 1] (an informational diagnostic records
/// the substitution). `target` optionally names the pair this candidate is
/// evaluated against, overriding the scenario-level target.
struct Candidate {
    std::string id;
    std::string description;
    std::vector<ProtectionMutation> mutations;
    ArcLedger arc;
    std::optional<double> rm_override;
    std::optional<ThreatServicePair> target;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// How the PL/RM chain is computed.
///
/// kExact keeps full precision end to end. kPaperRounded rounds AD and AP to
/// integers (so PL is an integer) and RM to two decimals before RORI — the
/// convention used when these figures are exchanged as printed tables.
enum class RmMode {
    kExact,
    kPaperRounded,
};

/// Per-candidate result for one (threat, service) target.
struct Evaluation {
    std::string candidate_id;
    ThreatServicePair target;
    double pl_current = 0.0;
    double pl_potential = 0.0;
    double security_impact = 0.0;
    double rm = 0.0;    // fraction actually used for RORI
    double arc = 0.0;
    double rori = 0.0;  // percentage
    std::vector<std::string> flags;  // degrading | rm-override | side-effects
    DiagnosticList diagnostics;
};

/// Applies the candidate's mutations in list order to a copy of the state;
/// the input is left untouched. Repeated application of the same candidate
/// to the same state yields identical results. Throws InvalidMutation when a
/// mutation would leave an assignment out of range.
ProtectionState apply_candidate(const ProtectionState& state,
                                const Candidate& candidate);

/// Evaluates one candidate against `target`: PL before/after, RM, ARC and
/// RORI. Diagnostics flag degrading candidates (rm < 0), an applied
/// rm_override, and side effects on other pairs the mutations touch.
/// Throws EngineError if the target is unknown or not applicable, and
/// NonPositiveInfrastructureValue if aiv <= 0.
Evaluation evaluate_candidate(const Scenario& scenario,
                              const Candidate& candidate,
                              const ThreatServicePair& target, double ale,
                              double aiv, RmMode mode = RmMode::kExact);

/// Sorts evaluations by RORI descending; ties broken by lower ARC, then
/// higher RM, then candidate id. The order is total, so the result is
/// deterministic for any input permutation.
std::vector<Evaluation> rank_candidates(std::vector<Evaluation> evaluations);

}  // namespace riposte
