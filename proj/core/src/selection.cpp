#include "riposte/selection.hpp"

#include <algorithm>
#include <sstream>

#include "riposte/numeric.hpp"
#include "riposte/protection.hpp"
#include "riposte/scenario.hpp"

namespace riposte {

namespace {

void check_assignment(const ProtectionAssignment& assignment,
                      const ProtectionMutation& mutation) {
    std::ostringstream where;
    where << "mutation on ('" << mutation.threat_id << "', '"
          << mutation.service_id << "')";
    if (assignment.effectiveness < 0.0 || assignment.effectiveness > 100.0)
        throw InvalidMutation(where.str() +
                              ": effectiveness must be in [0, 100]");
    if (assignment.coverage.from_instances()) {
        auto deployed = assignment.coverage.deployed_instances();
        auto total = assignment.coverage.total_instances();
        if (total <= 0 || deployed < 0 || deployed > total)
            throw InvalidMutation(where.str() + ": instance counts must "
                                  "satisfy 0 <= deployed <= total, total > 0");
    } else if (assignment.coverage.value() < 0.0 ||
               assignment.coverage.value() > 1.0) {
        throw InvalidMutation(where.str() + ": coverage must be in [0, 1]");
    }
}

}  // namespace

ProtectionState apply_candidate(const ProtectionState& state,
                                const Candidate& candidate) {
    ProtectionState next = state;
    for (const auto& mutation : candidate.mutations) {
        if (mutation.action == MutationAction::kRemove) {
            next.erase(mutation.threat_id, mutation.service_id);
            continue;
        }
        ProtectionAssignment assignment;
        if (const auto* existing =
                next.find(mutation.threat_id, mutation.service_id)) {
            assignment = *existing;
        } else {
            assignment.threat_id = mutation.threat_id;
            assignment.service_id = mutation.service_id;
        }
        switch (mutation.action) {
            case MutationAction::kSetEffectiveness:
                assignment.effectiveness = mutation.effectiveness;
                break;
            case MutationAction::kSetCoverage:
                assignment.coverage = mutation.coverage;
                break;
            case MutationAction::kSetDeployed:
                assignment.deployed = mutation.deployed;
                break;
            case MutationAction::kRemove:
                break;
        }
        check_assignment(assignment, mutation);
        next.upsert(std::move(assignment));
    }
    return next;
}

namespace {

struct PlChain {
    double pl_current = 0.0;
    double pl_potential = 0.0;
};

PlChain protection_levels(double ad, double ap_current, double ap_potential,
                          RmMode mode) {
    if (mode == RmMode::kPaperRounded) {
        ad = round_half_away(ad);
        ap_current = round_half_away(ap_current);
        ap_potential = round_half_away(ap_potential);
    }
    return {protection_level(ad, ap_current),
            protection_level(ad, ap_potential)};
}

double ap_for(const ProtectionState& state, const ThreatServicePair& pair) {
    const auto* assignment = state.find(pair);
    return assignment ? assessed_protection(*assignment) : 0.0;
}

}  // namespace

Evaluation evaluate_candidate(const Scenario& scenario,
                              const Candidate& candidate,
                              const ThreatServicePair& target, double ale,
                              double aiv, RmMode mode) {
    const Threat* threat = scenario.find_threat(target.threat_id);
    const Service* service = scenario.find_service(target.service_id);
    if (!threat || !service)
        throw EngineError("evaluation target ('" + target.threat_id + "', '" +
                          target.service_id + "') is not in the scenario");
    if (!scenario.applicability.applicable(target))
        throw EngineError("evaluation target ('" + target.threat_id + "', '" +
                          target.service_id +
                          "') is not an applicable pair");

    Evaluation result;
    result.candidate_id = candidate.id;
    result.target = target;
    result.arc = annual_response_cost(candidate.arc);

    ProtectionState potential = apply_candidate(scenario.protections, candidate);

    double ad = assessed_danger(threat->dangerousness, service->value);
    double ap_current = ap_for(scenario.protections, target);
    double ap_potential = ap_for(potential, target);

    PlChain chain = protection_levels(ad, ap_current, ap_potential, mode);
    result.pl_current = chain.pl_current;
    result.pl_potential = chain.pl_potential;
    result.security_impact =
        security_impact(chain.pl_current, chain.pl_potential);

    double rm = risk_mitigation(chain.pl_current, chain.pl_potential);
    if (mode == RmMode::kPaperRounded) rm = round_to_decimals(rm, 2);
    if (candidate.rm_override) {
        std::ostringstream note;
        note << "risk mitigation pinned to " << *candidate.rm_override
             << " by rm_override (computed " << rm << ")";
        result.diagnostics.push_back(
            {Severity::kInfo, "candidates." + candidate.id, note.str()});
        result.flags.push_back("rm-override");
        rm = *candidate.rm_override;
    }
    result.rm = rm;

    if (rm < 0.0) {
        result.diagnostics.push_back(
            {Severity::kWarning, "candidates." + candidate.id,
             "degrading candidate: risk mitigation is negative"});
        result.flags.push_back("degrading");
    }

    // Pairs touched by mutations other than the target are reported as side
    // effects; no cross-pair aggregate is invented.
    bool side_effects = false;
    std::vector<ThreatServicePair> seen;
    for (const auto& mutation : candidate.mutations) {
        ThreatServicePair pair{mutation.threat_id, mutation.service_id};
        if (pair == target) continue;
        if (std::find(seen.begin(), seen.end(), pair) != seen.end()) continue;
        seen.push_back(pair);
        const Threat* t = scenario.find_threat(pair.threat_id);
        const Service* s = scenario.find_service(pair.service_id);
        if (!t || !s || !scenario.applicability.applicable(pair)) continue;
        double side_ad = assessed_danger(t->dangerousness, s->value);
        PlChain side = protection_levels(
            side_ad, ap_for(scenario.protections, pair), ap_for(potential, pair),
            mode);
        std::ostringstream note;
        note << "side effect on ('" << pair.threat_id << "', '"
             << pair.service_id << "'): protection level "
             << side.pl_current << " -> " << side.pl_potential;
        result.diagnostics.push_back(
            {Severity::kInfo, "candidates." + candidate.id, note.str()});
        side_effects = true;
    }
    if (side_effects) result.flags.push_back("side-effects");

    result.rori = rori(ale, rm, result.arc, aiv);
    return result;
}

std::vector<Evaluation> rank_candidates(std::vector<Evaluation> evaluations) {
    std::sort(evaluations.begin(), evaluations.end(),
              [](const Evaluation& a, const Evaluation& b) {
                  if (a.rori != b.rori) return a.rori > b.rori;
                  if (a.arc != b.arc) return a.arc < b.arc;
                  if (a.rm != b.rm) return a.rm > b.rm;
                  return a.candidate_id < b.candidate_id;
              });
    return evaluations;
}

}  // namespace riposte
