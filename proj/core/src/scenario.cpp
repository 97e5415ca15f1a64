#include "riposte/scenario.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace riposte {

QuantScale Scenario::effective_severity_scale() const {
    return severity_scale ? *severity_scale : default_severity_scale();
}

QuantScale Scenario::effective_likelihood_scale() const {
    return likelihood_scale ? *likelihood_scale : default_likelihood_scale();
}

namespace {

void add(DiagnosticList& diags, Severity severity, std::string location,
         std::string message) {
    diags.push_back({severity, std::move(location), std::move(message)});
}

void check_scale(DiagnosticList& diags, const QuantScale& scale,
                 const std::string& loc, bool modes_strictly_increasing) {
    std::set<std::string> labels;
    double previous_mode = 0.0;
    for (std::size_t i = 0; i < scale.levels.size(); ++i) {
        const auto& level = scale.levels[i];
        std::string level_loc = loc + "[" + std::to_string(i) + "]";
        if (level.label.empty())
            add(diags, Severity::kError, level_loc + ".label",
                "empty scale label");
        if (!labels.insert(level.label).second)
            add(diags, Severity::kError, level_loc + ".label",
                "duplicate scale label '" + level.label + "'");
        if (!(level.min <= level.mode && level.mode <= level.max))
            add(diags, Severity::kError, level_loc,
                "level must satisfy min <= mode <= max");
        if (modes_strictly_increasing && i > 0 &&
            !(level.mode > previous_mode))
            add(diags, Severity::kError, level_loc + ".mode",
                "severity level modes must be strictly increasing");
        previous_mode = level.mode;
    }
    if (scale.levels.empty())
        add(diags, Severity::kError, loc, "scale has no levels");
}

void check_amount(DiagnosticList& diags, double value, const std::string& loc,
                  const std::string& what) {
    if (value < 0.0)
        add(diags, Severity::kError, loc, what + " must be non-negative");
    if (!std::isfinite(value))
        add(diags, Severity::kError, loc, what + " must be finite");
}

void check_quantity(DiagnosticList& diags, const UncertainQuantity& q,
                    const QuantScale& scale, const std::string& loc) {
    if (q.is_level()) {
        if (!scale.find(q.label()))
            add(diags, Severity::kError, loc,
                "unknown scale level '" + q.label() + "'");
    } else {
        check_amount(diags, q.amount(), loc, "fixed amount");
    }
}

void check_arc(DiagnosticList& diags, const ArcLedger& arc,
               const std::string& loc) {
    check_amount(diags, arc.ci, loc + ".ci", "cost");
    check_amount(diags, arc.cm, loc + ".cm", "cost");
    check_amount(diags, arc.odc, loc + ".odc", "cost");
    check_amount(diags, arc.ic, loc + ".ic", "cost");
}

void check_financials(DiagnosticList& diags, const Scenario& scenario) {
    const auto& fin = scenario.financials;

    if (fin.target) {
        bool threat_ok = scenario.find_threat(fin.target->threat_id) != nullptr;
        bool service_ok =
            scenario.find_service(fin.target->service_id) != nullptr;
        if (!threat_ok)
            add(diags, Severity::kError, "financials.target",
                "unknown threat '" + fin.target->threat_id + "'");
        if (!service_ok)
            add(diags, Severity::kError, "financials.target",
                "unknown service '" + fin.target->service_id + "'");
        if (threat_ok && service_ok &&
            !scenario.applicability.applicable(*fin.target))
            add(diags, Severity::kError, "financials.target",
                "target pair is not applicable");
    }

    if (const auto* fixed = std::get_if<double>(&fin.ale)) {
        check_amount(diags, *fixed, "financials.ale.fixed", "ALE");
    } else if (const auto* ledger = std::get_if<AleLedgerSpec>(&fin.ale)) {
        const auto& l = ledger->losses;
        check_amount(diags, l.la, "financials.ale.losses.la", "loss");
        check_amount(diags, l.ld, "financials.ale.losses.ld", "loss");
        check_amount(diags, l.lr, "financials.ale.losses.lr", "loss");
        check_amount(diags, l.lp, "financials.ale.losses.lp", "loss");
        check_amount(diags, l.lrec, "financials.ale.losses.lrec", "loss");
        check_amount(diags, l.lrpc, "financials.ale.losses.lrpc", "loss");
        check_amount(diags, l.ol, "financials.ale.losses.ol", "loss");
        check_amount(diags, l.ci, "financials.ale.losses.ci", "insurance");
        check_amount(diags, ledger->aro, "financials.ale.aro",
                     "occurrence rate");
    } else if (const auto* spec = std::get_if<AleUncertaintySpec>(&fin.ale)) {
        QuantScale severity = scenario.effective_severity_scale();
        QuantScale likelihood = scenario.effective_likelihood_scale();
        const std::string base = "financials.ale.uncertain.";
        check_quantity(diags, spec->la, severity, base + "la");
        check_quantity(diags, spec->ld, severity, base + "ld");
        check_quantity(diags, spec->lr, severity, base + "lr");
        check_quantity(diags, spec->lp, severity, base + "lp");
        check_quantity(diags, spec->lrec, severity, base + "lrec");
        check_quantity(diags, spec->lrpc, severity, base + "lrpc");
        check_quantity(diags, spec->ol, severity, base + "ol");
        check_quantity(diags, spec->ci, severity, base + "ci");
        check_quantity(diags, spec->aro, likelihood, base + "aro");
        if (spec->iterations < 1)
            add(diags, Severity::kError, base + "iterations",
                "iteration count must be at least 1");
    }

    if (const auto* fixed = std::get_if<double>(&fin.aiv)) {
        if (!(*fixed > 0.0))
            add(diags, Severity::kWarning, "financials.aiv.fixed",
                "annual infrastructure value is not positive; "
                "RORI computations will fail");
    } else if (const auto* ledger = std::get_if<AivLedger>(&fin.aiv)) {
        check_amount(diags, ledger->ec, "financials.aiv.ledger.ec", "cost");
        check_amount(diags, ledger->pc, "financials.aiv.ledger.pc", "cost");
        check_amount(diags, ledger->sc, "financials.aiv.ledger.sc", "cost");
        check_amount(diags, ledger->oc, "financials.aiv.ledger.oc", "cost");
        check_amount(diags, ledger->rv, "financials.aiv.ledger.rv",
                     "resell value");
        double total =
            ledger->ec + ledger->pc + ledger->sc + ledger->oc - ledger->rv;
        if (!(total > 0.0))
            add(diags, Severity::kWarning, "financials.aiv.ledger",
                "annual infrastructure value is not positive; "
                "RORI computations will fail");
    }
}

void check_candidates(DiagnosticList& diags, const Scenario& scenario) {
    std::set<std::string> ids;
    for (std::size_t i = 0; i < scenario.candidates.size(); ++i) {
        const auto& candidate = scenario.candidates[i];
        std::string loc = "candidates[" + std::to_string(i) + "]";
        if (candidate.id.empty())
            add(diags, Severity::kError, loc + ".id", "empty candidate id");
        if (!ids.insert(candidate.id).second)
            add(diags, Severity::kError, loc + ".id",
                "duplicate candidate id '" + candidate.id + "'");
        check_arc(diags, candidate.arc, loc + ".arc");
        if (candidate.rm_override &&
            (*candidate.rm_override < -1.0 || *candidate.rm_override > 1.0))
            add(diags, Severity::kError, loc + ".rm_override",
                "rm_override must be a fraction in [-1, 1]");
        if (candidate.target) {
            if (!scenario.find_threat(candidate.target->threat_id))
                add(diags, Severity::kError, loc + ".target",
                    "unknown threat '" + candidate.target->threat_id + "'");
            if (!scenario.find_service(candidate.target->service_id))
                add(diags, Severity::kError, loc + ".target",
                    "unknown service '" + candidate.target->service_id + "'");
        }
        for (std::size_t m = 0; m < candidate.mutations.size(); ++m) {
            const auto& mutation = candidate.mutations[m];
            std::string mloc = loc + ".mutations[" + std::to_string(m) + "]";
            bool refs_ok = true;
            if (!scenario.find_threat(mutation.threat_id)) {
                add(diags, Severity::kError, mloc,
                    "unknown threat '" + mutation.threat_id + "'");
                refs_ok = false;
            }
            if (!scenario.find_service(mutation.service_id)) {
                add(diags, Severity::kError, mloc,
                    "unknown service '" + mutation.service_id + "'");
                refs_ok = false;
            }
            if (refs_ok && !scenario.applicability.applicable(
                               mutation.threat_id, mutation.service_id))
                add(diags, Severity::kWarning, mloc,
                    "mutation on a pair the threat does not endanger");
            if (mutation.action == MutationAction::kSetEffectiveness &&
                (mutation.effectiveness < 0.0 ||
                 mutation.effectiveness > 100.0))
                add(diags, Severity::kError, mloc + ".value",
                    "effectiveness must be in [0, 100]");
            if (mutation.action == MutationAction::kSetCoverage) {
                if (mutation.coverage.from_instances()) {
                    auto deployed = mutation.coverage.deployed_instances();
                    auto total = mutation.coverage.total_instances();
                    if (total <= 0 || deployed < 0 || deployed > total)
                        add(diags, Severity::kError, mloc,
                            "instance counts must satisfy 0 <= deployed <= "
                            "total, total > 0");
                } else if (mutation.coverage.value() < 0.0 ||
                           mutation.coverage.value() > 1.0) {
                    add(diags, Severity::kError, mloc + ".coverage",
                        "coverage must be a fraction in [0, 1]");
                }
            }
        }
    }
}

}  // namespace

DiagnosticList validate_scenario(const Scenario& scenario) {
    DiagnosticList diags =
        validate_model(scenario.services, scenario.threats,
                       scenario.applicability, scenario.protections);
    if (scenario.severity_scale)
        check_scale(diags, *scenario.severity_scale, "scales.severity", true);
    if (scenario.likelihood_scale)
        check_scale(diags, *scenario.likelihood_scale, "scales.likelihood",
                    false);
    check_financials(diags, scenario);
    check_candidates(diags, scenario);
    return diags;
}

AleOutcome compute_ale(const Scenario& scenario,
                       std::optional<std::int64_t> iterations_override,
                       std::optional<std::uint64_t> seed_override,
                       unsigned threads, DiagnosticList* diags) {
    AleOutcome outcome;
    if (const auto* fixed = std::get_if<double>(&scenario.financials.ale)) {
        outcome.value = *fixed;
        outcome.source = "fixed";
    } else if (const auto* ledger =
                   std::get_if<AleLedgerSpec>(&scenario.financials.ale)) {
        outcome.value =
            annual_loss_expectancy(ledger->losses, ledger->aro, diags);
        outcome.source = "ledger";
    } else {
        auto spec = std::get<AleUncertaintySpec>(scenario.financials.ale);
        if (iterations_override) spec.iterations = *iterations_override;
        if (seed_override) spec.seed = *seed_override;
        auto summary = simulate_ale(spec, scenario.effective_severity_scale(),
                                    scenario.effective_likelihood_scale(),
                                    threads, diags);
        outcome.value = summary.mean;
        outcome.source = "monte-carlo";
        outcome.summary = std::move(summary);
    }
    return outcome;
}

double compute_aiv(const Scenario& scenario) {
    if (const auto* fixed = std::get_if<double>(&scenario.financials.aiv)) {
        if (!(*fixed > 0.0))
            throw NonPositiveInfrastructureValue(
                "annual infrastructure value must be positive");
        return *fixed;
    }
    return annual_infrastructure_value(
        std::get<AivLedger>(scenario.financials.aiv));
}

ThreatServicePair evaluation_target(const Scenario& scenario,
                                    const Candidate& candidate) {
    if (candidate.target) return *candidate.target;
    if (scenario.financials.target) return *scenario.financials.target;
    if (!candidate.mutations.empty())
        return {candidate.mutations.front().threat_id,
                candidate.mutations.front().service_id};
    throw EngineError("candidate '" + candidate.id +
                      "' has no evaluation target: set candidates[].target "
                      "or financials.target");
}

}  // namespace riposte
