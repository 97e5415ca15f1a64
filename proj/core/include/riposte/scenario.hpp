#pragma once

/**
 * The scenario document: everything the engines consume, as one immutable
 * value. Produced either programmatically or by scenario_io.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "riposte/diagnostics.hpp"
#include "riposte/financial.hpp"
#include "riposte/model.hpp"
#include "riposte/selection.hpp"
#include "riposte/uncertainty.hpp"

namespace riposte {

struct ScenarioMeta {
    std::string name;
    std::string currency;  // label only; the math is unit-agnostic

    friend bool operator==(const ScenarioMeta&, const ScenarioMeta&) = default;
};

/// ALE given as a loss ledger plus a yearly occurrence rate.
struct AleLedgerSpec {
    LossBreakdown losses;
    double aro = 0.0;

    friend bool operator==(const AleLedgerSpec&,
                           const AleLedgerSpec&) = default;
};

/// Exactly one form: a fixed yearly amount, a deterministic ledger, or a
/// Monte Carlo uncertainty spec.
using AleSpec = std::variant<double, AleLedgerSpec, AleUncertaintySpec>;

/// Fixed yearly amount or an itemized ledger.
using AivSpec = std::variant<double, AivLedger>;

struct Financials {
    /// The (threat, service) pair the response addresses; candidates without
    /// their own target are evaluated against it.
    std::optional<ThreatServicePair> target;
    AleSpec ale = 0.0;
    AivSpec aiv = 0.0;

    friend bool operator==(const Financials&, const Financials&) = default;
};

struct Scenario {
    ScenarioMeta meta;
    std::vector<Service> services;
    std::vector<Threat> threats;
    ApplicabilityMap applicability;
    ProtectionState protections;
    std::optional<QuantScale> severity_scale;    // absent -> built-in default
    std::optional<QuantScale> likelihood_scale;  // absent -> built-in default
    Financials financials;
    std::vector<Candidate> candidates;

    const Service* find_service(const std::string& id) const {
        for (const auto& s : services)
            if (s.id == id) return &s;
        return nullptr;
    }

    const Threat* find_threat(const std::string& id) const {
        for (const auto& t : threats)
            if (t.id == id) return &t;
        return nullptr;
    }

    const Candidate* find_candidate(const std::string& id) const {
        for (const auto& c : candidates)
            if (c.id == id) return &c;
        return nullptr;
    }

    QuantScale effective_severity_scale() const;
    QuantScale effective_likelihood_scale() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Full scenario validation: model invariants (validate_model) plus scale,
/// financial and candidate checks. Errors mean downstream computations would
/// reject the data; warnings are advisory. A non-positive AIV is reported as
/// a warning here and throws at computation time.
DiagnosticList validate_scenario(const Scenario& scenario);

/// How an ALE value was obtained.
struct AleOutcome {
    double value = 0.0;
    std::string source;  // "fixed" | "ledger" | "monte-carlo"
    std::optional<AleDistributionSummary> summary;  // monte-carlo only
};

/// Resolves the scenario's ALE. Iteration/seed overrides apply only to the
/// Monte Carlo form (the mean becomes the value).
AleOutcome compute_ale(const Scenario& scenario,
                       std::optional<std::int64_t> iterations_override = {},
                       std::optional<std::uint64_t> seed_override = {},
                       unsigned threads = 1, DiagnosticList* diags = nullptr);

/// Resolves the scenario's AIV. Throws NonPositiveInfrastructureValue.
double compute_aiv(const Scenario& scenario);

/// Target pair for evaluating `candidate`: the candidate's own target, else
/// the scenario financials' target, else the first mutation's pair. Throws
/// EngineError when none is available (e.g. a do-nothing candidate in a
/// scenario without a financials target).
ThreatServicePair evaluation_target(const Scenario& scenario,
                                    const Candidate& candidate);

}  // namespace riposte
