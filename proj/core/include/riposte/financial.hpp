#pragma once

/**
 * Financial impact engine: annual loss expectancy, cost ledgers and the
 * return-on-response-investment index, plus the classical ROI/ROSI indices
 * for side-by-side comparison.
 *
 * Currency is an abstract decimal amount; the scenario carries a currency
 * code purely as a label and every formula here is unit-agnostic.
 */

#include "riposte/diagnostics.hpp"
#include "riposte/errors.hpp"

namespace riposte {

/// Yearly loss components for one threat, all >= 0.
struct LossBreakdown {
    double la = 0.0;    // loss of assets
    double ld = 0.0;    // loss of data
    double lr = 0.0;    // loss of reputation
    double lp = 0.0;    // legal procedures
    double lrec = 0.0;  // loss of revenue, existing clients
    double lrpc = 0.0;  // loss of revenue, potential clients
    double ol = 0.0;    // other losses
    double ci = 0.0;    // contracted insurance (offsets the losses)

    double gross() const { return la + ld + lr + lp + lrec + lrpc + ol; }

    friend bool operator==(const LossBreakdown&,
                           const LossBreakdown&) = default;
};

/// Yearly costs incurred by deploying one countermeasure.
struct ArcLedger {
    double ci = 0.0;   // cost of implementation
    double cm = 0.0;   // cost of maintenance
    double odc = 0.0;  // other direct costs
    double ic = 0.0;   // indirect costs

    friend bool operator==(const ArcLedger&, const ArcLedger&) = default;
};

/// Yearly value of the security infrastructure, independent of candidates.
struct AivLedger {
    double ec = 0.0;  // equipment costs
    double pc = 0.0;  // personnel costs
    double sc = 0.0;  // service costs
    double oc = 0.0;  // other costs
    double rv = 0.0;  // resell value (subtracted)

    friend bool operator==(const AivLedger&, const AivLedger&) = default;
};

/// ALE = (sum of losses - insurance) x ARO, in currency per year.
/// If insurance exceeds the losses the result is clamped to 0 and a warning
/// diagnostic is appended (a negative expected loss would invert RORI).
double annual_loss_expectancy(const LossBreakdown& losses, double aro,
                              DiagnosticList* diags = nullptr);

/// ARC = Ci + Cm + Odc + Ic. Zero for the do-nothing candidate.
double annual_response_cost(const ArcLedger& ledger);

/// AIV = Ec + Pc + Sc + Oc - Rv.
/// Throws NonPositiveInfrastructureValue when the total is <= 0.
double annual_infrastructure_value(const AivLedger& ledger);

/// RORI = ((ALE x RM) - ARC) / (ARC + AIV) x 100, as a percentage.
///
/// RM enters as a fraction (0.65, not 65). Defined for RM = 0 and ARC = 0:
/// the do-nothing baseline evaluates to exactly 0. Throws
/// NonPositiveInfrastructureValue if aiv <= 0.
double rori(double ale, double rm, double arc, double aiv);

/// ROI = (benefits - costs) / costs x 100. Throws ZeroCost if costs <= 0.
double roi(double benefits, double costs);

/// ROSI = ((ALE_before - ALE_after) - cost) / cost x 100.
/// Throws ZeroCost if cm_cost <= 0.
double rosi(double ale_before, double ale_after, double cm_cost);

}  // namespace riposte
