#include "riposte/financial.hpp"

namespace riposte {

double annual_loss_expectancy(const LossBreakdown& losses, double aro,
                              DiagnosticList* diags) {
    double net = losses.gross() - losses.ci;
    if (net < 0.0) {
        if (diags)
            diags->push_back({Severity::kWarning, "financials.ale",
                              "contracted insurance exceeds the losses; "
                              "ALE clamped to 0"});
        net = 0.0;
    }
    return net * aro;
}

double annual_response_cost(const ArcLedger& ledger) {
    return ledger.ci + ledger.cm + ledger.odc + ledger.ic;
}

double annual_infrastructure_value(const AivLedger& ledger) {
    double total = ledger.ec + ledger.pc + ledger.sc + ledger.oc - ledger.rv;
    if (total <= 0.0)
        throw NonPositiveInfrastructureValue(
            "annual infrastructure value must be positive");
    return total;
}

double rori(double ale, double rm, double arc, double aiv) {
    if (aiv <= 0.0)
        throw NonPositiveInfrastructureValue(
            "annual infrastructure value must be positive");
    if (arc < 0.0)
        throw EngineError("annual response cost must be non-negative");
    return ((ale * rm) - arc) / (arc + aiv) * 100.0;
}

double roi(double benefits, double costs) {
    if (costs <= 0.0) throw ZeroCost("ROI requires a positive cost basis");
    return (benefits - costs) / costs * 100.0;
}

double rosi(double ale_before, double ale_after, double cm_cost) {
    if (cm_cost <= 0.0)
        throw ZeroCost("ROSI requires a positive countermeasure cost");
    return ((ale_before - ale_after) - cm_cost) / cm_cost * 100.0;
}

}  // namespace riposte
