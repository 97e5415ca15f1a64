#include "riposte/protection.hpp"

#include <algorithm>
#include <map>

#include "riposte/scenario.hpp"

namespace riposte {

double assessed_danger(const CiaVector& dangerousness, const CiaVector& value) {
    return static_cast<double>(dot(dangerousness, value)) / 75.0 * 100.0;
}

double assessed_protection(const ProtectionAssignment& assignment) {
    if (!assignment.deployed) return 0.0;
    return assignment.effectiveness * assignment.coverage.value();
}

double protection_level(double assessed_danger, double assessed_protection) {
    return 100.0 - std::max(0.0, assessed_danger - assessed_protection);
}

double actual_danger(double assessed_danger, double assessed_protection) {
    return assessed_danger - assessed_protection;
}

double security_impact(double pl_current, double pl_potential) {
    return pl_potential - pl_current;
}

double risk_mitigation(double pl_current, double pl_potential) {
    if (pl_current >= 100.0) return 0.0;  // no residual risk left
    return (pl_potential - pl_current) / (100.0 - pl_current);
}

double effectiveness_from_factors(double reliability, double update_policy,
                                  double resilience) {
    return reliability * update_policy * resilience;
}

namespace {

DangerMatrix empty_grid(const Scenario& scenario) {
    DangerMatrix m;
    m.threat_ids.reserve(scenario.threats.size());
    for (const auto& t : scenario.threats) m.threat_ids.push_back(t.id);
    m.service_ids.reserve(scenario.services.size());
    for (const auto& s : scenario.services) m.service_ids.push_back(s.id);
    m.cells.assign(m.threat_ids.size() * m.service_ids.size(), std::nullopt);
    return m;
}

/// AP per (threat row, service column), indexed once up front so grid
/// construction stays linear in cells + assignments.
std::map<std::pair<std::size_t, std::size_t>, double> index_protection(
    const Scenario& scenario) {
    std::map<std::string, std::size_t> threat_rows;
    std::map<std::string, std::size_t> service_cols;
    for (std::size_t i = 0; i < scenario.threats.size(); ++i)
        threat_rows.emplace(scenario.threats[i].id, i);
    for (std::size_t i = 0; i < scenario.services.size(); ++i)
        service_cols.emplace(scenario.services[i].id, i);
    std::map<std::pair<std::size_t, std::size_t>, double> ap;
    for (const auto& entry : scenario.protections.entries()) {
        auto row = threat_rows.find(entry.threat_id);
        auto col = service_cols.find(entry.service_id);
        if (row == threat_rows.end() || col == service_cols.end()) continue;
        ap[{row->second, col->second}] = assessed_protection(entry);
    }
    return ap;
}

}  // namespace

DangerMatrices danger_matrices(const Scenario& scenario) {
    DangerMatrices out{empty_grid(scenario), empty_grid(scenario)};
    auto ap_index = index_protection(scenario);
    for (std::size_t row = 0; row < scenario.threats.size(); ++row) {
        const auto& threat = scenario.threats[row];
        for (std::size_t col = 0; col < scenario.services.size(); ++col) {
            const auto& service = scenario.services[col];
            if (!scenario.applicability.applicable(threat.id, service.id))
                continue;
            double ad = assessed_danger(threat.dangerousness, service.value);
            auto ap = ap_index.find({row, col});
            out.assessed.at(row, col) = ad;
            out.actual.at(row, col) = actual_danger(
                ad, ap == ap_index.end() ? 0.0 : ap->second);
        }
    }
    return out;
}

DangerMatrix protection_matrix(const Scenario& scenario) {
    DangerMatrix m = empty_grid(scenario);
    for (const auto& [cell, ap] : index_protection(scenario))
        m.at(cell.first, cell.second) = ap;
    return m;
}

}  // namespace riposte
