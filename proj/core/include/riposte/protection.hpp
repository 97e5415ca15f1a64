#pragma once

/**
 * Technical impact engine: assessed danger, assessed protection, protection
 * levels, danger matrices, security impact and risk mitigation.
 *
 * Conventions used everywhere below:
 *   AD  assessed danger, [0, 100] — how hard a threat hits a service.
 *   AP  assessed protection, [0, 100] — effectiveness x coverage x deployed.
 *   PL  protection level, [0, 100] — 100 means fully protected.
 *   RM  risk mitigation, fraction of remaining risk removed by a change.
 *
 * All functions are pure and keep full floating-point precision; rounding
 * to printed integers happens only at display time.
 */

#include <optional>
#include <string>
#include <vector>

#include "riposte/model.hpp"

namespace riposte {

struct Scenario;

/// AD = dot(d, v) / 75 * 100. The dot product of two CIA triples tops out
/// at 75, so the result is a percentage in [0, 100].
double assessed_danger(const CiaVector& dangerousness, const CiaVector& value);

/// AP contributed by one assignment: effectiveness x coverage, zero when not
/// deployed. An absent assignment contributes 0 by convention.
double assessed_protection(const ProtectionAssignment& assignment);

/// PL = 100 - max(0, AD - AP). Clamps at 100 when protection exceeds danger.
double protection_level(double assessed_danger, double assessed_protection);

/// AD - AP without clamping; negative values mean the pair is over-protected.
double actual_danger(double assessed_danger, double assessed_protection);

/// SI = PL_potential - PL_current.
double security_impact(double pl_current, double pl_potential);

/// RM = (PL_potential - PL_current) / (100 - PL_current).
///
/// At PL_current = 100 there is no residual risk to mitigate and RM is 0 by
/// convention. RM is returned unclamped: a negative value marks a candidate
/// that degrades protection, which callers flag rather than hide.
double risk_mitigation(double pl_current, double pl_potential);

/// Protection effectiveness as the product of reliability, update-policy and
/// resilience scores, each a fraction in [0, 1]. No rounding is applied.
double effectiveness_from_factors(double reliability, double update_policy,
                                  double resilience);

/// Threats x services grid of real values; a disengaged cell is "N/A"
/// (the pair is not applicable).
struct DangerMatrix {
    std::vector<std::string> threat_ids;   // rows
    std::vector<std::string> service_ids;  // columns
    std::vector<std::optional<double>> cells;  // row-major

    const std::optional<double>& at(std::size_t row, std::size_t col) const {
        return cells[row * service_ids.size() + col];
    }
    std::optional<double>& at(std::size_t row, std::size_t col) {
        return cells[row * service_ids.size() + col];
    }

    friend bool operator==(const DangerMatrix&, const DangerMatrix&) = default;
};

struct DangerMatrices {
    DangerMatrix assessed;  // AD per applicable pair
    DangerMatrix actual;    // AD - AP per applicable pair
};

/// Builds the assessed and actual danger matrices for a validated scenario.
/// Rows follow the scenario's threat order, columns its service order; the
/// N/A pattern mirrors the applicability map exactly.
DangerMatrices danger_matrices(const Scenario& scenario);

/// Current protection capacity grid: AP per assignment, disengaged where no
/// assignment exists (regardless of applicability).
DangerMatrix protection_matrix(const Scenario& scenario);

}  // namespace riposte
