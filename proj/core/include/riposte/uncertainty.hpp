#pragma once

/**
 * Monte Carlo estimation of the annual loss expectancy from qualitative
 * severity/likelihood ratings, using triangular distributions.
 *
 * Each qualitative level maps to a (min, mode, max) triangle. Per iteration,
 * every non-fixed loss component and the yearly occurrence rate are drawn
 * from their triangles on independent deterministic substreams (see
 * rng.hpp), the closed-form ALE is evaluated, and the run is summarized.
 * Identical (spec, scales, seed) inputs reproduce the summary bit for bit,
 * serial or parallel.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riposte/diagnostics.hpp"
#include "riposte/errors.hpp"
#include "riposte/financial.hpp"

namespace riposte {

/// One qualitative level: label plus triangle parameters (currency for
/// severity scales, occurrences/year for likelihood scales).
struct ScaleLevel {
    std::string label;
    double min = 0.0;
    double mode = 0.0;
    double max = 0.0;

    friend bool operator==(const ScaleLevel&, const ScaleLevel&) = default;
};

/// Ordered list of qualitative levels.
struct QuantScale {
    std::vector<ScaleLevel> levels;

    const ScaleLevel* find(const std::string& label) const {
        for (const auto& level : levels) {
            if (level.label == label) return &level;
        }
        return nullptr;
    }

    friend bool operator==(const QuantScale&, const QuantScale&) = default;
};

/// Built-in severity scale: six decade levels with modes 100 .. 10,000,000.
/// Each level's (min, max) are the neighbouring levels' modes, clamped at
/// the ends. Fully overridable per scenario.
QuantScale default_severity_scale();

/// Built-in likelihood scale, occurrences/year: very-low (0.5) .. very-high
/// (52), same neighbouring-mode convention.
QuantScale default_likelihood_scale();

/// Looks a label up in a scale. Throws UnknownLevel if absent.
const ScaleLevel& resolve_level(const std::string& label,
                                const QuantScale& scale);

/// Inverse-CDF triangular sample for a uniform draw u in [0, 1).
/// Degenerate triangles (min == max) return min. Throws InvalidTriangle
/// unless min <= mode <= max.
double triangular_sample(double min, double mode, double max, double u);

/// A quantity that is either a fixed amount or a reference to a scale level.
class UncertainQuantity {
public:
    UncertainQuantity() = default;  // fixed 0

    static UncertainQuantity fixed(double amount) {
        UncertainQuantity q;
        q.amount_ = amount;
        return q;
    }

    static UncertainQuantity level(std::string label) {
        UncertainQuantity q;
        q.is_level_ = true;
        q.label_ = std::move(label);
        return q;
    }

    bool is_level() const { return is_level_; }
    double amount() const { return amount_; }
    const std::string& label() const { return label_; }

    friend bool operator==(const UncertainQuantity&,
                           const UncertainQuantity&) = default;

private:
    bool is_level_ = false;
    double amount_ = 0.0;
    std::string label_;
};

/// Simulation input: one quantity per loss component, the occurrence rate,
/// and the run parameters.
struct AleUncertaintySpec {
    UncertainQuantity la, ld, lr, lp, lrec, lrpc, ol, ci;
    UncertainQuantity aro;
    std::int64_t iterations = 250;
    std::uint64_t seed = 0;

    friend bool operator==(const AleUncertaintySpec&,
                           const AleUncertaintySpec&) = default;
};

/// Summary of a simulation run. Quantiles are nearest-rank order statistics
/// of the actual samples; metadata records how the run can be reproduced.
struct AleDistributionSummary {
    double mean = 0.0;
    double p05 = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
    std::int64_t iterations = 0;
    std::uint64_t seed = 0;
    std::string generator;

    friend bool operator==(const AleDistributionSummary&,
                           const AleDistributionSummary&) = default;
};

/// Runs the simulation. `threads` may be > 1; the result is identical under
/// any degree of parallelism. If any iteration hit the negative-ALE clamp a
/// single warning diagnostic is appended. Throws UnknownLevel or
/// InvalidTriangle on bad specs (validation catches both earlier).
AleDistributionSummary simulate_ale(const AleUncertaintySpec& spec,
                                    const QuantScale& severity,
                                    const QuantScale& likelihood,
                                    unsigned threads = 1,
                                    DiagnosticList* diags = nullptr);

}  // namespace riposte
