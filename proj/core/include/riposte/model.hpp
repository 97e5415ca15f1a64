#pragma once

/**
 * Domain model: services, threats, protection assignments and the
 * threat/service applicability structure, plus model-level validation.
 *
 * All types are immutable values once built; nothing here mutates shared
 * state, so instances can be used concurrently without synchronization.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "riposte/diagnostics.hpp"

namespace riposte {

/// Confidentiality/integrity/availability triple, each an integer score in
/// [0, 5]. Doubles as a threat's dangerousness and as a service's value.
struct CiaVector {
    int c = 0;
    int i = 0;
    int a = 0;

    bool in_range() const {
        auto ok = [](int x) { return x >= 0 && x <= 5; };
        return ok(c) && ok(i) && ok(a);
    }

    friend bool operator==(const CiaVector&, const CiaVector&) = default;
};

/// Dot product of two CIA triples; ranges over [0, 75] for in-range inputs.
inline int dot(const CiaVector& lhs, const CiaVector& rhs) {
    return lhs.c * rhs.c + lhs.i * rhs.i + lhs.a * rhs.a;
}

struct Service {
    std::string id;
    CiaVector value;

    friend bool operator==(const Service&, const Service&) = default;
};

struct Threat {
    std::string id;
    CiaVector dangerousness;

    friend bool operator==(const Threat&, const Threat&) = default;
};

/// (threat, service) pair used as a key throughout the engine.
struct ThreatServicePair {
    std::string threat_id;
    std::string service_id;

    friend auto operator<=>(const ThreatServicePair&,
                            const ThreatServicePair&) = default;
};

/// Deployment coverage of a protection: the fraction of instances actually
/// covered. When given as instance counts (e.g. 900 of 2700 workstations)
/// the counts are kept so files serialize back in the form they were written.
class Coverage {
public:
    Coverage() = default;

    static Coverage fraction(double value) {
        Coverage c;
        c.fraction_ = value;
        return c;
    }

    static Coverage instances(std::int64_t deployed, std::int64_t total) {
        Coverage c;
        c.from_instances_ = true;
        c.deployed_ = deployed;
        c.total_ = total;
        return c;
    }

    /// Coverage as a fraction. Instance counts with a non-positive total
    /// yield 0 (validation rejects them before they reach computations).
    double value() const {
        if (!from_instances_) return fraction_;
        if (total_ <= 0) return 0.0;
        return static_cast<double>(deployed_) / static_cast<double>(total_);
    }

    bool from_instances() const { return from_instances_; }
    std::int64_t deployed_instances() const { return deployed_; }
    std::int64_t total_instances() const { return total_; }

    friend bool operator==(const Coverage&, const Coverage&) = default;

private:
    double fraction_ = 1.0;
    std::int64_t deployed_ = 0;
    std::int64_t total_ = 0;
    bool from_instances_ = false;
};

/// One protection assignment against a threat on a service.
/// Effectiveness is in percentage points [0, 100]; the assessed protection
/// it contributes is effectiveness x coverage x (deployed ? 1 : 0).
struct ProtectionAssignment {
    std::string threat_id;
    std::string service_id;
    double effectiveness = 0.0;
    Coverage coverage;
    bool deployed = true;

    friend bool operator==(const ProtectionAssignment&,
                           const ProtectionAssignment&) = default;
};

/// Set of (threat, service) pairs a threat actually endangers. Pairs not in
/// the map are "N/A": the threat does not endanger the service.
class ApplicabilityMap {
public:
    void add(std::string threat_id, std::string service_id) {
        ThreatServicePair pair{std::move(threat_id), std::move(service_id)};
        if (index_.insert(pair).second) pairs_.push_back(pair);
    }

    bool applicable(const std::string& threat_id,
                    const std::string& service_id) const {
        return index_.contains(ThreatServicePair{threat_id, service_id});
    }

    bool applicable(const ThreatServicePair& pair) const {
        return index_.contains(pair);
    }

    /// Pairs in insertion (file) order.
    const std::vector<ThreatServicePair>& pairs() const { return pairs_; }

    bool empty() const { return pairs_.empty(); }

    friend bool operator==(const ApplicabilityMap& lhs,
                           const ApplicabilityMap& rhs) {
        return lhs.pairs_ == rhs.pairs_;
    }

private:
    std::vector<ThreatServicePair> pairs_;
    std::set<ThreatServicePair> index_;
};

/// Current protection assignments keyed by (threat, service). Pairs without
/// an entry contribute zero protection.
class ProtectionState {
public:
    const ProtectionAssignment* find(const std::string& threat_id,
                                     const std::string& service_id) const {
        for (const auto& entry : entries_) {
            if (entry.threat_id == threat_id && entry.service_id == service_id)
                return &entry;
        }
        return nullptr;
    }

    const ProtectionAssignment* find(const ThreatServicePair& pair) const {
        return find(pair.threat_id, pair.service_id);
    }

    /// Inserts or replaces the assignment for its (threat, service) pair.
    void upsert(ProtectionAssignment assignment) {
        for (auto& entry : entries_) {
            if (entry.threat_id == assignment.threat_id &&
                entry.service_id == assignment.service_id) {
                entry = std::move(assignment);
                return;
            }
        }
        entries_.push_back(std::move(assignment));
    }

    bool erase(const std::string& threat_id, const std::string& service_id) {
        for (auto it = entries_.begin(); it != entries_.end(); ++it) {
            if (it->threat_id == threat_id && it->service_id == service_id) {
                entries_.erase(it);
                return true;
            }
        }
        return false;
    }

    const std::vector<ProtectionAssignment>& entries() const {
        return entries_;
    }

    bool empty() const { return entries_.empty(); }

    friend bool operator==(const ProtectionState&,
                           const ProtectionState&) = default;

private:
    std::vector<ProtectionAssignment> entries_;
};

/// Checks every model invariant: CIA ranges, id uniqueness, reference
/// integrity, effectiveness/coverage ranges, and the rule that protection
/// entries should sit on applicable pairs (a warning otherwise).
///
/// Pure: the same input always yields the same diagnostics. An empty list
/// means the model is accepted by every downstream computation.
DiagnosticList validate_model(const std::vector<Service>& services,
                              const std::vector<Threat>& threats,
                              const ApplicabilityMap& applicability,
                              const ProtectionState& protections);

}  // namespace riposte
