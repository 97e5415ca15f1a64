#include "riposte/model.hpp"

#include <set>
#include <sstream>

namespace riposte {

namespace {

void add(DiagnosticList& diags, Severity severity, std::string location,
         std::string message) {
    diags.push_back({severity, std::move(location), std::move(message)});
}

void check_cia(DiagnosticList& diags, const CiaVector& v,
               const std::string& location) {
    const struct {
        const char* name;
        int value;
    } components[] = {{"c", v.c}, {"i", v.i}, {"a", v.a}};
    for (const auto& comp : components) {
        if (comp.value < 0 || comp.value > 5) {
            std::ostringstream msg;
            msg << "score " << comp.value << " out of range [0, 5]";
            add(diags, Severity::kError, location + "." + comp.name, msg.str());
        }
    }
}

}  // namespace

DiagnosticList validate_model(const std::vector<Service>& services,
                              const std::vector<Threat>& threats,
                              const ApplicabilityMap& applicability,
                              const ProtectionState& protections) {
    DiagnosticList diags;

    std::set<std::string> service_ids;
    for (std::size_t i = 0; i < services.size(); ++i) {
        const auto& service = services[i];
        std::string loc = "services[" + std::to_string(i) + "]";
        if (service.id.empty())
            add(diags, Severity::kError, loc + ".id", "empty service id");
        if (!service_ids.insert(service.id).second)
            add(diags, Severity::kError, loc + ".id",
                "duplicate service id '" + service.id + "'");
        check_cia(diags, service.value, loc + ".value");
    }

    std::set<std::string> threat_ids;
    for (std::size_t i = 0; i < threats.size(); ++i) {
        const auto& threat = threats[i];
        std::string loc = "threats[" + std::to_string(i) + "]";
        if (threat.id.empty())
            add(diags, Severity::kError, loc + ".id", "empty threat id");
        if (!threat_ids.insert(threat.id).second)
            add(diags, Severity::kError, loc + ".id",
                "duplicate threat id '" + threat.id + "'");
        check_cia(diags, threat.dangerousness, loc + ".dangerousness");
    }

    const auto& pairs = applicability.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& pair = pairs[i];
        std::string loc = "applicability[" + std::to_string(i) + "]";
        if (!threat_ids.contains(pair.threat_id))
            add(diags, Severity::kError, loc,
                "unknown threat '" + pair.threat_id + "'");
        if (!service_ids.contains(pair.service_id))
            add(diags, Severity::kError, loc,
                "unknown service '" + pair.service_id + "'");
    }

    const auto& entries = protections.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& entry = entries[i];
        std::string loc = "protections[" + std::to_string(i) + "]";
        bool refs_ok = true;
        if (!threat_ids.contains(entry.threat_id)) {
            add(diags, Severity::kError, loc,
                "unknown threat '" + entry.threat_id + "'");
            refs_ok = false;
        }
        if (!service_ids.contains(entry.service_id)) {
            add(diags, Severity::kError, loc,
                "unknown service '" + entry.service_id + "'");
            refs_ok = false;
        }
        if (entry.effectiveness < 0.0 || entry.effectiveness > 100.0)
            add(diags, Severity::kError, loc + ".effectiveness",
                "effectiveness must be in [0, 100]");
        if (entry.coverage.from_instances()) {
            auto deployed = entry.coverage.deployed_instances();
            auto total = entry.coverage.total_instances();
            if (total <= 0)
                add(diags, Severity::kError, loc + ".total_instances",
                    "total instance count must be positive");
            else if (deployed < 0 || deployed > total)
                add(diags, Severity::kError, loc + ".deployed_instances",
                    "deployed instances must be in [0, total]");
        } else if (entry.coverage.value() < 0.0 ||
                   entry.coverage.value() > 1.0) {
            add(diags, Severity::kError, loc + ".coverage",
                "coverage must be a fraction in [0, 1]");
        }
        if (refs_ok &&
            !applicability.applicable(entry.threat_id, entry.service_id))
            add(diags, Severity::kWarning, loc,
                "protection on a pair the threat does not endanger ('" +
                    entry.threat_id + "' / '" + entry.service_id + "')");
    }

    return diags;
}

}  // namespace riposte
