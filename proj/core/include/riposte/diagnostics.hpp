#pragma once

#include <string>
#include <vector>

namespace riposte {

enum class Severity {
    kError,
    kWarning,
    kInfo,
};

/// A single finding produced by validation or by an engine operation.
/// `location` is a path-like hint ("services[2].value.c", "candidates[1]")
/// or "<input>" for whole-document problems.
struct Diagnostic {
    Severity severity = Severity::kError;
    std::string location;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using DiagnosticList = std::vector<Diagnostic>;

inline bool has_errors(const DiagnosticList& diags) {
    for (const auto& d : diags) {
        if (d.severity == Severity::kError) return true;
    }
    return false;
}

inline const char* severity_label(Severity s) {
    switch (s) {
        case Severity::kError: return "error";
        case Severity::kWarning: return "warning";
        case Severity::kInfo: return "info";
    }
    return "unknown";
}

}  // namespace riposte
