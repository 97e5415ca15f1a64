#pragma once

/**
 * Scenario file parsing and serialization (JSON, schema version 1).
 *
 * Parsing is strict: unknown fields, wrong types and dangling references are
 * errors, and a document either yields a complete scenario or a non-empty
 * error list — never both. Serialization is canonical (keys in schema order,
 * numbers in minimal decimal form), so parse . serialize is the identity on
 * values and serialize is byte-stable.
 */

#include <optional>
#include <string>
#include <string_view>

#include "riposte/diagnostics.hpp"
#include "riposte/scenario.hpp"

namespace riposte {

inline constexpr int kScenarioSchemaVersion = 1;

struct ParseResult {
    std::optional<Scenario> scenario;
    DiagnosticList errors;  // syntax/schema/reference problems, with paths

    bool ok() const { return scenario.has_value(); }
};

/// Parses a scenario document from UTF-8 JSON text.
ParseResult parse_scenario(std::string_view text);

/// Reads and parses a scenario file; I/O failures become errors with the
/// file path as location.
ParseResult load_scenario_file(const std::string& path);

/// Canonical serialization of a valid scenario (2-space indent, trailing
/// newline). Sections with derivable defaults (built-in scales, zero cost
/// fields) are omitted.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace riposte
