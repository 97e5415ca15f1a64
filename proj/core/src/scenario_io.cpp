#include "riposte/scenario_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace riposte {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kRequiredSections[] = {
    "schema_version", "meta",       "services",   "threats",
    "applicability",  "protections", "financials", "candidates"};

/// Collects schema/reference errors with their document paths.
class Reader {
public:
    explicit Reader(DiagnosticList& errors) : errors_(errors) {}

    void schema_error(const std::string& path, const std::string& message) {
        errors_.push_back(
            {Severity::kError, path, "schema error: " + message});
    }

    void reference_error(const std::string& path, const std::string& message) {
        errors_.push_back(
            {Severity::kError, path, "reference error: " + message});
    }

    bool failed() const { return !errors_.empty(); }

    /// Checks object shape: every present key must be allowed, every
    /// required key present. Returns false when `value` is not an object.
    bool check_object(const Json& value, const std::string& path,
                      std::initializer_list<const char*> allowed,
                      std::initializer_list<const char*> required) {
        if (!value.is_object()) {
            schema_error(path, "expected an object");
            return false;
        }
        for (const auto& item : value.items()) {
            bool known = false;
            for (const char* key : allowed)
                if (item.key() == key) known = true;
            if (!known)
                schema_error(path + "." + item.key(),
                             "unknown field '" + item.key() + "'");
        }
        for (const char* key : required)
            if (!value.contains(key))
                schema_error(path, std::string("missing required field '") +
                                       key + "'");
        return true;
    }

    std::optional<std::string> read_string(const Json& obj, const char* key,
                                           const std::string& path) {
        if (!obj.contains(key)) return std::nullopt;
        const Json& v = obj.at(key);
        if (!v.is_string()) {
            schema_error(path + "." + key, "expected a string");
            return std::nullopt;
        }
        return v.get<std::string>();
    }

    std::optional<double> read_number(const Json& obj, const char* key,
                                      const std::string& path) {
        if (!obj.contains(key)) return std::nullopt;
        const Json& v = obj.at(key);
        if (!v.is_number()) {
            schema_error(path + "." + key, "expected a number");
            return std::nullopt;
        }
        return v.get<double>();
    }

    std::optional<std::int64_t> read_integer(const Json& obj, const char* key,
                                             const std::string& path) {
        if (!obj.contains(key)) return std::nullopt;
        const Json& v = obj.at(key);
        if (!v.is_number_integer() && !v.is_number_unsigned()) {
            schema_error(path + "." + key, "expected an integer");
            return std::nullopt;
        }
        return v.get<std::int64_t>();
    }

    std::optional<bool> read_bool(const Json& obj, const char* key,
                                  const std::string& path) {
        if (!obj.contains(key)) return std::nullopt;
        const Json& v = obj.at(key);
        if (!v.is_boolean()) {
            schema_error(path + "." + key, "expected a boolean");
            return std::nullopt;
        }
        return v.get<bool>();
    }

private:
    DiagnosticList& errors_;
};

CiaVector read_cia(Reader& r, const Json& obj, const std::string& path) {
    CiaVector v;
    if (!r.check_object(obj, path, {"c", "i", "a"}, {"c", "i", "a"})) return v;
    if (auto c = r.read_integer(obj, "c", path)) v.c = static_cast<int>(*c);
    if (auto i = r.read_integer(obj, "i", path)) v.i = static_cast<int>(*i);
    if (auto a = r.read_integer(obj, "a", path)) v.a = static_cast<int>(*a);
    return v;
}

/// Reads the coverage form shared by protections and set-coverage mutations:
/// either a `coverage` fraction or a deployed/total instance count pair.
std::optional<Coverage> read_coverage(Reader& r, const Json& obj,
                                      const std::string& path) {
    bool has_fraction = obj.contains("coverage");
    bool has_deployed = obj.contains("deployed_instances");
    bool has_total = obj.contains("total_instances");
    if (has_fraction && (has_deployed || has_total)) {
        r.schema_error(path,
                       "give either 'coverage' or instance counts, not both");
        return std::nullopt;
    }
    if (has_deployed != has_total) {
        r.schema_error(path,
                       "'deployed_instances' and 'total_instances' must be "
                       "given together");
        return std::nullopt;
    }
    if (has_fraction) {
        if (auto f = r.read_number(obj, "coverage", path))
            return Coverage::fraction(*f);
        return std::nullopt;
    }
    if (has_deployed) {
        auto deployed = r.read_integer(obj, "deployed_instances", path);
        auto total = r.read_integer(obj, "total_instances", path);
        if (deployed && total) return Coverage::instances(*deployed, *total);
        return std::nullopt;
    }
    return std::nullopt;  // caller decides the default
}

struct IdSets {
    std::set<std::string> services;
    std::set<std::string> threats;
};

void check_pair_refs(Reader& r, const IdSets& ids, const std::string& threat,
                     const std::string& service, const std::string& path) {
    if (!ids.threats.contains(threat))
        r.reference_error(path, "unknown threat '" + threat + "'");
    if (!ids.services.contains(service))
        r.reference_error(path, "unknown service '" + service + "'");
}

QuantScale read_scale(Reader& r, const Json& arr, const std::string& path) {
    QuantScale scale;
    if (!arr.is_array()) {
        r.schema_error(path, "expected an array of levels");
        return scale;
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string loc = path + "[" + std::to_string(i) + "]";
        const Json& item = arr[i];
        if (!r.check_object(item, loc, {"label", "min", "mode", "max"},
                            {"label", "min", "mode", "max"}))
            continue;
        ScaleLevel level;
        if (auto s = r.read_string(item, "label", loc)) level.label = *s;
        if (auto v = r.read_number(item, "min", loc)) level.min = *v;
        if (auto v = r.read_number(item, "mode", loc)) level.mode = *v;
        if (auto v = r.read_number(item, "max", loc)) level.max = *v;
        scale.levels.push_back(std::move(level));
    }
    return scale;
}

UncertainQuantity read_quantity(Reader& r, const Json& obj,
                                const std::string& path) {
    if (!obj.is_object()) {
        r.schema_error(path, "expected an object with 'fixed' or 'level'");
        return {};
    }
    bool has_fixed = obj.contains("fixed");
    bool has_level = obj.contains("level");
    if (has_fixed == has_level) {
        r.schema_error(path, "give exactly one of 'fixed' or 'level'");
        return {};
    }
    if (has_fixed) {
        r.check_object(obj, path, {"fixed"}, {"fixed"});
        if (auto v = r.read_number(obj, "fixed", path))
            return UncertainQuantity::fixed(*v);
        return {};
    }
    r.check_object(obj, path, {"level"}, {"level"});
    if (auto s = r.read_string(obj, "level", path))
        return UncertainQuantity::level(*s);
    return {};
}

LossBreakdown read_losses(Reader& r, const Json& obj, const std::string& path) {
    LossBreakdown losses;
    if (!r.check_object(obj, path,
                        {"la", "ld", "lr", "lp", "lrec", "lrpc", "ol", "ci"},
                        {}))
        return losses;
    if (auto v = r.read_number(obj, "la", path)) losses.la = *v;
    if (auto v = r.read_number(obj, "ld", path)) losses.ld = *v;
    if (auto v = r.read_number(obj, "lr", path)) losses.lr = *v;
    if (auto v = r.read_number(obj, "lp", path)) losses.lp = *v;
    if (auto v = r.read_number(obj, "lrec", path)) losses.lrec = *v;
    if (auto v = r.read_number(obj, "lrpc", path)) losses.lrpc = *v;
    if (auto v = r.read_number(obj, "ol", path)) losses.ol = *v;
    if (auto v = r.read_number(obj, "ci", path)) losses.ci = *v;
    return losses;
}

AleUncertaintySpec read_uncertain(Reader& r, const Json& obj,
                                  const std::string& path) {
    AleUncertaintySpec spec;
    if (!r.check_object(obj, path,
                        {"la", "ld", "lr", "lp", "lrec", "lrpc", "ol", "ci",
                         "aro", "iterations", "seed"},
                        {"aro"}))
        return spec;
    auto component = [&](const char* key, UncertainQuantity& q) {
        if (obj.contains(key)) q = read_quantity(r, obj.at(key), path + "." + key);
    };
    component("la", spec.la);
    component("ld", spec.ld);
    component("lr", spec.lr);
    component("lp", spec.lp);
    component("lrec", spec.lrec);
    component("lrpc", spec.lrpc);
    component("ol", spec.ol);
    component("ci", spec.ci);
    component("aro", spec.aro);
    if (auto v = r.read_integer(obj, "iterations", path)) spec.iterations = *v;
    if (obj.contains("seed")) {
        const Json& s = obj.at("seed");
        if (s.is_number_unsigned())
            spec.seed = s.get<std::uint64_t>();
        else if (s.is_number_integer() && s.get<std::int64_t>() >= 0)
            spec.seed = static_cast<std::uint64_t>(s.get<std::int64_t>());
        else
            r.schema_error(path + ".seed",
                           "expected a non-negative 64-bit integer");
    }
    return spec;
}

void read_financials(Reader& r, const Json& obj, const IdSets& ids,
                     Financials& out) {
    const std::string path = "financials";
    if (!r.check_object(obj, path, {"target", "ale", "aiv"}, {"ale", "aiv"}))
        return;

    if (obj.contains("target")) {
        const Json& target = obj.at("target");
        std::string tpath = path + ".target";
        if (r.check_object(target, tpath, {"threat", "service"},
                           {"threat", "service"})) {
            auto threat = r.read_string(target, "threat", tpath);
            auto service = r.read_string(target, "service", tpath);
            if (threat && service) {
                check_pair_refs(r, ids, *threat, *service, tpath);
                out.target = ThreatServicePair{*threat, *service};
            }
        }
    }

    if (obj.contains("ale")) {
        const Json& ale = obj.at("ale");
        std::string apath = path + ".ale";
        if (!ale.is_object()) {
            r.schema_error(apath, "expected an object");
        } else if (ale.contains("fixed")) {
            r.check_object(ale, apath, {"fixed"}, {"fixed"});
            if (auto v = r.read_number(ale, "fixed", apath)) out.ale = *v;
        } else if (ale.contains("losses") || ale.contains("aro")) {
            if (r.check_object(ale, apath, {"losses", "aro"},
                               {"losses", "aro"})) {
                AleLedgerSpec ledger;
                ledger.losses =
                    read_losses(r, ale.at("losses"), apath + ".losses");
                if (auto v = r.read_number(ale, "aro", apath)) ledger.aro = *v;
                out.ale = ledger;
            }
        } else if (ale.contains("uncertain")) {
            r.check_object(ale, apath, {"uncertain"}, {"uncertain"});
            out.ale = read_uncertain(r, ale.at("uncertain"),
                                     apath + ".uncertain");
        } else {
            r.schema_error(apath,
                           "expected one of 'fixed', 'losses'+'aro', or "
                           "'uncertain'");
        }
    }

    if (obj.contains("aiv")) {
        const Json& aiv = obj.at("aiv");
        std::string apath = path + ".aiv";
        if (!aiv.is_object()) {
            r.schema_error(apath, "expected an object");
        } else if (aiv.contains("fixed")) {
            r.check_object(aiv, apath, {"fixed"}, {"fixed"});
            if (auto v = r.read_number(aiv, "fixed", apath)) out.aiv = *v;
        } else if (aiv.contains("ledger")) {
            r.check_object(aiv, apath, {"ledger"}, {"ledger"});
            const Json& ledger_obj = aiv.at("ledger");
            std::string lpath = apath + ".ledger";
            if (r.check_object(ledger_obj, lpath,
                               {"ec", "pc", "sc", "oc", "rv"}, {})) {
                AivLedger ledger;
                if (auto v = r.read_number(ledger_obj, "ec", lpath))
                    ledger.ec = *v;
                if (auto v = r.read_number(ledger_obj, "pc", lpath))
                    ledger.pc = *v;
                if (auto v = r.read_number(ledger_obj, "sc", lpath))
                    ledger.sc = *v;
                if (auto v = r.read_number(ledger_obj, "oc", lpath))
                    ledger.oc = *v;
                if (auto v = r.read_number(ledger_obj, "rv", lpath))
                    ledger.rv = *v;
                out.aiv = ledger;
            }
        } else {
            r.schema_error(apath, "expected one of 'fixed' or 'ledger'");
        }
    }
}

ArcLedger read_arc(Reader& r, const Json& obj, const std::string& path) {
    ArcLedger arc;
    if (!r.check_object(obj, path, {"ci", "cm", "odc", "ic"}, {})) return arc;
    if (auto v = r.read_number(obj, "ci", path)) arc.ci = *v;
    if (auto v = r.read_number(obj, "cm", path)) arc.cm = *v;
    if (auto v = r.read_number(obj, "odc", path)) arc.odc = *v;
    if (auto v = r.read_number(obj, "ic", path)) arc.ic = *v;
    return arc;
}

std::optional<ProtectionMutation> read_mutation(Reader& r, const Json& obj,
                                                const IdSets& ids,
                                                const std::string& path) {
    if (!obj.is_object()) {
        r.schema_error(path, "expected an object");
        return std::nullopt;
    }
    auto action_name = r.read_string(obj, "action", path);
    if (!action_name) {
        r.schema_error(path, "missing required field 'action'");
        return std::nullopt;
    }
    ProtectionMutation mutation;
    bool shape_ok = true;
    if (*action_name == "set-effectiveness") {
        mutation.action = MutationAction::kSetEffectiveness;
        shape_ok = r.check_object(obj, path,
                                  {"threat", "service", "action", "value"},
                                  {"threat", "service", "value"});
        if (auto v = r.read_number(obj, "value", path))
            mutation.effectiveness = *v;
    } else if (*action_name == "set-coverage") {
        mutation.action = MutationAction::kSetCoverage;
        shape_ok = r.check_object(obj, path,
                                  {"threat", "service", "action", "coverage",
                                   "deployed_instances", "total_instances"},
                                  {"threat", "service"});
        auto coverage = read_coverage(r, obj, path);
        if (!coverage) {
            r.schema_error(path, "set-coverage requires 'coverage' or "
                                 "instance counts");
            return std::nullopt;
        }
        mutation.coverage = *coverage;
    } else if (*action_name == "set-deployed") {
        mutation.action = MutationAction::kSetDeployed;
        shape_ok = r.check_object(obj, path,
                                  {"threat", "service", "action", "deployed"},
                                  {"threat", "service", "deployed"});
        if (auto v = r.read_bool(obj, "deployed", path)) mutation.deployed = *v;
    } else if (*action_name == "remove") {
        mutation.action = MutationAction::kRemove;
        shape_ok = r.check_object(obj, path, {"threat", "service", "action"},
                                  {"threat", "service"});
    } else {
        r.schema_error(path + ".action",
                       "unknown action '" + *action_name + "'");
        return std::nullopt;
    }
    if (!shape_ok) return std::nullopt;
    if (auto t = r.read_string(obj, "threat", path)) mutation.threat_id = *t;
    if (auto s = r.read_string(obj, "service", path)) mutation.service_id = *s;
    check_pair_refs(r, ids, mutation.threat_id, mutation.service_id, path);
    return mutation;
}

}  // namespace

ParseResult parse_scenario(std::string_view text) {
    ParseResult result;
    Reader reader(result.errors);

    // A blank document gets the friendlier "what is missing" report instead
    // of a bare syntax error.
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        for (const char* section : kRequiredSections)
            reader.schema_error("<input>",
                                std::string("missing required section '") +
                                    section + "'");
        return result;
    }

    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        result.errors.push_back({Severity::kError, "<input>",
                                 std::string("syntax error: ") + e.what()});
        return result;
    }

    if (!doc.is_object()) {
        reader.schema_error("<input>", "top-level value must be an object");
        return result;
    }

    reader.check_object(doc, "<document>",
                        {"schema_version", "meta", "services", "threats",
                         "applicability", "protections", "scales",
                         "financials", "candidates"},
                        {});
    for (const char* section : kRequiredSections)
        if (!doc.contains(section))
            reader.schema_error("<document>",
                                std::string("missing required section '") +
                                    section + "'");
    if (reader.failed() && !doc.contains("schema_version")) return result;

    Scenario scenario;

    if (doc.contains("schema_version")) {
        const Json& v = doc.at("schema_version");
        if (!v.is_number_integer() && !v.is_number_unsigned())
            reader.schema_error("schema_version", "expected an integer");
        else if (v.get<std::int64_t>() != kScenarioSchemaVersion)
            reader.schema_error(
                "schema_version",
                "unsupported schema version " + v.dump() + " (expected " +
                    std::to_string(kScenarioSchemaVersion) + ")");
    }

    if (doc.contains("meta")) {
        const Json& meta = doc.at("meta");
        if (reader.check_object(meta, "meta", {"name", "currency"}, {"name"})) {
            if (auto name = reader.read_string(meta, "name", "meta"))
                scenario.meta.name = *name;
            if (auto cur = reader.read_string(meta, "currency", "meta"))
                scenario.meta.currency = *cur;
        }
    }

    IdSets ids;

    if (doc.contains("services")) {
        const Json& services = doc.at("services");
        if (!services.is_array()) {
            reader.schema_error("services", "expected an array");
        } else {
            for (std::size_t i = 0; i < services.size(); ++i) {
                std::string path = "services[" + std::to_string(i) + "]";
                const Json& item = services[i];
                if (!reader.check_object(item, path, {"id", "value"},
                                         {"id", "value"}))
                    continue;
                Service service;
                if (auto id = reader.read_string(item, "id", path))
                    service.id = *id;
                if (item.contains("value"))
                    service.value =
                        read_cia(reader, item.at("value"), path + ".value");
                ids.services.insert(service.id);
                scenario.services.push_back(std::move(service));
            }
        }
    }

    if (doc.contains("threats")) {
        const Json& threats = doc.at("threats");
        if (!threats.is_array()) {
            reader.schema_error("threats", "expected an array");
        } else {
            for (std::size_t i = 0; i < threats.size(); ++i) {
                std::string path = "threats[" + std::to_string(i) + "]";
                const Json& item = threats[i];
                if (!reader.check_object(item, path, {"id", "dangerousness"},
                                         {"id", "dangerousness"}))
                    continue;
                Threat threat;
                if (auto id = reader.read_string(item, "id", path))
                    threat.id = *id;
                if (item.contains("dangerousness"))
                    threat.dangerousness =
                        read_cia(reader, item.at("dangerousness"),
                                 path + ".dangerousness");
                ids.threats.insert(threat.id);
                scenario.threats.push_back(std::move(threat));
            }
        }
    }

    if (doc.contains("applicability")) {
        const Json& pairs = doc.at("applicability");
        if (!pairs.is_array()) {
            reader.schema_error("applicability", "expected an array");
        } else {
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                std::string path = "applicability[" + std::to_string(i) + "]";
                const Json& item = pairs[i];
                if (!reader.check_object(item, path, {"threat", "service"},
                                         {"threat", "service"}))
                    continue;
                auto threat = reader.read_string(item, "threat", path);
                auto service = reader.read_string(item, "service", path);
                if (threat && service) {
                    check_pair_refs(reader, ids, *threat, *service, path);
                    scenario.applicability.add(*threat, *service);
                }
            }
        }
    }

    if (doc.contains("protections")) {
        const Json& protections = doc.at("protections");
        if (!protections.is_array()) {
            reader.schema_error("protections", "expected an array");
        } else {
            for (std::size_t i = 0; i < protections.size(); ++i) {
                std::string path = "protections[" + std::to_string(i) + "]";
                const Json& item = protections[i];
                if (!reader.check_object(
                        item, path,
                        {"threat", "service", "effectiveness", "coverage",
                         "deployed_instances", "total_instances", "deployed"},
                        {"threat", "service", "effectiveness"}))
                    continue;
                ProtectionAssignment assignment;
                if (auto t = reader.read_string(item, "threat", path))
                    assignment.threat_id = *t;
                if (auto s = reader.read_string(item, "service", path))
                    assignment.service_id = *s;
                check_pair_refs(reader, ids, assignment.threat_id,
                                assignment.service_id, path);
                if (auto e = reader.read_number(item, "effectiveness", path))
                    assignment.effectiveness = *e;
                if (auto coverage = read_coverage(reader, item, path))
                    assignment.coverage = *coverage;
                if (auto deployed = reader.read_bool(item, "deployed", path))
                    assignment.deployed = *deployed;
                scenario.protections.upsert(std::move(assignment));
            }
        }
    }

    if (doc.contains("scales")) {
        const Json& scales = doc.at("scales");
        if (reader.check_object(scales, "scales", {"severity", "likelihood"},
                                {})) {
            if (scales.contains("severity"))
                scenario.severity_scale = read_scale(
                    reader, scales.at("severity"), "scales.severity");
            if (scales.contains("likelihood"))
                scenario.likelihood_scale = read_scale(
                    reader, scales.at("likelihood"), "scales.likelihood");
        }
    }

    if (doc.contains("financials"))
        read_financials(reader, doc.at("financials"), ids, scenario.financials);

    if (doc.contains("candidates")) {
        const Json& candidates = doc.at("candidates");
        if (!candidates.is_array()) {
            reader.schema_error("candidates", "expected an array");
        } else {
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                std::string path = "candidates[" + std::to_string(i) + "]";
                const Json& item = candidates[i];
                if (!reader.check_object(item, path,
                                         {"id", "description", "target",
                                          "mutations", "arc", "rm_override"},
                                         {"id"}))
                    continue;
                Candidate candidate;
                if (auto id = reader.read_string(item, "id", path))
                    candidate.id = *id;
                if (auto d = reader.read_string(item, "description", path))
                    candidate.description = *d;
                if (item.contains("target")) {
                    const Json& target = item.at("target");
                    std::string tpath = path + ".target";
                    if (reader.check_object(target, tpath,
                                            {"threat", "service"},
                                            {"threat", "service"})) {
                        auto threat = reader.read_string(target, "threat", tpath);
                        auto service =
                            reader.read_string(target, "service", tpath);
                        if (threat && service) {
                            check_pair_refs(reader, ids, *threat, *service,
                                            tpath);
                            candidate.target =
                                ThreatServicePair{*threat, *service};
                        }
                    }
                }
                if (item.contains("mutations")) {
                    const Json& mutations = item.at("mutations");
                    if (!mutations.is_array()) {
                        reader.schema_error(path + ".mutations",
                                            "expected an array");
                    } else {
                        for (std::size_t m = 0; m < mutations.size(); ++m) {
                            if (auto mutation = read_mutation(
                                    reader, mutations[m], ids,
                                    path + ".mutations[" + std::to_string(m) +
                                        "]"))
                                candidate.mutations.push_back(
                                    std::move(*mutation));
                        }
                    }
                }
                if (item.contains("arc"))
                    candidate.arc =
                        read_arc(reader, item.at("arc"), path + ".arc");
                if (auto v = reader.read_number(item, "rm_override", path))
                    candidate.rm_override = *v;
                scenario.candidates.push_back(std::move(candidate));
            }
        }
    }

    if (reader.failed()) return result;
    result.scenario = std::move(scenario);
    return result;
}

ParseResult load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult result;
        result.errors.push_back({Severity::kError, path,
                                 "cannot open scenario file"});
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

namespace {

/// Minimal decimal form: integral doubles serialize as JSON integers.
Json num(double x) {
    if (std::isfinite(x) && x == std::floor(x) && std::abs(x) <= 9.0e15)
        return Json(static_cast<std::int64_t>(x));
    return Json(x);
}

Json cia_json(const CiaVector& v) {
    return Json{{"c", v.c}, {"i", v.i}, {"a", v.a}};
}

void write_coverage(Json& obj, const Coverage& coverage) {
    if (coverage.from_instances()) {
        obj["deployed_instances"] = coverage.deployed_instances();
        obj["total_instances"] = coverage.total_instances();
    } else if (coverage.value() != 1.0) {
        obj["coverage"] = num(coverage.value());
    }
}

Json quantity_json(const UncertainQuantity& q) {
    if (q.is_level()) return Json{{"level", q.label()}};
    return Json{{"fixed", num(q.amount())}};
}

Json scale_json(const QuantScale& scale) {
    Json levels = Json::array();
    for (const auto& level : scale.levels)
        levels.push_back(Json{{"label", level.label},
                              {"min", num(level.min)},
                              {"mode", num(level.mode)},
                              {"max", num(level.max)}});
    return levels;
}

const char* action_name(MutationAction action) {
    switch (action) {
        case MutationAction::kSetEffectiveness: return "set-effectiveness";
        case MutationAction::kSetCoverage: return "set-coverage";
        case MutationAction::kSetDeployed: return "set-deployed";
        case MutationAction::kRemove: return "remove";
    }
    return "?";
}

}  // namespace

std::string serialize_scenario(const Scenario& scenario) {
    Json doc;
    doc["schema_version"] = kScenarioSchemaVersion;

    Json meta;
    meta["name"] = scenario.meta.name;
    if (!scenario.meta.currency.empty())
        meta["currency"] = scenario.meta.currency;
    doc["meta"] = std::move(meta);

    Json services = Json::array();
    for (const auto& service : scenario.services)
        services.push_back(
            Json{{"id", service.id}, {"value", cia_json(service.value)}});
    doc["services"] = std::move(services);

    Json threats = Json::array();
    for (const auto& threat : scenario.threats)
        threats.push_back(Json{{"id", threat.id},
                               {"dangerousness",
                                cia_json(threat.dangerousness)}});
    doc["threats"] = std::move(threats);

    Json applicability = Json::array();
    for (const auto& pair : scenario.applicability.pairs())
        applicability.push_back(Json{{"threat", pair.threat_id},
                                     {"service", pair.service_id}});
    doc["applicability"] = std::move(applicability);

    Json protections = Json::array();
    for (const auto& entry : scenario.protections.entries()) {
        Json p;
        p["threat"] = entry.threat_id;
        p["service"] = entry.service_id;
        p["effectiveness"] = num(entry.effectiveness);
        write_coverage(p, entry.coverage);
        if (!entry.deployed) p["deployed"] = false;
        protections.push_back(std::move(p));
    }
    doc["protections"] = std::move(protections);

    if (scenario.severity_scale || scenario.likelihood_scale) {
        Json scales;
        if (scenario.severity_scale)
            scales["severity"] = scale_json(*scenario.severity_scale);
        if (scenario.likelihood_scale)
            scales["likelihood"] = scale_json(*scenario.likelihood_scale);
        doc["scales"] = std::move(scales);
    }

    Json financials;
    if (scenario.financials.target)
        financials["target"] =
            Json{{"threat", scenario.financials.target->threat_id},
                 {"service", scenario.financials.target->service_id}};
    if (const auto* fixed = std::get_if<double>(&scenario.financials.ale)) {
        financials["ale"] = Json{{"fixed", num(*fixed)}};
    } else if (const auto* ledger =
                   std::get_if<AleLedgerSpec>(&scenario.financials.ale)) {
        Json losses;
        const auto& l = ledger->losses;
        if (l.la != 0.0) losses["la"] = num(l.la);
        if (l.ld != 0.0) losses["ld"] = num(l.ld);
        if (l.lr != 0.0) losses["lr"] = num(l.lr);
        if (l.lp != 0.0) losses["lp"] = num(l.lp);
        if (l.lrec != 0.0) losses["lrec"] = num(l.lrec);
        if (l.lrpc != 0.0) losses["lrpc"] = num(l.lrpc);
        if (l.ol != 0.0) losses["ol"] = num(l.ol);
        if (l.ci != 0.0) losses["ci"] = num(l.ci);
        if (losses.is_null()) losses = Json::object();
        financials["ale"] =
            Json{{"losses", std::move(losses)}, {"aro", num(ledger->aro)}};
    } else {
        const auto& spec = std::get<AleUncertaintySpec>(scenario.financials.ale);
        Json uncertain;
        auto component = [&](const char* key, const UncertainQuantity& q) {
            if (q != UncertainQuantity()) uncertain[key] = quantity_json(q);
        };
        component("la", spec.la);
        component("ld", spec.ld);
        component("lr", spec.lr);
        component("lp", spec.lp);
        component("lrec", spec.lrec);
        component("lrpc", spec.lrpc);
        component("ol", spec.ol);
        component("ci", spec.ci);
        uncertain["aro"] = quantity_json(spec.aro);
        uncertain["iterations"] = spec.iterations;
        uncertain["seed"] = spec.seed;
        financials["ale"] = Json{{"uncertain", std::move(uncertain)}};
    }
    if (const auto* fixed = std::get_if<double>(&scenario.financials.aiv)) {
        financials["aiv"] = Json{{"fixed", num(*fixed)}};
    } else {
        const auto& ledger = std::get<AivLedger>(scenario.financials.aiv);
        Json fields;
        if (ledger.ec != 0.0) fields["ec"] = num(ledger.ec);
        if (ledger.pc != 0.0) fields["pc"] = num(ledger.pc);
        if (ledger.sc != 0.0) fields["sc"] = num(ledger.sc);
        if (ledger.oc != 0.0) fields["oc"] = num(ledger.oc);
        if (ledger.rv != 0.0) fields["rv"] = num(ledger.rv);
        if (fields.is_null()) fields = Json::object();
        financials["aiv"] = Json{{"ledger", std::move(fields)}};
    }
    doc["financials"] = std::move(financials);

    Json candidates = Json::array();
    for (const auto& candidate : scenario.candidates) {
        Json c;
        c["id"] = candidate.id;
        if (!candidate.description.empty())
            c["description"] = candidate.description;
        if (candidate.target)
            c["target"] = Json{{"threat", candidate.target->threat_id},
                               {"service", candidate.target->service_id}};
        Json mutations = Json::array();
        for (const auto& mutation : candidate.mutations) {
            Json m;
            m["threat"] = mutation.threat_id;
            m["service"] = mutation.service_id;
            m["action"] = action_name(mutation.action);
            switch (mutation.action) {
                case MutationAction::kSetEffectiveness:
                    m["value"] = num(mutation.effectiveness);
                    break;
                case MutationAction::kSetCoverage:
                    if (mutation.coverage.from_instances()) {
                        m["deployed_instances"] =
                            mutation.coverage.deployed_instances();
                        m["total_instances"] =
                            mutation.coverage.total_instances();
                    } else {
                        m["coverage"] = num(mutation.coverage.value());
                    }
                    break;
                case MutationAction::kSetDeployed:
                    m["deployed"] = mutation.deployed;
                    break;
                case MutationAction::kRemove:
                    break;
            }
            mutations.push_back(std::move(m));
        }
        c["mutations"] = std::move(mutations);
        if (candidate.arc != ArcLedger{}) {
            Json arc;
            if (candidate.arc.ci != 0.0) arc["ci"] = num(candidate.arc.ci);
            if (candidate.arc.cm != 0.0) arc["cm"] = num(candidate.arc.cm);
            if (candidate.arc.odc != 0.0) arc["odc"] = num(candidate.arc.odc);
            if (candidate.arc.ic != 0.0) arc["ic"] = num(candidate.arc.ic);
            c["arc"] = std::move(arc);
        }
        if (candidate.rm_override) c["rm_override"] = num(*candidate.rm_override);
        candidates.push_back(std::move(c));
    }
    doc["candidates"] = std::move(candidates);

    return doc.dump(2) + "\n";
}

}  // namespace riposte
