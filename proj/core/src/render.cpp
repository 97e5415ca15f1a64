#include "riposte/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>

#include <nlohmann/json.hpp>

#include "riposte/numeric.hpp"
#include "riposte/scenario_io.hpp"

namespace riposte {

namespace {

using Json = nlohmann::ordered_json;

Json json_number(double x) {
    if (std::isfinite(x) && x == std::floor(x) && std::abs(x) <= 9.0e15)
        return Json(static_cast<std::int64_t>(x));
    return Json(x);
}

Json diagnostics_json(const DiagnosticList& diags) {
    Json arr = Json::array();
    for (const auto& d : diags)
        arr.push_back(Json{{"severity", severity_label(d.severity)},
                           {"location", d.location},
                           {"message", d.message}});
    return arr;
}

std::string integer_cell(double value) {
    auto rounded = static_cast<long long>(round_half_away(value));
    return std::to_string(rounded);
}

/// Simple fixed-width table writer: the first `left_columns` columns are
/// left-aligned (labels), the rest right-aligned (numbers).
void write_table(const std::vector<std::vector<std::string>>& rows,
                 std::ostream& out, std::size_t left_columns = 1) {
    if (rows.empty()) return;
    std::size_t columns = 0;
    for (const auto& row : rows) columns = std::max(columns, row.size());
    std::vector<std::size_t> widths(columns, 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            if (c < left_columns) {
                line += row[c];
                line.append(widths[c] - row[c].size(), ' ');
            } else {
                line.append(widths[c] - row[c].size(), ' ');
                line += row[c];
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
}

void write_csv_row(const std::vector<std::string>& fields, std::ostream& out) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ",";
        out << csv_field(fields[i]);
    }
    out << "\n";
}

std::string flags_field(const std::vector<std::string>& flags) {
    std::string joined;
    for (const auto& flag : flags) {
        if (!joined.empty()) joined += ";";
        joined += flag;
    }
    return joined;
}

const char* rm_mode_name(RmMode mode) {
    return mode == RmMode::kPaperRounded ? "paper-rounded" : "exact";
}

Json ale_json(const AleOutcome& ale) {
    Json j;
    j["source"] = ale.source;
    j["value"] = json_number(ale.value);
    if (ale.summary) {
        const auto& s = *ale.summary;
        j["summary"] = Json{{"mean", json_number(s.mean)},
                            {"p05", json_number(s.p05)},
                            {"p50", json_number(s.p50)},
                            {"p95", json_number(s.p95)},
                            {"iterations", s.iterations},
                            {"seed", s.seed},
                            {"generator", s.generator}};
    }
    return j;
}

Json evaluation_json(const Evaluation& e, int rank) {
    Json j;
    if (rank > 0) j["rank"] = rank;
    j["candidate"] = e.candidate_id;
    j["target"] = Json{{"threat", e.target.threat_id},
                       {"service", e.target.service_id}};
    j["pl_current"] = json_number(e.pl_current);
    j["pl_potential"] = json_number(e.pl_potential);
    j["security_impact"] = json_number(e.security_impact);
    j["rm"] = json_number(e.rm);
    j["arc"] = json_number(e.arc);
    j["rori"] = json_number(e.rori);
    Json flags = Json::array();
    for (const auto& flag : e.flags) flags.push_back(flag);
    j["flags"] = std::move(flags);
    j["diagnostics"] = diagnostics_json(e.diagnostics);
    return j;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
    if (name == "table") return ReportFormat::kTable;
    if (name == "csv") return ReportFormat::kCsv;
    if (name == "json") return ReportFormat::kJson;
    return std::nullopt;
}

std::string format_number(double x) {
    return json_number(x).dump();
}

std::string format_fixed(double x, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, x);
    std::string text(buffer);
    // normalize negative zero
    bool zeroish = true;
    for (char ch : text)
        if (ch != '-' && ch != '0' && ch != '.') zeroish = false;
    if (zeroish && text[0] == '-') text.erase(0, 1);
    return text;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

void render_matrix(const MatrixRender& req, ReportFormat format,
                   std::ostream& out) {
    const DangerMatrix& m = *req.matrix;
    switch (format) {
        case ReportFormat::kTable: {
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header{"threat"};
            header.insert(header.end(), m.service_ids.begin(),
                          m.service_ids.end());
            rows.push_back(std::move(header));
            for (std::size_t r = 0; r < m.threat_ids.size(); ++r) {
                std::vector<std::string> row{m.threat_ids[r]};
                for (std::size_t c = 0; c < m.service_ids.size(); ++c) {
                    const auto& cell = m.at(r, c);
                    row.push_back(cell ? integer_cell(*cell) : req.na_label);
                }
                rows.push_back(std::move(row));
            }
            write_table(rows, out);
            return;
        }
        case ReportFormat::kCsv: {
            std::vector<std::string> header{"threat"};
            header.insert(header.end(), m.service_ids.begin(),
                          m.service_ids.end());
            write_csv_row(header, out);
            for (std::size_t r = 0; r < m.threat_ids.size(); ++r) {
                std::vector<std::string> row{m.threat_ids[r]};
                for (std::size_t c = 0; c < m.service_ids.size(); ++c) {
                    const auto& cell = m.at(r, c);
                    row.push_back(cell ? format_number(*cell) : req.na_label);
                }
                write_csv_row(row, out);
            }
            return;
        }
        case ReportFormat::kJson: {
            Json j;
            j["schema_version"] = kScenarioSchemaVersion;
            j["command"] = "matrices";
            j["which"] = req.which;
            j["threats"] = m.threat_ids;
            j["services"] = m.service_ids;
            Json cells = Json::array();
            for (std::size_t r = 0; r < m.threat_ids.size(); ++r) {
                Json row = Json::array();
                for (std::size_t c = 0; c < m.service_ids.size(); ++c) {
                    const auto& cell = m.at(r, c);
                    row.push_back(cell ? json_number(*cell) : Json(nullptr));
                }
                cells.push_back(std::move(row));
            }
            j["cells"] = std::move(cells);
            out << j.dump(2) << "\n";
            return;
        }
    }
}

void render_ale(const AleOutcome& outcome, const DiagnosticList& diags,
                ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::kTable: {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"source", outcome.source});
            rows.push_back({"value", format_fixed(outcome.value, 2)});
            if (outcome.summary) {
                const auto& s = *outcome.summary;
                rows.push_back({"mean", format_fixed(s.mean, 2)});
                rows.push_back({"p05", format_fixed(s.p05, 2)});
                rows.push_back({"p50", format_fixed(s.p50, 2)});
                rows.push_back({"p95", format_fixed(s.p95, 2)});
                rows.push_back({"iterations", std::to_string(s.iterations)});
                rows.push_back({"seed", std::to_string(s.seed)});
                rows.push_back({"generator", s.generator});
            }
            write_table(rows, out);
            return;
        }
        case ReportFormat::kCsv: {
            write_csv_row({"field", "value"}, out);
            write_csv_row({"source", outcome.source}, out);
            write_csv_row({"value", format_number(outcome.value)}, out);
            if (outcome.summary) {
                const auto& s = *outcome.summary;
                write_csv_row({"mean", format_number(s.mean)}, out);
                write_csv_row({"p05", format_number(s.p05)}, out);
                write_csv_row({"p50", format_number(s.p50)}, out);
                write_csv_row({"p95", format_number(s.p95)}, out);
                write_csv_row({"iterations", std::to_string(s.iterations)},
                              out);
                write_csv_row({"seed", std::to_string(s.seed)}, out);
                write_csv_row({"generator", s.generator}, out);
            }
            return;
        }
        case ReportFormat::kJson: {
            Json j;
            j["schema_version"] = kScenarioSchemaVersion;
            j["command"] = "ale";
            Json ale = ale_json(outcome);
            for (auto& item : ale.items()) j[item.key()] = item.value();
            j["diagnostics"] = diagnostics_json(diags);
            out << j.dump(2) << "\n";
            return;
        }
    }
}

void render_evaluations(const std::vector<Evaluation>& ranked,
                        const AleOutcome& ale, double aiv, RmMode mode,
                        ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::kTable: {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"rank", "candidate", "arc", "rm", "rori", "flags"});
            int rank = 1;
            for (const auto& e : ranked) {
                rows.push_back({std::to_string(rank++), e.candidate_id,
                                format_fixed(e.arc, 2), format_fixed(e.rm, 2),
                                format_fixed(e.rori, 2),
                                flags_field(e.flags)});
            }
            write_table(rows, out, 2);
            return;
        }
        case ReportFormat::kCsv: {
            write_csv_row({"rank", "candidate", "arc", "rm", "rori", "flags"},
                          out);
            int rank = 1;
            for (const auto& e : ranked)
                write_csv_row({std::to_string(rank++), e.candidate_id,
                               format_number(e.arc), format_number(e.rm),
                               format_number(e.rori), flags_field(e.flags)},
                              out);
            return;
        }
        case ReportFormat::kJson: {
            Json j;
            j["schema_version"] = kScenarioSchemaVersion;
            j["command"] = "rank";
            j["rm_mode"] = rm_mode_name(mode);
            j["ale"] = ale_json(ale);
            j["aiv"] = json_number(aiv);
            Json evaluations = Json::array();
            int rank = 1;
            for (const auto& e : ranked)
                evaluations.push_back(evaluation_json(e, rank++));
            j["evaluations"] = std::move(evaluations);
            out << j.dump(2) << "\n";
            return;
        }
    }
}

void render_evaluation_detail(const Evaluation& evaluation,
                              const AleOutcome& ale, double aiv, RmMode mode,
                              ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::kTable: {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"candidate", evaluation.candidate_id});
            rows.push_back({"threat", evaluation.target.threat_id});
            rows.push_back({"service", evaluation.target.service_id});
            rows.push_back({"rm_mode", rm_mode_name(mode)});
            rows.push_back(
                {"pl_current", format_fixed(evaluation.pl_current, 2)});
            rows.push_back(
                {"pl_potential", format_fixed(evaluation.pl_potential, 2)});
            rows.push_back({"security_impact",
                            format_fixed(evaluation.security_impact, 2)});
            rows.push_back({"rm", format_fixed(evaluation.rm, 2)});
            rows.push_back({"arc", format_fixed(evaluation.arc, 2)});
            rows.push_back({"ale", format_fixed(ale.value, 2)});
            rows.push_back({"aiv", format_fixed(aiv, 2)});
            rows.push_back({"rori", format_fixed(evaluation.rori, 2)});
            if (!evaluation.flags.empty())
                rows.push_back({"flags", flags_field(evaluation.flags)});
            write_table(rows, out);
            return;
        }
        case ReportFormat::kCsv: {
            write_csv_row({"field", "value"}, out);
            write_csv_row({"candidate", evaluation.candidate_id}, out);
            write_csv_row({"threat", evaluation.target.threat_id}, out);
            write_csv_row({"service", evaluation.target.service_id}, out);
            write_csv_row({"rm_mode", rm_mode_name(mode)}, out);
            write_csv_row(
                {"pl_current", format_number(evaluation.pl_current)}, out);
            write_csv_row(
                {"pl_potential", format_number(evaluation.pl_potential)}, out);
            write_csv_row(
                {"security_impact", format_number(evaluation.security_impact)},
                out);
            write_csv_row({"rm", format_number(evaluation.rm)}, out);
            write_csv_row({"arc", format_number(evaluation.arc)}, out);
            write_csv_row({"ale", format_number(ale.value)}, out);
            write_csv_row({"aiv", format_number(aiv)}, out);
            write_csv_row({"rori", format_number(evaluation.rori)}, out);
            write_csv_row({"flags", flags_field(evaluation.flags)}, out);
            return;
        }
        case ReportFormat::kJson: {
            Json j;
            j["schema_version"] = kScenarioSchemaVersion;
            j["command"] = "evaluate";
            j["rm_mode"] = rm_mode_name(mode);
            j["ale"] = ale_json(ale);
            j["aiv"] = json_number(aiv);
            j["evaluation"] = evaluation_json(evaluation, 0);
            out << j.dump(2) << "\n";
            return;
        }
    }
}

}  // namespace riposte
