#pragma once

/**
 * Output rendering shared by the CLI commands.
 *
 * Display rules: table output rounds matrix cells to integers and money,
 * RM and RORI to two decimals (halves away from zero); csv and json carry
 * unrounded values. csv follows RFC-4180 quoting with a header row. Numbers
 * in json/csv use the minimal decimal form, so identical inputs render to
 * byte-identical output.
 */

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "riposte/protection.hpp"
#include "riposte/scenario.hpp"
#include "riposte/selection.hpp"

namespace riposte {

enum class ReportFormat {
    kTable,
    kCsv,
    kJson,
};

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Minimal decimal representation: integral values without a fraction,
/// others with the shortest round-trip form.
std::string format_number(double x);

/// Fixed-point with `decimals` digits; -0.00 is normalized to 0.00.
std::string format_fixed(double x, int decimals);

/// RFC-4180 field quoting (quotes only when the field needs it).
std::string csv_field(const std::string& field);

struct MatrixRender {
    const DangerMatrix* matrix = nullptr;
    std::string which;      // assessed | actual | protection
    std::string na_label;   // "N/A" for danger matrices, "" for protection
};

void render_matrix(const MatrixRender& req, ReportFormat format,
                   std::ostream& out);

void render_ale(const AleOutcome& outcome, const DiagnosticList& diags,
                ReportFormat format, std::ostream& out);

void render_evaluations(const std::vector<Evaluation>& ranked,
                        const AleOutcome& ale, double aiv, RmMode mode,
                        ReportFormat format, std::ostream& out);

void render_evaluation_detail(const Evaluation& evaluation,
                              const AleOutcome& ale, double aiv, RmMode mode,
                              ReportFormat format, std::ostream& out);

}  // namespace riposte
