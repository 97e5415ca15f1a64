#include "riposte/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "riposte/errors.hpp"
#include "riposte/protection.hpp"
#include "riposte/render.hpp"
#include "riposte/scenario.hpp"
#include "riposte/scenario_io.hpp"
#include "riposte/selection.hpp"
#include "riposte/version.hpp"

namespace riposte::cli {

namespace {

void print_diagnostics(const DiagnosticList& diags, bool quiet,
                       std::ostream& err) {
    for (const auto& d : diags) {
        if (quiet && d.severity != Severity::kError) continue;
        err << severity_label(d.severity) << ": " << d.location << ": "
            << d.message << "\n";
    }
}

struct Options {
    std::string scenario_path;
    ReportFormat format = ReportFormat::kTable;
    std::string output_path;
    bool quiet = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> iterations;
    std::string which;               // matrices
    std::string candidate_id;        // evaluate
    RmMode rm_mode = RmMode::kExact; // rank, evaluate
};

/// Routes command payload to --output or standard output.
class OutputSink {
public:
    OutputSink(const std::string& path, std::ostream& fallback)
        : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            use_file_ = true;
        }
    }

    bool ok() const { return !use_file_ || file_.is_open(); }
    std::ostream& stream() { return use_file_ ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
    bool use_file_ = false;
};

RmMode parse_rm_mode(const std::string& name) {
    return name == "paper-rounded" ? RmMode::kPaperRounded : RmMode::kExact;
}

int run_matrices(const Scenario& scenario, const Options& opts,
                 std::ostream& out) {
    MatrixRender req;
    DangerMatrices matrices;
    DangerMatrix protection;
    if (opts.which == "assessed" || opts.which == "actual") {
        matrices = danger_matrices(scenario);
        req.matrix = opts.which == "assessed" ? &matrices.assessed
                                              : &matrices.actual;
        req.na_label = "N/A";
    } else {
        protection = protection_matrix(scenario);
        req.matrix = &protection;
        req.na_label = "";
    }
    req.which = opts.which;
    render_matrix(req, opts.format, out);
    return kExitOk;
}

int run_ale(const Scenario& scenario, const Options& opts, std::ostream& out,
            std::ostream& err) {
    DiagnosticList diags;
    AleOutcome outcome =
        compute_ale(scenario, opts.iterations, opts.seed, 1, &diags);
    print_diagnostics(diags, opts.quiet, err);
    render_ale(outcome, diags, opts.format, out);
    return kExitOk;
}

std::vector<Evaluation> evaluate_all(const Scenario& scenario,
                                     const AleOutcome& ale, double aiv,
                                     RmMode mode) {
    std::vector<Evaluation> evaluations;
    evaluations.reserve(scenario.candidates.size());
    for (const auto& candidate : scenario.candidates) {
        ThreatServicePair target = evaluation_target(scenario, candidate);
        evaluations.push_back(
            evaluate_candidate(scenario, candidate, target, ale.value, aiv,
                               mode));
    }
    return evaluations;
}

int run_rank(const Scenario& scenario, const Options& opts, std::ostream& out,
             std::ostream& err) {
    if (scenario.candidates.empty())
        throw EngineError("scenario has no candidates to rank");
    DiagnosticList diags;
    AleOutcome ale = compute_ale(scenario, {}, opts.seed, 1, &diags);
    if (ale.summary)
        diags.push_back({Severity::kInfo, "financials.ale",
                         "Monte Carlo distribution mean used as ALE"});
    double aiv = compute_aiv(scenario);
    std::vector<Evaluation> ranked =
        rank_candidates(evaluate_all(scenario, ale, aiv, opts.rm_mode));
    for (const auto& evaluation : ranked)
        print_diagnostics(evaluation.diagnostics, opts.quiet, err);
    print_diagnostics(diags, opts.quiet, err);
    render_evaluations(ranked, ale, aiv, opts.rm_mode, opts.format, out);
    return kExitOk;
}

int run_evaluate(const Scenario& scenario, const Options& opts,
                 std::ostream& out, std::ostream& err) {
    const Candidate* candidate = scenario.find_candidate(opts.candidate_id);
    if (!candidate)
        throw EngineError("no candidate with id '" + opts.candidate_id + "'");
    DiagnosticList diags;
    AleOutcome ale = compute_ale(scenario, {}, opts.seed, 1, &diags);
    double aiv = compute_aiv(scenario);
    ThreatServicePair target = evaluation_target(scenario, *candidate);
    Evaluation evaluation = evaluate_candidate(scenario, *candidate, target,
                                               ale.value, aiv, opts.rm_mode);
    print_diagnostics(evaluation.diagnostics, opts.quiet, err);
    print_diagnostics(diags, opts.quiet, err);
    render_evaluation_detail(evaluation, ale, aiv, opts.rm_mode, opts.format,
                             out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Countermeasure selection engine: protection-level matrices, "
                 "loss simulation and return-on-response-investment ranking"};
    app.name("riposte");
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Options opts;
    std::string format_name = "table";
    std::string rm_mode_name = "exact";
    std::uint64_t seed_value = 0;
    std::int64_t iterations_value = 0;

    app.add_option("--scenario", opts.scenario_path, "Scenario file (JSON)")
        ->required();
    app.add_option("--format", format_name,
                   "Output format: table, csv or json")
        ->default_val("table");
    app.add_option("--output", opts.output_path,
                   "Write the report to a file instead of standard output");
    auto* seed_opt = app.add_option(
        "--seed", seed_value, "Seed for Monte Carlo runs (default 0)");
    app.add_flag("--quiet", opts.quiet, "Suppress warnings on stderr");

    app.add_subcommand("validate",
                       "Check the scenario and print diagnostics");

    auto* matrices_cmd = app.add_subcommand(
        "matrices", "Print a threats-by-services matrix");
    matrices_cmd
        ->add_option("--which", opts.which,
                     "Matrix to print: assessed, actual or protection")
        ->required()
        ->check(CLI::IsMember({"assessed", "actual", "protection"}));

    auto* ale_cmd = app.add_subcommand(
        "ale", "Compute or simulate the annual loss expectancy");
    auto* iterations_opt = ale_cmd->add_option(
        "--iterations", iterations_value, "Monte Carlo iteration count");

    auto* rank_cmd = app.add_subcommand(
        "rank", "Evaluate and rank every candidate countermeasure");
    rank_cmd->add_option("--rm-mode", rm_mode_name,
                         "Risk mitigation chain: exact or paper-rounded")
        ->check(CLI::IsMember({"exact", "paper-rounded"}));

    auto* evaluate_cmd =
        app.add_subcommand("evaluate", "Evaluate a single candidate by id");
    evaluate_cmd->add_option("--candidate", opts.candidate_id, "Candidate id")
        ->required();
    evaluate_cmd
        ->add_option("--rm-mode", rm_mode_name,
                     "Risk mitigation chain: exact or paper-rounded")
        ->check(CLI::IsMember({"exact", "paper-rounded"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoOrParse;
    }

    auto format = parse_report_format(format_name);
    if (!format) {
        err << "error: unknown format '" << format_name << "'\n";
        return kExitIoOrParse;
    }
    opts.format = *format;
    opts.rm_mode = parse_rm_mode(rm_mode_name);
    if (seed_opt->count() > 0) opts.seed = seed_value;
    if (iterations_opt->count() > 0) opts.iterations = iterations_value;

    ParseResult parsed = load_scenario_file(opts.scenario_path);
    if (!parsed.ok()) {
        print_diagnostics(parsed.errors, false, err);
        return kExitIoOrParse;
    }
    const Scenario& scenario = *parsed.scenario;

    DiagnosticList validation = validate_scenario(scenario);
    print_diagnostics(validation, opts.quiet, err);
    if (app.get_subcommand("validate")->parsed())
        return has_errors(validation) ? kExitValidation : kExitOk;
    if (has_errors(validation)) return kExitValidation;

    OutputSink sink(opts.output_path, out);
    if (!sink.ok()) {
        err << "error: cannot open output file '" << opts.output_path
            << "'\n";
        return kExitIoOrParse;
    }

    try {
        if (matrices_cmd->parsed())
            return run_matrices(scenario, opts, sink.stream());
        if (ale_cmd->parsed())
            return run_ale(scenario, opts, sink.stream(), err);
        if (rank_cmd->parsed())
            return run_rank(scenario, opts, sink.stream(), err);
        if (evaluate_cmd->parsed())
            return run_evaluate(scenario, opts, sink.stream(), err);
    } catch (const EngineError& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    err << "error: no subcommand given\n";
    return kExitIoOrParse;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace riposte::cli
