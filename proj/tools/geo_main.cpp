#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geo/report.hpp"
#include "geo/scan.hpp"
#include "geo/verify.hpp"

namespace {

// Exit-code contract: 0 pass, 1 verification counterexample, 2 user-input
// error, 3 internal inconsistency.
constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUserError = 2;
constexpr int kExitInternalError = 3;

int cmd_report(const std::string& path, const std::string& format, bool inject_defect) {
  const geo::ParsedInput input = geo::load_input_file(path);
  const geo::GeometryReport report = geo::analyze(input.algebra, input.echo, inject_defect);
  if (format == "json")
    std::cout << geo::report_to_json(report).dump(2) << "\n";
  else
    std::cout << geo::report_to_text(report);
  if (report.has_crosscheck && !report.crosscheck_agrees) {
    std::string names;
    for (const auto& m : report.crosscheck.at("mismatches"))
      names += (names.empty() ? "" : ", ") + m.get<std::string>();
    std::cerr << "internal error: closed-form cross-check disagrees with tensor predicates: " << names
              << "\n";
    return kExitInternalError;
  }
  return kExitPass;
}

int cmd_verify(const std::string& suite, const geo::SamplerConfig& cfg) {
  std::vector<geo::VerificationOutcome> outcomes;
  if (suite == "all")
    outcomes = geo::verify_all(cfg);
  else if (suite == "main")
    outcomes = {geo::verify_theorem_main(cfg)};
  else if (suite == "integrable")
    outcomes = {geo::verify_theorem_integrable(cfg)};
  else if (suite == "lemma")
    outcomes = {geo::verify_lemma_divergence(cfg)};
  else if (suite == "geometry")
    outcomes = {geo::verify_prop_geometry(cfg)};
  else if (suite == "families")
    outcomes = geo::verify_families(cfg);
  else
    outcomes = {geo::verify_proof_steps(cfg)};

  bool all_pass = true;
  for (const auto& outcome : outcomes) {
    std::cout << geo::outcome_to_json(outcome, cfg).dump() << "\n";
    if (!outcome.pass) {
      all_pass = false;
      std::cerr << "FAIL " << outcome.statement << ": " << outcome.counterexamples_total
                << " counterexample(s), first " << outcome.counterexamples.size() << " recorded\n";
      if (!outcome.counterexamples.empty()) {
        const auto& ce = outcome.counterexamples.front();
        std::cerr << "  params:   " << ce.params << "\n";
        std::cerr << "  expected: " << ce.expected << "\n";
        std::cerr << "  got:      " << ce.got << "\n";
      }
    }
  }
  return all_pass ? kExitPass : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tol = std::getenv("GEO_FLOAT_TOL")) {
    try {
      geo::float_tolerance() = std::stod(tol);
    } catch (const std::exception&) {
      std::cerr << "error: GEO_FLOAT_TOL is not a number: " << tol << "\n";
      return kExitUserError;
    }
  }

  CLI::App app{"Exact-arithmetic geometry engine for 4-dimensional Lie algebras\n"
               "with orthonormal frame (X, Y, Z, W) and the codimension-2 foliation\n"
               "spanned by {Z, W}."};
  app.require_subcommand(1);

  auto* report_cmd = app.add_subcommand("report", "Full geometry report for one algebra instance");
  std::string input_path;
  std::string report_format = "text";
  bool inject_defect = false;
  report_cmd->add_option("file", input_path, "JSON input document (schema, family, or table form)")
      ->required();
  report_cmd->add_option("--format", report_format, "Output format (default text)")
      ->check(CLI::IsMember({"json", "text"}));
  report_cmd
      ->add_flag("--inject-crosscheck-defect", inject_defect,
                 "Test fixture: corrupt a closed form to prove the exit-3 path")
      ->group("");

  auto* verify_cmd = app.add_subcommand("verify", "Run the statement-verification suites");
  std::string suite = "all";
  geo::SamplerConfig cfg;
  verify_cmd->add_option("--suite", suite, "Which suite to run (default all)")
      ->check(CLI::IsMember({"all", "main", "integrable", "lemma", "geometry", "families", "proof-steps"}));
  verify_cmd->add_option("--samples", cfg.samples, "Samples per suite (default 1000)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", cfg.seed, "PRNG seed (default 42)");
  verify_cmd
      ->add_flag("--mutate-closed-form", cfg.mutate_closed_form,
                 "Test fixture: corrupt the lemma closed form to prove the exit-1 path")
      ->group("");

  auto* scan_cmd = app.add_subcommand("scan", "Sweep a parameter grid and chart a predicate (CSV)");
  std::string family_name;
  bool schema_mode = false;
  std::vector<std::string> fix_specs, grid_specs;
  geo::ScanRequest request;
  std::string out_path;
  std::string scan_format = "csv";
  scan_cmd->add_option("--family", family_name, "Sweep family parameters (g5, g18 or g20)")
      ->check(CLI::IsMember({"g5", "g18", "g20"}));
  scan_cmd->add_flag("--schema", schema_mode, "Sweep raw schema coefficients");
  scan_cmd->add_option("--fix", fix_specs, "Fix a parameter, e.g. --fix a=1 (repeatable)");
  scan_cmd->add_option("--grid", grid_specs, "Grid axis, e.g. --grid alpha=-2..2/8 (repeatable)")
      ->delimiter(',');
  scan_cmd->add_option("--predicate", request.predicate, "Predicate column to chart")->required();
  scan_cmd->add_option("--out", out_path, "Output CSV path")->required();
  scan_cmd->add_option("--format", scan_format, "Output format (csv)")->check(CLI::IsMember({"csv"}));
  scan_cmd->add_flag("--float", request.float_mode,
                     "Evaluate in binary64 with GEO_FLOAT_TOL comparisons instead of exact rationals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUserError;
  }

  try {
    if (report_cmd->parsed()) return cmd_report(input_path, report_format, inject_defect);
    if (verify_cmd->parsed()) return cmd_verify(suite, cfg);

    // scan
    if (schema_mode == !family_name.empty()) {
      std::cerr << "error: exactly one of --schema or --family is required\n";
      return kExitUserError;
    }
    if (!family_name.empty())
      request.family = family_name == "g5"    ? geo::FamilyName::g5
                       : family_name == "g18" ? geo::FamilyName::g18
                                              : geo::FamilyName::g20;
    for (const auto& spec : fix_specs) {
      auto [param, value] = geo::parse_fix_spec(spec);
      if (!request.fixed.emplace(param, value).second) {
        std::cerr << "error: parameter \"" << param << "\" fixed more than once\n";
        return kExitUserError;
      }
    }
    for (auto spec : grid_specs) {
      while (!spec.empty() && spec.front() == ' ') spec.erase(spec.begin());
      while (!spec.empty() && spec.back() == ' ') spec.pop_back();
      request.grids.push_back(geo::parse_grid_spec(spec));
    }
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open output file: " << out_path << "\n";
      return kExitUserError;
    }
    geo::run_scan(request, out);
    return kExitPass;
  } catch (const geo::InternalCheckError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    // Parse errors, inadmissible parameters, scan request problems: all user input.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  }
}
