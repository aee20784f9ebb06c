#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conformal/algebra_io.hpp"
#include "conformal/analysis.hpp"
#include "conformal/report.hpp"

namespace {

// exit codes: 0 ok, 1 invalid input/file, 2 rejected algebra, 3 numerical failure
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRejected = 2;
constexpr int kExitNumerical = 3;

struct PipelineFlags {
  std::string algebra;
  std::string file;
  double tolerance = 1e-9;
  std::string format = "text";
  std::string report = "all";
};

void add_pipeline_flags(CLI::App* cmd, PipelineFlags* flags) {
  cmd->add_option("--algebra", flags->algebra,
                  "catalog algebra name; '+' builds direct sums, e.g. so(3)+so(3)");
  cmd->add_option("--file", flags->file, "path to a structure-constants JSON file");
  cmd->add_option("--tolerance", flags->tolerance, "rank / validation tolerance")
      ->capture_default_str();
  cmd->add_option("--format", flags->format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--report", flags->report, "report sections to render")
      ->check(CLI::IsMember({"connection", "curvature", "riemannian", "holonomy", "all"}))
      ->capture_default_str();
}

conformal::LieAlgebraSpec load_algebra(const PipelineFlags& flags) {
  if (flags.algebra.empty() == flags.file.empty())
    throw conformal::InputError("exactly one of --algebra or --file is required");
  if (!flags.algebra.empty())
    return conformal::catalog(flags.algebra);
  return conformal::parse_algebra_file(flags.file);
}

conformal::ReportSection parse_sections(const std::string& name) {
  using conformal::ReportSection;
  if (name == "connection")
    return ReportSection::Connection;
  if (name == "curvature")
    return ReportSection::Curvature;
  if (name == "riemannian")
    return ReportSection::Riemannian;
  if (name == "holonomy")
    return ReportSection::Holonomy;
  return ReportSection::All;
}

int run_catalog() {
  for (const auto& name : conformal::catalog_names())
    std::cout << name << "\n";
  return kExitOk;
}

int run_analyze(const PipelineFlags& flags) {
  const conformal::LieAlgebraSpec alg = load_algebra(flags);
  const conformal::AnalysisReport report =
      conformal::run_analysis(alg, {.tolerance = flags.tolerance});
  const conformal::ReportSection sections = parse_sections(flags.report);
  if (flags.format == "json")
    std::cout << conformal::render_json(report, sections) << "\n";
  else
    std::cout << conformal::render_text(report, sections);
  return kExitOk;
}

int run_verify(const PipelineFlags& flags) {
  const conformal::LieAlgebraSpec alg = load_algebra(flags);
  const conformal::AnalysisReport report =
      conformal::run_analysis(alg, {.tolerance = flags.tolerance});

  struct Check {
    const char* name;
    double value;
  };
  const std::vector<Check> checks = {
      {"jacobi", report.residuals.jacobi},
      {"torsion", report.residuals.torsion},
      {"trace_free", report.residuals.trace_free},
      {"gamma0_jacobi", report.residuals.gamma0_jacobi},
      {"normal_extension", report.residuals.normal_extension},
      {"weyl_cross_check", report.residuals.weyl_cross_check},
      {"kappa_minus1_max", report.curvature.kappa_minus1_max},
      {"kappa1_max", report.curvature.kappa1_max},
      {"einstein_residual", report.riemannian.einstein_residual},
  };

  bool ok = report.holonomy.closed_under_bracket;
  for (const auto& check : checks)
    ok = ok && check.value <= flags.tolerance;

  if (flags.format == "json") {
    std::string out = "{\"algebra\":\"" + report.algebra_name + "\",\"checks\":[";
    bool first = true;
    for (const auto& check : checks) {
      char item[160];
      std::snprintf(item, sizeof(item), "%s{\"name\":\"%s\",\"value\":%.17g,\"pass\":%s}",
                    first ? "" : ",", check.name, check.value,
                    check.value <= flags.tolerance ? "true" : "false");
      out += item;
      first = false;
    }
    out += std::string(",{\"name\":\"bracket_closed\",\"pass\":") +
           (report.holonomy.closed_under_bracket ? "true" : "false") + "}]";
    out += std::string(",\"pass\":") + (ok ? "true" : "false") + "}";
    std::printf("%s\n", out.c_str());
    return ok ? kExitOk : kExitNumerical;
  }

  std::printf("verify %s (tolerance %g)\n", report.algebra_name.c_str(), flags.tolerance);
  for (const auto& check : checks)
    std::printf("  %s %-18s %.3e\n", check.value <= flags.tolerance ? "PASS" : "FAIL",
                check.name, check.value);
  std::printf("  %s %-18s %s\n", report.holonomy.closed_under_bracket ? "PASS" : "FAIL",
              "bracket_closed", report.holonomy.closed_under_bracket ? "true" : "false");
  std::printf("holonomy: %s (dim %d)\n",
              report.holonomy.candidate_name.empty() ? "(unnamed)"
                                                     : report.holonomy.candidate_name.c_str(),
              report.holonomy.algebra_dim);
  std::printf("result: %s\n", ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitNumerical;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal conformal Cartan connections and holonomy of bi-invariant "
               "metrics on compact semisimple Lie algebras"};
  app.require_subcommand(1);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list the built-in algebras");
  PipelineFlags analyze_flags;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "run the full pipeline and print a report");
  add_pipeline_flags(analyze_cmd, &analyze_flags);
  PipelineFlags verify_flags;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the pipeline and check residuals against --tolerance");
  add_pipeline_flags(verify_cmd, &verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (catalog_cmd->parsed())
      return run_catalog();
    if (analyze_cmd->parsed())
      return run_analyze(analyze_flags);
    if (verify_cmd->parsed())
      return run_verify(verify_flags);
    return kExitInput;
  } catch (const conformal::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const conformal::InvalidAlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const conformal::NotSemisimpleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const conformal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
