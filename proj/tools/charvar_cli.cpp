#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  using namespace charvar::cli;
  CLI::App app{"Character varieties of free groups: classification, cohomology, traces, Poincare polynomials"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "human";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed (default 0)");
    sub->add_option("--tol", cfg.tol, "Relative singular-value cutoff (default 1e-8)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "Worker threads over input files")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Output path");
  };

  auto* classify = app.add_subcommand("classify", "Smooth/singular verdict, stratum and local model per file");
  auto* cohomology = app.add_subcommand("cohomology", "Z1/B1/H1 and stabiliser dimensions per file");
  auto* traces = app.add_subcommand("traces", "Word traces and determinants per file");
  for (auto* sub : {classify, cohomology, traces}) {
    add_common(sub);
    sub->add_option("files", cfg.inputs, "Representation JSON files")->required();
  }
  traces->add_option("--max-length", cfg.max_length, "Longest word (default 2)");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials of X_r(SU(2)) and the duality obstruction");
  add_common(poincare);
  std::optional<std::size_t> single_r;
  poincare->add_option("r", single_r, "Single rank (overrides --r-min/--r-max)");
  poincare->add_option("--r-min", cfg.r_min, "First rank (default 1)");
  poincare->add_option("--r-max", cfg.r_max, "Last rank (default 4)");
  poincare->add_flag("--betti", cfg.betti, "Emit degree,coefficient Betti tables");

  auto* gen = app.add_subcommand("gen", "Write a seeded random representation");
  add_common(gen);
  gen->add_option("family", cfg.family, "GL, SL, U or SU")->required();
  gen->add_option("n", cfg.n, "Matrix size")->required();
  gen->add_option("r", cfg.r, "Number of generators")->required();
  gen->add_option("mode", cfg.mode, "generic, central, identity or reduced:N1,N2");

  auto* fixtures = app.add_subcommand("fixtures", "Write the fixture representations and manifest.json");
  add_common(fixtures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }
  cfg.format = format == "csv" ? Format::csv : Format::human;
  if (single_r) cfg.r_min = cfg.r_max = *single_r;

  CommandResult res;
  try {
    if (classify->parsed()) res = cmd_classify(cfg);
    else if (cohomology->parsed()) res = cmd_cohomology(cfg);
    else if (traces->parsed()) res = cmd_traces(cfg);
    else if (poincare->parsed()) res = cmd_poincare(cfg);
    else if (gen->parsed()) res = cmd_gen(cfg);
    else if (fixtures->parsed()) res = cmd_fixtures(cfg);
  } catch (const charvar::internal_error& e) {
    res = {exit_internal_error, "", std::string("internal error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    res = {exit_input_error, "", std::string(e.what()) + "\n"};
  }
  if (!cfg.out.empty() && !gen->parsed() && !fixtures->parsed()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << res.err << "cannot write " << cfg.out << "\n";
      return exit_input_error;
    }
    f << res.out;
  } else {
    std::cout << res.out;
  }
  std::cerr << res.err;
  return res.exit_code;
}
