#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "realtoric/cli.hpp"

int main(int argc, char** argv) {
  using realtoric::cli::Format;
  realtoric::cli::RunConfig config;
  std::string out_path;
  int n = 0, i = 0, N = 0, bound = 0;

  CLI::App app{"Cohomology of the real type-A Coxeter toric variety: tables and verifications"};
  app.add_option("command", config.command, "Command to run (see --describe)");
  auto* n_opt = app.add_option("--n", n, "Degree n");
  auto* i_opt = app.add_option("--i", i, "Cohomological degree i");
  auto* N_opt = app.add_option("--N", N, "Truncation degree for series identities");
  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
  app.add_option("--format", config.format, "Output format: json, csv or plain")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""));
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  auto* bound_opt = app.add_option("--bound", bound, "Largest even interval built by brute force");
  app.add_option("--seed", config.seed, "Seed for randomized sampling in model-check");
  app.add_option("--input", config.input, "ModelPoint JSON file for model-check ('-' for stdin)");
  app.add_flag("--describe", config.describe, "Print the statement each command checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : realtoric::cli::kExitUsage;
  }
  if (*n_opt) config.n = n;
  if (*i_opt) config.i = i;
  if (*N_opt) config.N = N;
  if (*bound_opt) config.bound = bound;
  if (config.command.empty() && !config.describe) {
    std::cerr << app.help();
    return realtoric::cli::kExitUsage;
  }

  if (out_path.empty()) return realtoric::cli::run(config, std::cout, std::cerr);
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return realtoric::cli::kExitUsage;
  }
  return realtoric::cli::run(config, file, std::cerr);
}
