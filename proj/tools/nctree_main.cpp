#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nctree/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = nctree::cli;
  CLI::App app{"Non-crossing spanning trees on bicolored point sets with blue leaves"};
  app.require_subcommand(1);

  cli::SolveOptions solve_opt;
  std::int64_t max_iters = 0;
  int uniform_degree = 0;
  auto* solve = app.add_subcommand("solve", "Build a non-crossing tree for an instance file");
  solve->add_option("--input", solve_opt.input, "Instance JSON")->required();
  solve->add_option("--output", solve_opt.output, "Solution JSON to write")->required();
  auto* svg = solve->add_option("--svg", "SVG drawing to write");
  auto* trace = solve->add_option("--trace", "Swap trace JSON to write");
  auto* iters = solve->add_option("--max-iters", max_iters, "Swap cap (default 10 n^3)")->check(CLI::PositiveNumber);
  auto* uniform = solve->add_option("--uniform-degree", uniform_degree, "Override every red budget with K");

  nctree::GenParams gen_params;
  std::string f_mode = "equality";
  auto* gen = app.add_subcommand("gen", "Print a random general-position instance");
  gen->add_option("--n-red", gen_params.n_red, "Red point count")->required();
  gen->add_option("--n-blue", gen_params.n_blue, "Blue point count")->required();
  gen->add_option("--f-mode", f_mode, "uniform:K, random:A..B or equality")->required();
  gen->add_option("--bbox", gen_params.bbox, "Coordinates are drawn from [0, N]")->required();
  gen->add_option("--seed", gen_params.seed, "RNG seed")->required();

  std::string verify_input, verify_tree;
  auto* verify = app.add_subcommand("verify", "Check a solution against its instance");
  verify->add_option("--input", verify_input, "Instance JSON")->required();
  verify->add_option("--tree", verify_tree, "Solution JSON")->required();

  std::string oracle_input;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive check for instances of at most 9 points");
  oracle->add_option("--input", oracle_input, "Instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cli::kUsage;
  }

  if (*solve) {
    if (*svg) solve_opt.svg = svg->as<std::string>();
    if (*trace) solve_opt.trace = trace->as<std::string>();
    if (*iters) solve_opt.max_iters = max_iters;
    if (*uniform) solve_opt.uniform_degree = uniform_degree;
    return cli::cmd_solve(solve_opt);
  }
  if (*gen) {
    try {
      gen_params.mode = nctree::parse_budget_mode(f_mode);
    } catch (const nctree::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::kParse;
    }
    return cli::cmd_gen(gen_params);
  }
  if (*verify) return cli::cmd_verify(verify_input, verify_tree);
  if (*oracle) return cli::cmd_oracle(oracle_input);
  return cli::kUsage;
}
