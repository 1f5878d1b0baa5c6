#include <iostream>

#include <CLI11.hpp>

#include "swctl/commands.hpp"

int main(int argc, char **argv) {
  using namespace swctl;

  CLI::App app{"Structural controllability of leader-follower networks under switching topologies"};
  app.require_subcommand(1);

  cli::AnalyzeOptions analyze;
  auto *an = app.add_subcommand("analyze", "Decide structural controllability of a network file");
  an->add_option("file", analyze.path, "Network JSON document")->required();
  an->add_flag("--certify", analyze.certify, "Attach a randomized exact-rank certificate");
  an->add_option("--seed", analyze.seed, "Base seed for random weights");
  an->add_option("--trials", analyze.trials, "Certification attempts")->check(CLI::PositiveNumber);
  an->add_option("--bound", analyze.bound, "Weights are drawn from [1, bound]")->check(CLI::PositiveNumber);
  an->add_flag("--json", analyze.json, "Machine-readable report");
  an->add_flag("--enumerate", analyze.enumerate, "Also build the explicit switched controllability matrix");
  an->add_option("--cap", analyze.cap, "Column cap for --enumerate");

  cli::OracleOptions oracle;
  auto *orc = app.add_subcommand("oracle", "Cross-check fast paths against brute-force oracles");
  orc->add_option("file", oracle.path, "Network JSON document")->required();
  orc->add_option("--cap", oracle.cap, "Cap on enumerated columns and permutations");
  orc->add_option("--seed", oracle.seed, "Seed for random weights");
  orc->add_option("--bound", oracle.bound, "Weights are drawn from [1, bound]")->check(CLI::PositiveNumber);

  GenParams gen;
  auto *gn = app.add_subcommand("gen", "Print a random network document");
  gn->add_option("--agents", gen.agents, "Total agent count")->required();
  gn->add_option("--leaders", gen.leaders, "Leader count (agents 0..L-1)")->required();
  gn->add_option("--snapshots", gen.snapshots, "Number of topologies")->required();
  gn->add_option("--edge-prob", gen.edge_prob, "Link probability per admissible pair")->required();
  gn->add_option("--seed", gen.seed, "Random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  if (*an)
    return cli::cmd_analyze(analyze, std::cout, std::cerr);
  if (*orc)
    return cli::cmd_oracle(oracle, std::cout, std::cerr);
  return cli::cmd_gen(gen, std::cout, std::cerr);
}
