#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "limitlab/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"limitlab: learnability-in-the-limit simulation laboratory"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run one experiment config");
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  run->add_option("config", config_path, "Experiment config (JSON)")->required();
  auto* out_opt = run->add_option("--out", out_dir, "Output directory (overrides output_dir)");
  auto* seed_opt = run->add_option("--seed", seed, "Seed (overrides the config's seeds)");

  app.add_subcommand("list", "List built-in learners, metrics, texts, chains and experiments");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("list")) {
    std::cout << limitlab::list_builtins();
    return 0;
  }

  limitlab::RunOptions options;
  if (*out_opt) options.out_dir = out_dir;
  if (*seed_opt) options.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  const auto outcome = limitlab::run_config(config_path, options);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (outcome.exit_code != limitlab::kExitOk) {
    std::cerr << "error: " << outcome.error << '\n';
    return outcome.exit_code;
  }
  std::cout << outcome.report;
  for (const auto& path : outcome.artifacts) std::cout << "wrote " << path << '\n';
  std::cout << "wall-clock: " << elapsed << " s\n";
  return 0;
}
