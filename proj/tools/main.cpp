#include <CLI11.hpp>

#include <iostream>

#include "novelty_gauge/commands.hpp"

using namespace novelty_gauge;

namespace {

void add_config_flags(CLI::App* cmd, ConfigSources& sources, std::optional<std::filesystem::path>& out) {
  cmd->add_option("--alpha", sources.alpha, "weight of PID in the combined score, in [0,1]");
  cmd->add_option("--config", sources.config_file, "configuration file (default: $NOVELTY_GAUGE_CONFIG)");
  cmd->add_option("--format", sources.format, "text, csv or json-lines");
  cmd->add_option("--out", out, "also write the output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Estimate how hard it is to notice a physics novelty in a level"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "score a single level");
  analyze_cmd->add_option("level", analyze.level, "level file")->required();
  analyze_cmd->add_option("--novelty", analyze.novelty, "novel parameters, e.g. stone:friction,ice:mass")->required();
  add_config_flags(analyze_cmd, analyze.config, analyze.out);

  BatchOptions batch;
  auto* batch_cmd = app.add_subcommand("batch", "score every level in a directory");
  batch_cmd->add_option("dir", batch.dir, "directory of level files")->required();
  batch_cmd->add_option("--novelty", batch.novelty, "novel parameters")->required();
  batch_cmd->add_option("--jobs", batch.jobs, "parallel workers")->check(CLI::PositiveNumber);
  add_config_flags(batch_cmd, batch.config, batch.out);

  std::filesystem::path csv;
  std::optional<std::filesystem::path> categorize_out;
  auto* categorize_cmd = app.add_subcommand("categorize", "add easy/medium/hard labels to a batch table");
  categorize_cmd->add_option("csv", csv, "batch CSV")->required();
  categorize_cmd->add_option("--out", categorize_out, "also write the output to this file");

  std::optional<std::filesystem::path> init_out;
  auto* init_cmd = app.add_subcommand("init-config", "print the default configuration");
  init_cmd->add_option("--out", init_out, "also write the output to this file");

  GenerateOptions generate;
  auto* generate_cmd = app.add_subcommand("generate", "write a corpus of random levels");
  generate_cmd->add_option("dir", generate.dir, "output directory")->required();
  generate_cmd->add_option("--count", generate.count, "number of levels");
  generate_cmd->add_option("--seed", generate.seed, "random seed");
  generate_cmd->add_option("--max-movable", generate.max_movable, "upper bound on movable objects per level");
  generate_cmd->add_option("--max-birds", generate.max_birds, "upper bound on birds per level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (*analyze_cmd) return cmd_analyze(analyze, std::cout, std::cerr);
  if (*batch_cmd) return cmd_batch(batch, std::cout, std::cerr);
  if (*categorize_cmd) return cmd_categorize(csv, categorize_out, std::cout, std::cerr);
  if (*init_cmd) return cmd_init_config(init_out, std::cout, std::cerr);
  return cmd_generate(generate, std::cout, std::cerr);
}
