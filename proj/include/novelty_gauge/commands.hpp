#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "novelty_gauge/config.hpp"

namespace novelty_gauge {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConfig = 2;

/// Settings shared by analyze and batch.
struct ConfigSources {
  std::optional<std::filesystem::path> config_file;
  std::optional<double> alpha;
  std::optional<std::string> format;
};

/// Loads `--config`, falling back to $NOVELTY_GAUGE_CONFIG and then built-in defaults,
/// applies command-line overrides and validates. Throws ConfigError.
RunConfig resolve_config(const ConfigSources& sources);

struct AnalyzeOptions {
  std::filesystem::path level;
  std::string novelty;
  ConfigSources config;
  std::optional<std::filesystem::path> out;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

struct BatchOptions {
  std::filesystem::path dir;
  std::string novelty;
  ConfigSources config;
  std::optional<std::filesystem::path> out;
  std::size_t jobs = 1;
};

/// Scores every *.json level in `dir` (sorted by file name). Output is CSV unless the
/// format is json-lines. Exit 1 when the directory has no levels or every level fails.
int cmd_batch(const BatchOptions& options, std::ostream& out, std::ostream& err);

/// Appends a category column to a batch CSV. Rows with an error get an empty category.
int cmd_categorize(const std::filesystem::path& csv, const std::optional<std::filesystem::path>& out_path,
                   std::ostream& out, std::ostream& err);

/// Writes the full default configuration.
int cmd_init_config(const std::optional<std::filesystem::path>& out_path, std::ostream& out, std::ostream& err);

struct GenerateOptions {
  std::filesystem::path dir;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t max_movable = 12;
  std::size_t max_birds = 4;
};

/// Writes `count` random levels named level_0001.json, level_0002.json, ...
int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);

}  // namespace novelty_gauge
