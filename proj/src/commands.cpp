#include "novelty_gauge/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "novelty_gauge/difficulty.hpp"
#include "novelty_gauge/level_io.hpp"
#include "novelty_gauge/levelgen.hpp"
#include "novelty_gauge/report.hpp"

namespace novelty_gauge {

namespace fs = std::filesystem;

namespace {

/// Writes `text` to stdout and, when requested, to a file.
bool emit(const std::string& text, const std::optional<fs::path>& out_path, std::ostream& out, std::ostream& err) {
  out << text;
  if (!out_path) return true;
  std::ofstream file(*out_path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << out_path->string() << "'\n";
    return false;
  }
  return true;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field");
  return fields;
}

std::optional<double> parse_score(const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return v;
}

}  // namespace

RunConfig resolve_config(const ConfigSources& sources) {
  RunConfig config;
  if (sources.config_file) {
    config = RunConfig::load(*sources.config_file);
  } else if (const char* env = std::getenv("NOVELTY_GAUGE_CONFIG"); env != nullptr && *env != '\0') {
    config = RunConfig::load(env);
  }
  if (sources.alpha) config.alpha = *sources.alpha;
  if (sources.format) {
    try {
      config.format = format_from_string(*sources.format);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  config.validate();
  return config;
}

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = resolve_config(options.config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    const NoveltySpec spec = NoveltySpec::parse(options.novelty);
    const Scene scene = load_level(options.level, config.materials);
    const DifficultyReport report = analyze(scene, spec, config);
    const std::string level = options.level.string();
    std::string text;
    switch (config.format) {
      case OutputFormat::text:
        text = render_text(report, level, spec.to_string());
        break;
      case OutputFormat::csv:
        text = std::string(kBatchCsvHeader) + '\n' + render_csv_row(report, level) + '\n';
        break;
      case OutputFormat::json_lines:
        text = render_json_line(report, level, spec.to_string()) + '\n';
        break;
    }
    return emit(text, options.out, out, err) ? kExitOk : kExitInput;
  } catch (const ValidationError& e) {
    err << "invalid level: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInput;
}

int cmd_batch(const BatchOptions& options, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = resolve_config(options.config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  std::optional<NoveltySpec> spec;
  try {
    spec = NoveltySpec::parse(options.novelty);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  std::vector<fs::path> levels;
  std::error_code ec;
  for (fs::directory_iterator it(options.dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".json") levels.push_back(it->path());
  }
  if (ec) {
    err << "error: cannot read directory '" << options.dir.string() << "': " << ec.message() << '\n';
    return kExitInput;
  }
  std::sort(levels.begin(), levels.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

  const bool json_lines = config.format == OutputFormat::json_lines;
  const std::string hash = config.fingerprint();
  std::vector<std::string> rows(levels.size());
  std::vector<char> failed(levels.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < levels.size(); i = next++) {
      const std::string name = levels[i].filename().string();
      try {
        const DifficultyReport report = analyze(load_level(levels[i], config.materials), *spec, config);
        rows[i] = json_lines ? render_json_line(report, name, spec->to_string()) : render_csv_row(report, name);
      } catch (const std::exception& e) {
        failed[i] = 1;
        rows[i] = json_lines ? render_json_error(name, hash, e.what()) : render_csv_error_row(name, hash, e.what());
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, levels.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string text = json_lines ? std::string() : std::string(kBatchCsvHeader) + '\n';
  for (const auto& r : rows) text += r + '\n';
  if (!emit(text, options.out, out, err)) return kExitInput;

  if (levels.empty()) {
    err << "error: no level files in '" << options.dir.string() << "'\n";
    return kExitInput;
  }
  const auto failures = static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
  if (failures > 0) err << failures << " of " << levels.size() << " levels failed\n";
  return failures == levels.size() ? kExitInput : kExitOk;
}

int cmd_categorize(const fs::path& csv, const std::optional<fs::path>& out_path, std::ostream& out,
                   std::ostream& err) {
  std::ifstream in(csv, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << csv.string() << "'\n";
    return kExitInput;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  try {
    if (lines.empty()) throw ParseError("empty table");
    const auto header = split_csv_line(lines[0]);
    const auto col = [&](std::string_view name) -> std::optional<std::size_t> {
      auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) return std::nullopt;
      return static_cast<std::size_t>(it - header.begin());
    };
    const auto combined_col = col("combined");
    if (!combined_col) throw ParseError("missing 'combined' column");
    const auto error_col = col("error");

    std::vector<double> scores;
    std::vector<std::optional<std::size_t>> score_index;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto fields = split_csv_line(lines[i]);
      if (fields.size() != header.size()) throw ParseError("row " + std::to_string(i + 1) + " has the wrong field count");
      if (error_col && !fields[*error_col].empty()) {
        score_index.emplace_back();
        continue;
      }
      const auto score = parse_score(fields[*combined_col]);
      if (!score) throw ParseError("row " + std::to_string(i + 1) + " has no numeric 'combined' value");
      score_index.emplace_back(scores.size());
      scores.push_back(*score);
    }
    const auto categories = categorize(scores);
    std::string text = lines[0] + ",category\n";
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto& idx = score_index[i - 1];
      text += lines[i] + ',' + (idx ? std::string(to_string(categories[*idx])) : std::string()) + '\n';
    }
    return emit(text, out_path, out, err) ? kExitOk : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int cmd_init_config(const std::optional<fs::path>& out_path, std::ostream& out, std::ostream& err) {
  return emit(RunConfig{}.to_ini(), out_path, out, err) ? kExitOk : kExitInput;
}

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(options.dir, ec);
  if (ec) {
    err << "error: cannot create '" << options.dir.string() << "': " << ec.message() << '\n';
    return kExitInput;
  }
  GeneratorOptions gen;
  gen.max_movable = std::max(gen.min_movable, options.max_movable);
  gen.max_birds = std::max<std::size_t>(1, options.max_birds);
  for (std::size_t i = 1; i <= options.count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "level_%04zu.json", i);
    try {
      save_level(generate_level(options.seed * 1000003ULL + i, gen), options.dir / name);
    } catch (const std::exception& e) {
      err << "error: " << name << ": " << e.what() << '\n';
      return kExitInput;
    }
  }
  out << "wrote " << options.count << " levels to " << options.dir.string() << '\n';
  return kExitOk;
}

}  // namespace novelty_gauge
