#pragma once

#include <string>
#include <string_view>

#include "novelty_gauge/difficulty.hpp"

namespace novelty_gauge {

/// Fixed column order of batch tables.
inline constexpr std::string_view kBatchCsvHeader = "level,pid,bid,combined,config_hash,error";

/// Multi-line human-readable report.
std::string render_text(const DifficultyReport& report, std::string_view level, std::string_view novelty);

/// Single-line JSON object with every report field and both traces.
std::string render_json_line(const DifficultyReport& report, std::string_view level, std::string_view novelty);

/// One batch-table row (no trailing newline).
std::string render_json_error(std::string_view level, std::string_view config_hash, std::string_view error);

std::string render_csv_row(const DifficultyReport& report, std::string_view level);
std::string render_csv_error_row(std::string_view level, std::string_view config_hash, std::string_view error);

/// Quotes a CSV field when it contains a delimiter, quote or line break.
std::string csv_escape(std::string_view field);

}  // namespace novelty_gauge
