#include "novelty_gauge/report.hpp"

#include <json.hpp>

#include <sstream>

namespace novelty_gauge {

using nlohmann::ordered_json;

namespace {

ordered_json trace_json(const std::vector<InteractionRecord>& trace) {
  ordered_json out = ordered_json::array();
  for (const auto& r : trace) {
    out.push_back({{"interaction", r.interaction},
                   {"targets", r.targets},
                   {"revealing_targets", r.revealing_targets},
                   {"undetectable_fraction", r.undetectable_fraction},
                   {"best_target", r.best_target ? ordered_json(*r.best_target) : ordered_json(nullptr)},
                   {"detected", r.detected}});
  }
  return out;
}

void trace_text(std::ostringstream& os, const std::vector<InteractionRecord>& trace) {
  for (const auto& r : trace) {
    os << "  " << r.interaction << ": targets=" << r.targets << " revealing=" << r.revealing_targets
       << " undetectable=" << format_double(r.undetectable_fraction) << " best=" << r.best_target.value_or("-")
       << " detected=" << (r.detected ? "yes" : "no") << '\n';
  }
}

}  // namespace

std::string render_text(const DifficultyReport& report, std::string_view level, std::string_view novelty) {
  std::ostringstream os;
  os << "level:    " << level << '\n'
     << "novelty:  " << novelty << '\n'
     << "pid:      " << format_double(report.pid) << '\n'
     << "bid:      " << format_double(report.bid) << '\n'
     << "combined: " << format_double(report.combined) << '\n'
     << "alpha:    " << format_double(report.alpha) << '\n';
  if (report.category) os << "category: " << to_string(*report.category) << '\n';
  os << "config:   " << report.config_hash << '\n' << "pid trace:\n";
  trace_text(os, report.pid_trace);
  os << "bid trace:\n";
  trace_text(os, report.bid_trace);
  return os.str();
}

std::string render_json_line(const DifficultyReport& report, std::string_view level, std::string_view novelty) {
  ordered_json doc = {{"level", level},
                      {"novelty", novelty},
                      {"pid", report.pid},
                      {"bid", report.bid},
                      {"combined", report.combined},
                      {"alpha", report.alpha},
                      {"category", report.category ? ordered_json(std::string(to_string(*report.category)))
                                                   : ordered_json(nullptr)},
                      {"config_hash", report.config_hash},
                      {"pid_trace", trace_json(report.pid_trace)},
                      {"bid_trace", trace_json(report.bid_trace)}};
  return doc.dump();
}

std::string render_json_error(std::string_view level, std::string_view config_hash, std::string_view error) {
  return ordered_json{{"level", level}, {"config_hash", config_hash}, {"error", error}}.dump();
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv_row(const DifficultyReport& report, std::string_view level) {
  return csv_escape(level) + ',' + format_double(report.pid) + ',' + format_double(report.bid) + ',' +
         format_double(report.combined) + ',' + report.config_hash + ',';
}

std::string render_csv_error_row(std::string_view level, std::string_view config_hash, std::string_view error) {
  return csv_escape(level) + ",,,," + std::string(config_hash) + ',' + csv_escape(error);
}

}  // namespace novelty_gauge
