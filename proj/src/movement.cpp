#include "novelty_gauge/movement.hpp"

#include <charconv>

namespace novelty_gauge {

MovementCase case_from_number(int n) {
  if (n < 1 || n > 9) throw ParseError("movement case out of range: " + std::to_string(n));
  return static_cast<MovementCase>(n);
}

std::vector<MovementCase> CaseSet::cases() const {
  std::vector<MovementCase> out;
  for (int n = 1; n <= 9; ++n) {
    if (contains(static_cast<MovementCase>(n))) out.push_back(static_cast<MovementCase>(n));
  }
  return out;
}

std::string CaseSet::to_string() const {
  std::string out;
  for (MovementCase c : cases()) {
    if (!out.empty()) out += ',';
    out += std::to_string(case_number(c));
  }
  return out;
}

CaseSet CaseSet::parse(std::string_view text) {
  CaseSet out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      int n = 0;
      auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
      if (ec != std::errc{} || end != item.data() + item.size()) {
        throw ParseError("bad movement case '" + std::string(item) + "'");
      }
      out.insert(case_from_number(n));
    }
    pos = comma + 1;
  }
  return out;
}

DetectabilityTable DetectabilityTable::defaults() {
  using enum MovementCase;
  DetectabilityTable t;
  t.rows_[PhysicalParameter::friction] = {hit_slid, slid_and_stopped, slid_and_fell};
  t.rows_[PhysicalParameter::bounciness] = {hit_flipped,      hit_slid,      fell_straight,
                                            fell_rotating,    slid_and_stopped, slid_and_fell,
                                            flipped_and_stopped, flipped_and_fell};
  t.rows_[PhysicalParameter::mass] = {hit_destroyed, hit_flipped, hit_slid, fell_rotating, slid_and_fell,
                                      flipped_and_fell};
  t.rows_[PhysicalParameter::gravity_scale] = {fell_straight, fell_rotating, slid_and_fell, flipped_and_fell};
  // A sturdier object that was expected to break shows up as a hit that should have destroyed it.
  t.rows_[PhysicalParameter::life] = {hit_destroyed};
  return t;
}

CaseSet DetectabilityTable::observable(PhysicalParameter p) const {
  auto it = rows_.find(p);
  return it == rows_.end() ? CaseSet{} : it->second;
}

}  // namespace novelty_gauge
