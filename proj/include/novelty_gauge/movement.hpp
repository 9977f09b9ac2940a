#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

/// Qualitative taxonomy of observable motion. The numeric value is the case number.
/// Cases 1-3 describe the directly hit object; 4-9 describe everything else.
enum class MovementCase : std::uint8_t {
  hit_destroyed = 1,
  hit_flipped = 2,
  hit_slid = 3,
  fell_straight = 4,
  fell_rotating = 5,
  slid_and_stopped = 6,
  slid_and_fell = 7,
  flipped_and_stopped = 8,
  flipped_and_fell = 9,
};

constexpr int case_number(MovementCase c) { return static_cast<int>(c); }
MovementCase case_from_number(int n);

class CaseSet {
public:
  constexpr CaseSet() = default;
  constexpr CaseSet(std::initializer_list<MovementCase> cases) {
    for (MovementCase c : cases) insert(c);
  }

  constexpr void insert(MovementCase c) { bits_ |= bit(c); }
  constexpr bool contains(MovementCase c) const { return (bits_ & bit(c)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool intersects(CaseSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr CaseSet& operator|=(CaseSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  std::vector<MovementCase> cases() const;
  /// "3,6,7"
  std::string to_string() const;
  static CaseSet parse(std::string_view text);

  friend constexpr bool operator==(CaseSet, CaseSet) = default;

private:
  static constexpr std::uint16_t bit(MovementCase c) { return static_cast<std::uint16_t>(1u << case_number(c)); }
  std::uint16_t bits_ = 0;
};

/// Which movement cases make a change of each physical parameter observable.
class DetectabilityTable {
public:
  /// Friction and bounciness rows follow the two worked examples; the other rows are declared defaults.
  static DetectabilityTable defaults();

  CaseSet observable(PhysicalParameter p) const;
  void set(PhysicalParameter p, CaseSet cases) { rows_[p] = cases; }
  const std::map<PhysicalParameter, CaseSet>& rows() const noexcept { return rows_; }

  friend bool operator==(const DetectabilityTable&, const DetectabilityTable&) = default;

private:
  std::map<PhysicalParameter, CaseSet> rows_;
};

}  // namespace novelty_gauge
