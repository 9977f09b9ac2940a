#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "novelty_gauge/movement.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

/// How the object nearest to a surviving target is pushed.
enum class PushMode { slide, flip };

std::string_view to_string(PushMode m);

struct HorizontalHit {
  std::string object_id;
  PushMode mode = PushMode::slide;
  /// Vertical impact of the pushed object, pushed object first.
  std::vector<std::string> fall_list;
};

struct MovedObject {
  std::string id;
  CaseSet cases;
};

/// Qualitative outcome of one shot at one target.
struct ImpactResult {
  std::string target_id;
  BirdKind bird = BirdKind::red;
  Point impact_point;
  bool destroyed = false;
  bool target_flips = false;
  /// Vertical impact of the target, target first.
  std::vector<std::string> vertical;
  std::optional<HorizontalHit> horizontal;
  /// Vertical impact of the target and the pushed object together, in discovery order.
  /// Contains both `vertical` and the horizontal fall list.
  std::vector<std::string> fall_list;
  /// Same ids as `fall_list`, annotated with movement cases.
  std::vector<MovedObject> moved;

  /// impacted(target, id)
  bool impacted(std::string_view id) const;
  const MovedObject* find(std::string_view id) const;
};

}  // namespace novelty_gauge
