#pragma once

#include <vector>

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/geometry.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

struct TargetOption {
  GameObject object;
  /// Non-empty; lower arc first when it exists.
  std::vector<Trajectory> trajectories;
};

/// Movable objects reachable by at least one unblocked trajectory, ordered by
/// ascending x_min, then y_min, then id. Best-target tie-breaking relies on this order.
std::vector<TargetOption> find_targets(const Scene& scene, BirdKind bird, const PhysicsConstants& constants);

std::vector<GameObject> targets(const Scene& scene, BirdKind bird, const PhysicsConstants& constants);

/// Deterministic scene order used for targets and tie-breaks.
bool precedes(const GameObject& a, const GameObject& b);

}  // namespace novelty_gauge
