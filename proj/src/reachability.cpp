#include "novelty_gauge/reachability.hpp"

#include <algorithm>
#include <tuple>

namespace novelty_gauge {

bool precedes(const GameObject& a, const GameObject& b) {
  return std::forward_as_tuple(a.x_min(), a.y_min(), a.id) < std::forward_as_tuple(b.x_min(), b.y_min(), b.id);
}

std::vector<TargetOption> find_targets(const Scene& scene, BirdKind bird, const PhysicsConstants& constants) {
  std::vector<TargetOption> out;
  for (const GameObject* o : scene.movable_objects()) {
    auto trajectories = trajectories_to(scene, *o, bird, constants);
    if (!trajectories.empty()) out.push_back({*o, std::move(trajectories)});
  }
  std::sort(out.begin(), out.end(),
            [](const TargetOption& a, const TargetOption& b) { return precedes(a.object, b.object); });
  return out;
}

std::vector<GameObject> targets(const Scene& scene, BirdKind bird, const PhysicsConstants& constants) {
  std::vector<GameObject> out;
  for (auto& t : find_targets(scene, bird, constants)) out.push_back(std::move(t.object));
  return out;
}

}  // namespace novelty_gauge
