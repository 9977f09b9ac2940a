#include "novelty_gauge/detectability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "novelty_gauge/dynamics.hpp"

namespace novelty_gauge {

namespace {

bool in_list(const std::vector<std::string>& ids, const std::string& id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

/// Whether something other than a moving object offers a resting surface under `x` at the base level of `o`.
bool supported_at(const Scene& scene, const ImpactResult& result, const GameObject& o, double x) {
  if (std::abs(o.y_min() - scene.floor_y()) <= kContactEpsilon) return true;
  return std::any_of(scene.objects().begin(), scene.objects().end(), [&](const GameObject& p) {
    return p.id != o.id && !result.impacted(p.id) && std::abs(p.y_max() - o.y_min()) <= kContactEpsilon &&
           p.x_min() <= x && x <= p.x_max();
  });
}

bool falls_without_rotating(const Scene& scene, const ImpactResult& result, const GameObject& o) {
  const double lo = o.x_min();
  const double hi = o.x_max();
  double top = -std::numeric_limits<double>::infinity();
  std::vector<const GameObject*> surface;
  for (const auto& p : scene.objects()) {
    if (p.id == o.id || result.impacted(p.id)) continue;
    if (p.y_max() > o.y_min() + kContactEpsilon) continue;
    if (std::min(hi, p.x_max()) - std::max(lo, p.x_min()) <= kContactEpsilon) continue;
    if (p.y_max() > top + kContactEpsilon) {
      top = p.y_max();
      surface.clear();
    }
    if (std::abs(p.y_max() - top) <= kContactEpsilon) surface.push_back(&p);
  }
  if (surface.empty()) return true;  // lands on the floor

  std::sort(surface.begin(), surface.end(),
            [](const GameObject* a, const GameObject* b) { return a->x_min() < b->x_min(); });
  double covered = lo;
  for (const GameObject* p : surface) {
    if (!p->is_static()) return false;
    if (p->x_min() > covered + kContactEpsilon) return false;
    covered = std::max(covered, p->x_max());
  }
  return covered >= hi - kContactEpsilon;
}

}  // namespace

CaseSet classify_movement(const Scene& scene, const ImpactResult& result, const GameObject& o,
                          const PhysicsConstants& constants) {
  using enum MovementCase;
  CaseSet cases;
  if (o.id == result.target_id) {
    cases.insert(result.destroyed ? hit_destroyed : result.target_flips ? hit_flipped : hit_slid);
    return cases;
  }

  const bool pushed = result.horizontal && result.horizontal->object_id == o.id;
  if (pushed) {
    if (result.horizontal->mode == PushMode::slide) {
      const double x = centroid(o.shape).x + constants.k_sliding_constant;
      cases.insert(supported_at(scene, result, o, x) ? slid_and_stopped : slid_and_fell);
    } else {
      const double x = o.x_max() + 0.5 * o.height();
      cases.insert(supported_at(scene, result, o, x) ? flipped_and_stopped : flipped_and_fell);
    }
  }

  const bool falls = !pushed && in_list(result.fall_list, o.id);
  if (falls) cases.insert(falls_without_rotating(scene, result, o) ? fell_straight : fell_rotating);
  return cases;
}

bool detectable(const ImpactResult& result, const GameObject& o, const NoveltySpec& spec,
                const DetectabilityTable& table) {
  if (!is_novel_object(o, spec)) return false;
  const MovedObject* moved = result.find(o.id);
  if (moved == nullptr) return false;
  CaseSet revealing;
  for (PhysicalParameter p : spec.parameters_for(o.material)) revealing |= table.observable(p);
  return moved->cases.intersects(revealing);
}

bool reveals_novelty(const Scene& scene, const ImpactResult& result, const NoveltySpec& spec,
                     const DetectabilityTable& table) {
  return std::any_of(result.moved.begin(), result.moved.end(), [&](const MovedObject& m) {
    return detectable(result, scene.at(m.id), spec, table);
  });
}

}  // namespace novelty_gauge
