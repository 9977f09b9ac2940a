#include "novelty_gauge/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "novelty_gauge/detectability.hpp"
#include "novelty_gauge/reachability.hpp"

namespace novelty_gauge {

namespace {

constexpr double kComTolerance = 1e-9;

}  // namespace

std::string_view to_string(PushMode m) { return m == PushMode::slide ? "slide" : "flip"; }

bool ImpactResult::impacted(std::string_view id) const { return find(id) != nullptr; }

const MovedObject* ImpactResult::find(std::string_view id) const {
  for (const auto& m : moved) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

SupportGraph::SupportGraph(const Scene& scene) : scene_(&scene) {
  const auto& objects = scene.objects();
  const std::size_t n = objects.size();
  supports_.resize(n);
  carried_.resize(n);
  load_x_.assign(n, 0.0);

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(objects[i].id, i);

  for (std::size_t i = 0; i < n; ++i) {
    if (objects[i].is_static()) continue;
    for (const Contact& c : scene.supports_of(objects[i])) {
      Support s;
      s.span = c.span;
      if (!c.supporter_id.empty()) {
        s.supporter = index.at(c.supporter_id);
        s.fixed = objects[s.supporter].is_static();
        carried_[s.supporter].push_back(i);
      }
      supports_[i].push_back(s);
    }
  }
  for (auto& list : carried_) {
    std::sort(list.begin(), list.end(),
              [&](std::size_t a, std::size_t b) { return precedes(objects[a], objects[b]); });
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (objects[i].is_static()) continue;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    double mass = 0.0;
    double moment = 0.0;
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      const double a = area(objects[k].shape);
      mass += a;
      moment += a * centroid(objects[k].shape).x;
      for (std::size_t up : carried_[k]) {
        if (!seen[up]) {
          seen[up] = true;
          stack.push_back(up);
        }
      }
    }
    load_x_[i] = moment / mass;
  }
}

std::size_t SupportGraph::index_of(std::string_view id) const {
  const auto& objects = scene_->objects();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].id == id) return i;
  }
  throw UnknownObject(std::string(id));
}

std::vector<std::string> vertical_impact(const Scene& scene, std::string_view seed) {
  const std::string s(seed);
  return vertical_impact(scene, std::span<const std::string>(&s, 1));
}

std::vector<std::string> vertical_impact(const Scene& scene, std::span<const std::string> seeds) {
  const SupportGraph graph(scene);
  const auto& objects = scene.objects();
  std::vector<bool> falling(graph.size(), false);
  std::vector<std::size_t> order;

  for (const auto& id : seeds) {
    const std::size_t i = graph.index_of(id);
    if (objects[i].is_static()) throw std::invalid_argument("static object '" + id + "' cannot be disturbed");
    if (!falling[i]) {
      falling[i] = true;
      order.push_back(i);
    }
  }

  auto unstable = [&](std::size_t i) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& s : graph.supports(i)) {
      if (!s.fixed && falling[s.supporter]) continue;
      lo = std::min(lo, s.span.lo);
      hi = std::max(hi, s.span.hi);
    }
    if (lo > hi) return true;
    const double c = graph.load_centroid_x(i);
    return c < lo - kComTolerance || c > hi + kComTolerance;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t up : graph.carried(order[k])) {
        if (falling[up] || !unstable(up)) continue;
        falling[up] = true;
        order.push_back(up);
        changed = true;
      }
    }
  }

  std::vector<std::string> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(objects[i].id);
  return out;
}

bool object_destroy(const GameObject& o, BirdKind bird, double y_start, double y_target,
                    const PhysicsConstants& constants) {
  const double radicand = std::max(0.0, constants.k1 * (y_start - y_target) + constants.k2_for(bird));
  return o.life - o.damage_for(bird) * std::sqrt(radicand) < 0.0;
}

bool object_destroy(const Scene& scene, const GameObject& o, BirdKind bird, const Trajectory& traj,
                    const PhysicsConstants& constants) {
  return object_destroy(o, bird, scene.launch_point().y, traj.impact_point.y, constants);
}

bool object_flip(const GameObject& o, double k_flip) { return o.height() / o.width() > k_flip; }

namespace {

std::vector<const GameObject*> sorted_movable(const Scene& scene) {
  auto list = scene.movable_objects();
  std::sort(list.begin(), list.end(), [](const GameObject* a, const GameObject* b) { return precedes(*a, *b); });
  return list;
}

}  // namespace

std::vector<std::string> falling_arc(const Scene& scene, const GameObject& o) {
  const Point center{o.x_max(), o.y_min()};
  const double radius = o.height();
  std::vector<std::string> out;
  for (const GameObject* other : sorted_movable(scene)) {
    if (other->id != o.id && intersects_quarter_disk(other->shape, center, radius)) out.push_back(other->id);
  }
  return out;
}

std::vector<std::string> sliding_path(const Scene& scene, const GameObject& o, double k_sliding_constant) {
  const double x_edge = o.x_max();
  const double y_lo = o.y_min();
  const double y_hi = o.y_max();
  std::vector<std::string> out;
  for (const GameObject* other : sorted_movable(scene)) {
    if (other->id == o.id) continue;
    const double x = other->x_min();
    if (!(x_edge - kContactEpsilon <= x && x < x_edge + k_sliding_constant)) continue;
    const bool top_in_band = y_lo < other->y_max() && other->y_max() < y_hi;
    const bool base_in_band = y_lo - kContactEpsilon <= other->y_min() && other->y_min() < y_hi;
    if (top_in_band || base_in_band) out.push_back(other->id);
  }
  return out;
}

std::optional<HorizontalHit> horizontal_influence(const Scene& scene, const GameObject& o, BirdKind bird,
                                                  const Trajectory& traj, const PhysicsConstants& constants) {
  if (object_destroy(scene, o, bird, traj, constants)) return std::nullopt;
  const std::vector<std::string> pending = object_flip(o, constants.k_flip)
                                               ? falling_arc(scene, o)
                                               : sliding_path(scene, o, constants.k_sliding_constant);
  if (pending.empty()) return std::nullopt;

  const GameObject* closest = nullptr;
  for (const auto& id : pending) {
    const GameObject& c = scene.at(id);
    if (closest == nullptr ||
        std::forward_as_tuple(c.x_min() - o.x_max(), c.y_min(), c.id) <
            std::forward_as_tuple(closest->x_min() - o.x_max(), closest->y_min(), closest->id)) {
      closest = &c;
    }
  }
  HorizontalHit hit;
  hit.object_id = closest->id;
  hit.mode = object_flip(*closest, constants.k_flip) ? PushMode::flip : PushMode::slide;
  hit.fall_list = vertical_impact(scene, closest->id);
  return hit;
}

ImpactResult simulate_interaction(const Scene& scene, const GameObject& target, BirdKind bird,
                                  const Trajectory& traj, const PhysicsConstants& constants) {
  ImpactResult r;
  r.target_id = target.id;
  r.bird = bird;
  r.impact_point = traj.impact_point;
  r.destroyed = object_destroy(scene, target, bird, traj, constants);
  r.target_flips = !r.destroyed && object_flip(target, constants.k_flip);
  r.vertical = vertical_impact(scene, target.id);
  r.horizontal = horizontal_influence(scene, target, bird, traj, constants);

  // One fixpoint over both seeds: an object balanced on one member of each list falls too.
  std::vector<std::string> seeds{target.id};
  if (r.horizontal) seeds.push_back(r.horizontal->object_id);
  r.fall_list = vertical_impact(scene, seeds);
  for (const auto& id : r.fall_list) r.moved.push_back({id, CaseSet{}});
  for (auto& m : r.moved) m.cases = classify_movement(scene, r, scene.at(m.id), constants);
  return r;
}

double landing_height(const Shape& shape, const std::vector<GameObject>& placed, double floor_y) {
  const Interval bottom = bottom_footprint(shape);
  const double base = bounding_box(shape).y_min;
  double best = floor_y;
  for (const auto& p : placed) {
    const double top = p.y_max();
    if (top > base + kContactEpsilon || top <= best) continue;
    const Interval face = top_footprint(p.shape);
    const double lo = std::max(face.lo, bottom.lo);
    const double hi = std::min(face.hi, bottom.hi);
    const bool point_contact = face.length() <= kContactEpsilon || bottom.length() <= kContactEpsilon;
    if (point_contact ? hi >= lo - kContactEpsilon : hi - lo > kContactEpsilon) best = top;
  }
  return best;
}

namespace {

double slide_distance(const GameObject& o, const std::vector<GameObject>& objects, const std::set<std::string>& moving,
                      double k_sliding_constant) {
  double distance = k_sliding_constant;
  for (const auto& p : objects) {
    if (p.id == o.id || moving.contains(p.id)) continue;
    const bool shares_band = p.y_max() > o.y_min() + kContactEpsilon && p.y_min() < o.y_max() - kContactEpsilon;
    if (shares_band && p.x_min() >= o.x_max() - kContactEpsilon) {
      distance = std::min(distance, std::max(0.0, p.x_min() - o.x_max()));
    }
  }
  return distance;
}

Shape pushed_shape(const GameObject& o, PushMode mode, const std::vector<GameObject>& objects,
                   const std::set<std::string>& moving, double k_sliding_constant) {
  if (mode == PushMode::flip) {
    if (const auto* r = std::get_if<AxisAlignedRect>(&o.shape)) {
      // Tips over its bottom-right corner and lies flat to the right.
      return AxisAlignedRect{r->x_min + r->width, r->y_min, r->height, r->width};
    }
  }
  return translated(o.shape, slide_distance(o, objects, moving, k_sliding_constant), 0.0);
}

}  // namespace

Scene apply_interaction(const Scene& scene, const ImpactResult& result, const PhysicsConstants& constants,
                        std::vector<std::string>* settle_log) {
  std::set<std::string> moving(result.fall_list.begin(), result.fall_list.end());
  if (result.destroyed) moving.erase(result.target_id);

  std::vector<GameObject> placed;
  std::vector<GameObject> falling;
  for (const auto& o : scene.objects()) {
    if (result.destroyed && o.id == result.target_id) continue;
    (moving.contains(o.id) ? falling : placed).push_back(o);
  }

  for (auto& o : falling) {
    if (o.id == result.target_id) {
      const PushMode mode = result.target_flips ? PushMode::flip : PushMode::slide;
      o.shape = pushed_shape(o, mode, scene.objects(), moving, constants.k_sliding_constant);
    } else if (result.horizontal && o.id == result.horizontal->object_id) {
      o.shape = pushed_shape(o, result.horizontal->mode, scene.objects(), moving, constants.k_sliding_constant);
    }
  }

  std::stable_sort(falling.begin(), falling.end(), [](const GameObject& a, const GameObject& b) {
    return std::forward_as_tuple(a.y_min(), a.x_min(), a.id) < std::forward_as_tuple(b.y_min(), b.x_min(), b.id);
  });

  const Box& bounds = scene.bounds();
  for (auto& o : falling) {
    const Box before = o.box();
    if (before.x_max > bounds.x_max + kContactEpsilon) {
      if (settle_log) settle_log->push_back("settle failure: " + o.id + " left the world and was removed");
      continue;
    }
    const double land = landing_height(o.shape, placed, scene.floor_y());
    o.shape = translated(o.shape, 0.0, land - before.y_min);
    const bool blocked = std::any_of(placed.begin(), placed.end(),
                                     [&](const GameObject& p) { return interiors_overlap(p.shape, o.shape); });
    if (blocked || o.y_max() > bounds.y_max + kContactEpsilon) {
      if (settle_log) settle_log->push_back("settle failure: " + o.id + " could not be placed and was removed");
      continue;
    }
    placed.push_back(std::move(o));
  }

  // Keep the original object order for everything that survived.
  std::vector<GameObject> ordered;
  ordered.reserve(placed.size());
  for (const auto& o : scene.objects()) {
    auto it = std::find_if(placed.begin(), placed.end(), [&](const GameObject& p) { return p.id == o.id; });
    if (it != placed.end()) ordered.push_back(std::move(*it));
  }

  std::vector<BirdKind> birds = scene.birds();
  if (!birds.empty()) birds.erase(birds.begin());
  return Scene::create(std::move(ordered), scene.launch_point(), std::move(birds), scene.bounds());
}

Scene skip_interaction(const Scene& scene) {
  std::vector<BirdKind> birds = scene.birds();
  if (!birds.empty()) birds.erase(birds.begin());
  return Scene::create(scene.objects(), scene.launch_point(), std::move(birds), scene.bounds());
}

}  // namespace novelty_gauge
