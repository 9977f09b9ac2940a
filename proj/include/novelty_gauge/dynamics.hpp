#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/geometry.hpp"
#include "novelty_gauge/impact.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

/// Vertical contact structure of a scene: who rests on whom, where, and how much
/// mass each movable object carries.
class SupportGraph {
public:
  static constexpr std::size_t kFixed = static_cast<std::size_t>(-1);

  struct Support {
    /// Index into scene.objects(), or kFixed for the floor.
    std::size_t supporter = kFixed;
    /// True for the floor, platforms and ground pieces.
    bool fixed = true;
    Interval span;
  };

  explicit SupportGraph(const Scene& scene);

  std::size_t size() const noexcept { return supports_.size(); }
  std::size_t index_of(std::string_view id) const;
  const std::vector<Support>& supports(std::size_t i) const { return supports_[i]; }
  /// Movable objects resting directly on object `i`, in scene order.
  const std::vector<std::size_t>& carried(std::size_t i) const { return carried_[i]; }
  /// x of the area-weighted centroid of `i` plus everything it carries transitively.
  double load_centroid_x(std::size_t i) const { return load_x_[i]; }

private:
  const Scene* scene_;
  std::vector<std::vector<Support>> supports_;
  std::vector<std::vector<std::size_t>> carried_;
  std::vector<double> load_x_;
};

/// Objects that may fall once `seed` is disturbed, seed first, in discovery order.
/// An object with a disturbed supporter falls when its remaining support is empty or
/// the centroid of its load projects outside [leftmost, rightmost] remaining contact.
std::vector<std::string> vertical_impact(const Scene& scene, std::string_view seed);
std::vector<std::string> vertical_impact(const Scene& scene, std::span<const std::string> seeds);

/// life - bird_damage * sqrt(k1 * (y_start - y_target) + k2_bird) < 0, with the radicand clamped at 0.
bool object_destroy(const GameObject& o, BirdKind bird, double y_start, double y_target,
                    const PhysicsConstants& constants);
bool object_destroy(const Scene& scene, const GameObject& o, BirdKind bird, const Trajectory& traj,
                    const PhysicsConstants& constants);

bool object_flip(const GameObject& o, double k_flip);

/// Movable objects other than `o` meeting the first quadrant of the circle centred at
/// (x_max, y_min) with radius equal to the height of `o`.
std::vector<std::string> falling_arc(const Scene& scene, const GameObject& o);

/// Movable objects starting within `k_sliding_constant` to the right of `o` and sharing its height band.
std::vector<std::string> sliding_path(const Scene& scene, const GameObject& o, double k_sliding_constant);

/// Approximate horizontal influence: the object closest to a surviving target along its
/// falling arc (if it flips) or sliding path (otherwise), with that object's vertical impact.
std::optional<HorizontalHit> horizontal_influence(const Scene& scene, const GameObject& o, BirdKind bird,
                                                  const Trajectory& traj, const PhysicsConstants& constants);

ImpactResult simulate_interaction(const Scene& scene, const GameObject& target, BirdKind bird,
                                  const Trajectory& traj, const PhysicsConstants& constants);

/// Qualitative state update after a shot: destroyed objects disappear, the hit object and the
/// pushed object are displaced, everything in the fall list drops straight down onto the
/// first support beneath it, and one bird is used up. Objects that cannot be placed
/// without overlap are removed and reported through `settle_log`.
Scene apply_interaction(const Scene& scene, const ImpactResult& result, const PhysicsConstants& constants,
                        std::vector<std::string>* settle_log = nullptr);

/// Scene with one bird used up and nothing moved.
Scene skip_interaction(const Scene& scene);

/// Height at which `shape` comes to rest when dropped straight down onto `placed` objects or the floor.
double landing_height(const Shape& shape, const std::vector<GameObject>& placed, double floor_y);

}  // namespace novelty_gauge
