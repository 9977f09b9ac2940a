#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

/// `reference != other` and `other` starts left of the right edge of `reference`
/// (x_max(reference) > x_min(other)).
bool left_of(const GameObject& reference, const GameObject& other);

/// Vertical mirror of left_of: y_min(reference) < y_max(other).
bool top_of(const GameObject& reference, const GameObject& other);

enum class ArcKind { lower, upper };

std::string_view to_string(ArcKind k);

struct Trajectory {
  ArcKind kind = ArcKind::lower;
  double release_angle = 0.0;  // radians
  /// Launch point first, impact point last; only the last point touches the impact object.
  std::vector<Point> points;
  Point impact_point;
  std::string impact_object_id;
};

struct LaunchAngles {
  double lower = 0.0;
  double upper = 0.0;
};

/// Release angles reaching `aim` with speed `v0` under gravity `g`, or nullopt when out of range.
/// The two angles coincide at the edge of the reachable envelope.
std::optional<LaunchAngles> launch_angles(Point launch, Point aim, double v0, double g);

double parabola_height(Point launch, double angle, double v0, double g, double x);

/// Blocking-test step: min object width / 4 with a floor of 0.05 units unless configured.
double sample_step(const Scene& scene, const PhysicsConstants& constants);

/// Candidate connection points on the left and top faces of `target`.
std::vector<Point> aim_points(const GameObject& target);

/// Samples x = launch.x + k * step (k >= 1) strictly before `x_end`, then `x_end` itself.
std::vector<Point> sample_arc(Point launch, double angle, double v0, double g, double x_end, double step);

/// Up to two unblocked trajectories (lower first, then upper) that reach `target`
/// before touching anything else.
std::vector<Trajectory> trajectories_to(const Scene& scene, const GameObject& target, BirdKind bird,
                                        const PhysicsConstants& constants);

/// True iff a sample strictly between the launch point and the impact point touches
/// an object other than `target` or the floor.
bool parabola_blocked(const Trajectory& traj, const Scene& scene, const GameObject& target);

/// Whether the arc over [x_from, x_to] passes through the interior of `shape`
/// (shrunk by the contact tolerance). Exact for rectangles, root-bracketed for circles.
bool arc_meets_interior(const Shape& shape, Point launch, double angle, double v0, double g, double x_from,
                        double x_to);

/// Open intersection of `s` with the first-quadrant quarter disk centred at `center`.
bool intersects_quarter_disk(const Shape& s, Point center, double radius);

}  // namespace novelty_gauge
