#include "novelty_gauge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace novelty_gauge {

bool left_of(const GameObject& reference, const GameObject& other) {
  return reference.id != other.id && reference.x_max() > other.x_min();
}

bool top_of(const GameObject& reference, const GameObject& other) {
  return reference.id != other.id && reference.y_min() < other.y_max();
}

std::string_view to_string(ArcKind k) { return k == ArcKind::lower ? "lower" : "upper"; }

std::optional<LaunchAngles> launch_angles(Point launch, Point aim, double v0, double g) {
  const double dx = aim.x - launch.x;
  const double dy = aim.y - launch.y;
  if (!(dx > 0.0)) return std::nullopt;
  const double v2 = v0 * v0;
  const double disc = v2 * v2 - g * (g * dx * dx + 2.0 * dy * v2);
  if (disc < 0.0) return std::nullopt;
  const double root = std::sqrt(disc);
  return LaunchAngles{std::atan((v2 - root) / (g * dx)), std::atan((v2 + root) / (g * dx))};
}

double parabola_height(Point launch, double angle, double v0, double g, double x) {
  const double dx = x - launch.x;
  const double c = std::cos(angle);
  return launch.y + std::tan(angle) * dx - g * dx * dx / (2.0 * v0 * v0 * c * c);
}

double sample_step(const Scene& scene, const PhysicsConstants& constants) {
  if (constants.sample_step > 0.0) return constants.sample_step;
  double min_width = std::numeric_limits<double>::infinity();
  for (const auto& o : scene.objects()) min_width = std::min(min_width, o.width());
  if (!std::isfinite(min_width)) return 0.05;
  return std::max(min_width / 4.0, 0.05);
}

std::vector<Point> aim_points(const GameObject& target) {
  const Box b = target.box();
  if (const auto* c = std::get_if<Circle>(&target.shape)) {
    std::vector<Point> pts;
    for (double deg : {180.0, 135.0, 90.0, 157.5, 112.5}) {
      const double a = deg * std::numbers::pi / 180.0;
      pts.push_back({c->cx + c->r * std::cos(a), c->cy + c->r * std::sin(a)});
    }
    return pts;
  }
  const double inset_y = std::min(0.1, 0.25 * (b.y_max - b.y_min));
  const double inset_x = std::min(0.1, 0.25 * (b.x_max - b.x_min));
  const double mid_y = 0.5 * (b.y_min + b.y_max);
  const double mid_x = 0.5 * (b.x_min + b.x_max);
  return {
      {b.x_min, mid_y},           {mid_x, b.y_max},           {b.x_min, b.y_min + inset_y},
      {b.x_min, b.y_max - inset_y}, {b.x_min + inset_x, b.y_max}, {b.x_max - inset_x, b.y_max},
  };
}

std::vector<Point> sample_arc(Point launch, double angle, double v0, double g, double x_end, double step) {
  std::vector<Point> pts{launch};
  for (long k = 1;; ++k) {
    const double x = launch.x + static_cast<double>(k) * step;
    if (x >= x_end) break;
    pts.push_back({x, parabola_height(launch, angle, v0, g, x)});
  }
  pts.push_back({x_end, parabola_height(launch, angle, v0, g, x_end)});
  return pts;
}

bool arc_meets_interior(const Shape& shape, Point launch, double angle, double v0, double g, double x_from,
                        double x_to) {
  constexpr double e = kContactEpsilon;
  auto y = [&](double x) { return parabola_height(launch, angle, v0, g, x); };
  if (const auto* r = std::get_if<AxisAlignedRect>(&shape)) {
    const double lo = std::max(x_from, r->x_min + e);
    const double hi = std::min(x_to, r->x_min + r->width - e);
    if (lo > hi) return false;
    double y_lo = std::min(y(lo), y(hi));
    double y_hi = std::max(y(lo), y(hi));
    // Apex of the arc, where the height peaks.
    const double c = std::cos(angle);
    const double apex = launch.x + v0 * v0 * std::sin(angle) * c / g;
    if (lo < apex && apex < hi) y_hi = std::max(y_hi, y(apex));
    return y_lo < r->y_min + r->height - e && y_hi > r->y_min + e;
  }
  const auto& circle = std::get<Circle>(shape);
  const double lo = std::max(x_from, circle.cx - circle.r);
  const double hi = std::min(x_to, circle.cx + circle.r);
  if (lo > hi) return false;
  auto dist2 = [&](double x) { return (x - circle.cx) * (x - circle.cx) + (y(x) - circle.cy) * (y(x) - circle.cy); };
  auto slope = [&](double x) {
    const double h = 1e-7 * std::max(1.0, std::abs(x));
    return dist2(x + h) - dist2(x - h);
  };
  const double limit = (circle.r - e) * (circle.r - e);
  if (dist2(lo) < limit || dist2(hi) < limit) return true;
  // The squared distance is a quartic in x; bracket its stationary points and bisect each.
  constexpr int kPieces = 64;
  double a = lo;
  double sa = slope(a);
  for (int i = 1; i <= kPieces; ++i) {
    double b = lo + (hi - lo) * i / kPieces;
    const double sb = slope(b);
    if (sa < 0.0 && sb >= 0.0) {
      double l = a, h = b;
      for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (l + h);
        (slope(m) < 0.0 ? l : h) = m;
      }
      if (dist2(0.5 * (l + h)) < limit) return true;
    }
    a = b;
    sa = sb;
  }
  return false;
}

namespace {

bool below_floor(const Scene& scene, Point p) { return p.y <= scene.floor_y() + kContactEpsilon; }

/// Index range [first, last] of grid samples whose x lies within [lo, hi].
std::pair<long, long> grid_range(double x0, double step, double lo, double hi) {
  return {static_cast<long>(std::ceil((lo - x0) / step)), static_cast<long>(std::floor((hi - x0) / step))};
}

std::optional<Trajectory> trace_to(const Scene& scene, const GameObject& target, ArcKind kind, double angle, Point aim,
                                   double v0, double g, double step) {
  const Point launch = scene.launch_point();
  const std::vector<Point> pts = sample_arc(launch, angle, v0, g, aim.x, step);
  const long last = static_cast<long>(pts.size()) - 1;

  long first_hit = std::numeric_limits<long>::max();
  for (long k = 1; k <= last; ++k) {
    if (below_floor(scene, pts[k])) {
      first_hit = k;
      break;
    }
  }
  auto hits_at = [&](const GameObject& o, long k) { return contains(o.shape, pts[k], kContactEpsilon); };
  auto scan = [&](const GameObject& o) {
    const Box b = o.box();
    auto [lo, hi] = grid_range(launch.x, step, b.x_min - kContactEpsilon, b.x_max + kContactEpsilon);
    lo = std::max(lo - 1, 1L);
    hi = std::min({hi + 1, last - 1, first_hit});
    for (long k = lo; k <= hi; ++k) {
      if (hits_at(o, k)) return k;
    }
    return (last <= first_hit && hits_at(o, last)) ? last : std::numeric_limits<long>::max();
  };

  bool target_hit = false;
  bool other_hit = first_hit != std::numeric_limits<long>::max();
  for (const auto& o : scene.objects()) {
    const long k = scan(o);
    if (k == std::numeric_limits<long>::max()) continue;
    const bool is_target = o.id == target.id;
    if (k < first_hit) {
      first_hit = k;
      target_hit = is_target;
      other_hit = !is_target;
    } else if (k == first_hit) {
      target_hit = target_hit || is_target;
      other_hit = other_hit || !is_target;
    }
  }
  if (!target_hit || other_hit) return std::nullopt;

  // Bisect the last free segment down to the target boundary.
  double lo = pts[first_hit - 1].x;
  double hi = pts[first_hit].x;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (contains(target.shape, {mid, parabola_height(launch, angle, v0, g, mid)}, kContactEpsilon)) hi = mid;
    else lo = mid;
  }
  Trajectory traj;
  traj.kind = kind;
  traj.release_angle = angle;
  traj.points.assign(pts.begin(), pts.begin() + first_hit);
  traj.impact_point = {hi, parabola_height(launch, angle, v0, g, hi)};
  traj.points.push_back(traj.impact_point);
  traj.impact_object_id = target.id;

  // Steep arcs can jump across a thin object between two samples.
  for (const auto& o : scene.objects()) {
    if (o.id != target.id && arc_meets_interior(o.shape, launch, angle, v0, g, launch.x, hi)) return std::nullopt;
  }
  return traj;
}

}  // namespace

std::vector<Trajectory> trajectories_to(const Scene& scene, const GameObject& target, BirdKind bird,
                                        const PhysicsConstants& constants) {
  (void)bird;  // launch speed is fixed for every bird
  const double step = sample_step(scene, constants);
  std::optional<Trajectory> lower;
  std::optional<Trajectory> upper;
  for (const Point aim : aim_points(target)) {
    const auto angles = launch_angles(scene.launch_point(), aim, constants.v0, constants.g);
    if (!angles) continue;
    if (!lower) lower = trace_to(scene, target, ArcKind::lower, angles->lower, aim, constants.v0, constants.g, step);
    if (!upper && angles->upper > angles->lower) {
      upper = trace_to(scene, target, ArcKind::upper, angles->upper, aim, constants.v0, constants.g, step);
    }
    if (lower && upper) break;
  }
  std::vector<Trajectory> out;
  if (lower) out.push_back(std::move(*lower));
  if (upper) out.push_back(std::move(*upper));
  return out;
}

bool parabola_blocked(const Trajectory& traj, const Scene& scene, const GameObject& target) {
  for (std::size_t i = 1; i + 1 < traj.points.size(); ++i) {
    const Point p = traj.points[i];
    if (below_floor(scene, p)) return true;
    for (const auto& o : scene.objects()) {
      if (o.id != target.id && contains(o.shape, p, kContactEpsilon)) return true;
    }
  }
  return false;
}

bool intersects_quarter_disk(const Shape& s, Point center, double radius) {
  if (const auto* r = std::get_if<AxisAlignedRect>(&s)) {
    const double x0 = r->x_min, x1 = r->x_min + r->width;
    const double y0 = r->y_min, y1 = r->y_min + r->height;
    if (!(x1 > center.x && x0 < center.x + radius && y1 > center.y && y0 < center.y + radius)) return false;
    return std::hypot(std::max(x0, center.x) - center.x, std::max(y0, center.y) - center.y) < radius;
  }
  const auto& c = std::get<Circle>(s);
  Point q{std::max(c.cx, center.x), std::max(c.cy, center.y)};
  const double d = std::hypot(q.x - center.x, q.y - center.y);
  if (d > radius) q = {center.x + radius * (q.x - center.x) / d, center.y + radius * (q.y - center.y) / d};
  return std::hypot(c.cx - q.x, c.cy - q.y) < c.r;
}

}  // namespace novelty_gauge
