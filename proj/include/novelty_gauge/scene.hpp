#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace novelty_gauge {

/// Tolerance for vertical contact and closed containment tests, in world units.
inline constexpr double kContactEpsilon = 1e-6;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A scene invariant is violated. `reason()` is a short machine-readable tag
/// ("overlap", "floating", ...) and `object_ids()` names the offenders.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string reason, std::vector<std::string> ids);

  const std::string& reason() const noexcept { return reason_; }
  const std::vector<std::string>& object_ids() const noexcept { return ids_; }

private:
  std::string reason_;
  std::vector<std::string> ids_;
};

class UnknownObject : public std::runtime_error {
public:
  explicit UnknownObject(const std::string& id) : std::runtime_error("unknown object '" + id + "'") {}
};

enum class Material : std::uint8_t { wood, ice, stone, pig, platform, ground };

inline constexpr std::array kAllMaterials{Material::wood,  Material::ice,      Material::stone,
                                          Material::pig,   Material::platform, Material::ground};
inline constexpr std::array kMovableMaterials{Material::wood, Material::ice, Material::stone, Material::pig};

std::string_view to_string(Material m);
Material material_from_string(std::string_view text);

/// Platforms and ground never move, are never novel and are never targets.
constexpr bool is_static(Material m) { return m == Material::platform || m == Material::ground; }

enum class BirdKind : std::uint8_t { red, blue, yellow };

inline constexpr std::array kAllBirds{BirdKind::red, BirdKind::blue, BirdKind::yellow};

std::string_view to_string(BirdKind b);
BirdKind bird_from_string(std::string_view text);

enum class PhysicalParameter : std::uint8_t { mass, friction, bounciness, gravity_scale, life };

inline constexpr std::array kAllParameters{PhysicalParameter::mass, PhysicalParameter::friction,
                                           PhysicalParameter::bounciness, PhysicalParameter::gravity_scale,
                                           PhysicalParameter::life};

std::string_view to_string(PhysicalParameter p);
PhysicalParameter parameter_from_string(std::string_view text);

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed interval on one axis.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Box {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;
  friend bool operator==(const Box&, const Box&) = default;
};

struct AxisAlignedRect {
  double x_min = 0.0;
  double y_min = 0.0;
  double width = 0.0;
  double height = 0.0;
  friend bool operator==(const AxisAlignedRect&, const AxisAlignedRect&) = default;
};

struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
  friend bool operator==(const Circle&, const Circle&) = default;
};

using Shape = std::variant<AxisAlignedRect, Circle>;

Box bounding_box(const Shape& s);
double area(const Shape& s);
Point centroid(const Shape& s);

/// Closed containment, grown by `tolerance`.
bool contains(const Shape& s, Point p, double tolerance = 0.0);

/// True when the open interiors intersect by more than `epsilon`.
bool interiors_overlap(const Shape& a, const Shape& b, double epsilon = kContactEpsilon);

/// Horizontal extent of the surface an object rests on (bottom) or offers (top).
/// Rectangles use their full width; circles touch at a single point.
Interval bottom_footprint(const Shape& s);
Interval top_footprint(const Shape& s);

Shape translated(const Shape& s, double dx, double dy);

struct GameObject {
  std::string id;
  Material material = Material::wood;
  Shape shape;
  double life = 0.0;
  std::map<BirdKind, double> bird_damage;

  Box box() const { return bounding_box(shape); }
  double x_min() const { return box().x_min; }
  double x_max() const { return box().x_max; }
  double y_min() const { return box().y_min; }
  double y_max() const { return box().y_max; }
  double width() const { return x_max() - x_min(); }
  double height() const { return y_max() - y_min(); }
  bool is_static() const { return novelty_gauge::is_static(material); }
  bool is_movable() const { return !is_static(); }
  double damage_for(BirdKind bird) const;

  friend bool operator==(const GameObject&, const GameObject&) = default;
};

/// One supporting contact below an object. An empty `supporter_id` is the world floor.
struct Contact {
  std::string supporter_id;
  Interval span;
  friend bool operator==(const Contact&, const Contact&) = default;
};

/// Immutable snapshot of a level. Construct through `Scene::create`, which
/// enforces every invariant.
class Scene {
public:
  static Scene create(std::vector<GameObject> objects, Point launch_point, std::vector<BirdKind> birds, Box bounds);

  const std::vector<GameObject>& objects() const noexcept { return objects_; }
  Point launch_point() const noexcept { return launch_point_; }
  const std::vector<BirdKind>& birds() const noexcept { return birds_; }
  const Box& bounds() const noexcept { return bounds_; }
  /// The implicit ground line at the bottom of the world.
  double floor_y() const noexcept { return bounds_.y_min; }

  const GameObject* find(std::string_view id) const;
  const GameObject& at(std::string_view id) const;
  std::vector<const GameObject*> movable_objects() const;
  std::size_t movable_count() const;

  /// Contacts holding `o` up: the floor, platforms, ground pieces or other objects.
  std::vector<Contact> supports_of(const GameObject& o) const;

  friend bool operator==(const Scene&, const Scene&) = default;

private:
  Scene() = default;

  std::vector<GameObject> objects_;
  Point launch_point_;
  std::vector<BirdKind> birds_;
  Box bounds_;
};

/// Contacts between `o` and the objects directly beneath it (plus the floor).
std::vector<Contact> compute_supports(const std::vector<GameObject>& objects, double floor_y, const GameObject& o);

struct NoveltyEntry {
  Material material = Material::wood;
  PhysicalParameter parameter = PhysicalParameter::mass;
  auto operator<=>(const NoveltyEntry&) const = default;
};

class NoveltySpec {
public:
  explicit NoveltySpec(std::set<NoveltyEntry> entries);

  /// "wood:bounciness,stone:life"
  static NoveltySpec parse(std::string_view text);

  const std::set<NoveltyEntry>& entries() const noexcept { return entries_; }
  std::vector<PhysicalParameter> parameters_for(Material m) const;
  std::string to_string() const;

  friend bool operator==(const NoveltySpec&, const NoveltySpec&) = default;

private:
  std::set<NoveltyEntry> entries_;
};

bool is_novel_object(const GameObject& o, const NoveltySpec& spec);

}  // namespace novelty_gauge
