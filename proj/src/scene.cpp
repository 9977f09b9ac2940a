#include "novelty_gauge/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace novelty_gauge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

bool finite_non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

ValidationError::ValidationError(std::string reason, std::vector<std::string> ids)
    : std::runtime_error("validation failed (" + reason + "): " + join_ids(ids)),
      reason_(std::move(reason)),
      ids_(std::move(ids)) {}

std::string_view to_string(Material m) {
  switch (m) {
    case Material::wood: return "wood";
    case Material::ice: return "ice";
    case Material::stone: return "stone";
    case Material::pig: return "pig";
    case Material::platform: return "platform";
    case Material::ground: return "ground";
  }
  return "?";
}

Material material_from_string(std::string_view text) {
  for (Material m : kAllMaterials) {
    if (to_string(m) == text) return m;
  }
  throw ParseError("unknown material '" + std::string(text) + "'");
}

std::string_view to_string(BirdKind b) {
  switch (b) {
    case BirdKind::red: return "red";
    case BirdKind::blue: return "blue";
    case BirdKind::yellow: return "yellow";
  }
  return "?";
}

BirdKind bird_from_string(std::string_view text) {
  for (BirdKind b : kAllBirds) {
    if (to_string(b) == text) return b;
  }
  throw ParseError("unknown bird kind '" + std::string(text) + "'");
}

std::string_view to_string(PhysicalParameter p) {
  switch (p) {
    case PhysicalParameter::mass: return "mass";
    case PhysicalParameter::friction: return "friction";
    case PhysicalParameter::bounciness: return "bounciness";
    case PhysicalParameter::gravity_scale: return "gravity_scale";
    case PhysicalParameter::life: return "life";
  }
  return "?";
}

PhysicalParameter parameter_from_string(std::string_view text) {
  for (PhysicalParameter p : kAllParameters) {
    if (to_string(p) == text) return p;
  }
  throw ParseError("unknown physical parameter '" + std::string(text) + "'");
}

Box bounding_box(const Shape& s) {
  return std::visit(Overloaded{
                        [](const AxisAlignedRect& r) {
                          return Box{r.x_min, r.y_min, r.x_min + r.width, r.y_min + r.height};
                        },
                        [](const Circle& c) { return Box{c.cx - c.r, c.cy - c.r, c.cx + c.r, c.cy + c.r}; },
                    },
                    s);
}

double area(const Shape& s) {
  return std::visit(Overloaded{
                        [](const AxisAlignedRect& r) { return r.width * r.height; },
                        [](const Circle& c) { return std::numbers::pi * c.r * c.r; },
                    },
                    s);
}

Point centroid(const Shape& s) {
  return std::visit(Overloaded{
                        [](const AxisAlignedRect& r) {
                          return Point{r.x_min + 0.5 * r.width, r.y_min + 0.5 * r.height};
                        },
                        [](const Circle& c) { return Point{c.cx, c.cy}; },
                    },
                    s);
}

bool contains(const Shape& s, Point p, double tolerance) {
  return std::visit(Overloaded{
                        [&](const AxisAlignedRect& r) {
                          return p.x >= r.x_min - tolerance && p.x <= r.x_min + r.width + tolerance &&
                                 p.y >= r.y_min - tolerance && p.y <= r.y_min + r.height + tolerance;
                        },
                        [&](const Circle& c) { return std::hypot(p.x - c.cx, p.y - c.cy) <= c.r + tolerance; },
                    },
                    s);
}

namespace {

double rect_circle_distance(const AxisAlignedRect& r, const Circle& c) {
  const double qx = std::clamp(c.cx, r.x_min, r.x_min + r.width);
  const double qy = std::clamp(c.cy, r.y_min, r.y_min + r.height);
  return std::hypot(c.cx - qx, c.cy - qy);
}

}  // namespace

bool interiors_overlap(const Shape& a, const Shape& b, double epsilon) {
  return std::visit(
      Overloaded{
          [&](const AxisAlignedRect& ra, const AxisAlignedRect& rb) {
            const double ox = std::min(ra.x_min + ra.width, rb.x_min + rb.width) - std::max(ra.x_min, rb.x_min);
            const double oy = std::min(ra.y_min + ra.height, rb.y_min + rb.height) - std::max(ra.y_min, rb.y_min);
            return ox > epsilon && oy > epsilon;
          },
          [&](const AxisAlignedRect& r, const Circle& c) { return rect_circle_distance(r, c) < c.r - epsilon; },
          [&](const Circle& c, const AxisAlignedRect& r) { return rect_circle_distance(r, c) < c.r - epsilon; },
          [&](const Circle& ca, const Circle& cb) {
            return std::hypot(ca.cx - cb.cx, ca.cy - cb.cy) < ca.r + cb.r - epsilon;
          },
      },
      a, b);
}

Interval bottom_footprint(const Shape& s) {
  return std::visit(Overloaded{
                        [](const AxisAlignedRect& r) { return Interval{r.x_min, r.x_min + r.width}; },
                        [](const Circle& c) { return Interval{c.cx, c.cx}; },
                    },
                    s);
}

Interval top_footprint(const Shape& s) { return bottom_footprint(s); }

Shape translated(const Shape& s, double dx, double dy) {
  return std::visit(Overloaded{
                        [&](const AxisAlignedRect& r) -> Shape {
                          return AxisAlignedRect{r.x_min + dx, r.y_min + dy, r.width, r.height};
                        },
                        [&](const Circle& c) -> Shape { return Circle{c.cx + dx, c.cy + dy, c.r}; },
                    },
                    s);
}

double GameObject::damage_for(BirdKind bird) const {
  auto it = bird_damage.find(bird);
  return it == bird_damage.end() ? 0.0 : it->second;
}

std::vector<Contact> compute_supports(const std::vector<GameObject>& objects, double floor_y, const GameObject& o) {
  std::vector<Contact> contacts;
  const Interval bottom = bottom_footprint(o.shape);
  const double base = o.y_min();
  if (std::abs(base - floor_y) <= kContactEpsilon) contacts.push_back({"", bottom});

  for (const auto& p : objects) {
    if (p.id == o.id) continue;
    if (std::abs(p.y_max() - base) > kContactEpsilon) continue;
    const Interval top = top_footprint(p.shape);
    const double lo = std::max(top.lo, bottom.lo);
    const double hi = std::min(top.hi, bottom.hi);
    const bool point_contact = top.length() <= kContactEpsilon || bottom.length() <= kContactEpsilon;
    // Flat faces must share a segment; touching corners do not hold anything up.
    if (point_contact ? hi < lo - kContactEpsilon : hi - lo <= kContactEpsilon) continue;
    contacts.push_back({p.id, Interval{lo, std::max(lo, hi)}});
  }
  return contacts;
}

Scene Scene::create(std::vector<GameObject> objects, Point launch_point, std::vector<BirdKind> birds, Box bounds) {
  if (!(bounds.x_max > bounds.x_min && bounds.y_max > bounds.y_min) || !std::isfinite(bounds.x_min) ||
      !std::isfinite(bounds.x_max) || !std::isfinite(bounds.y_min) || !std::isfinite(bounds.y_max)) {
    throw ValidationError("bounds", {});
  }
  if (!std::isfinite(launch_point.x) || !std::isfinite(launch_point.y)) throw ValidationError("launch_point", {});

  std::set<std::string> seen;
  for (const auto& o : objects) {
    if (o.id.empty()) throw ValidationError("empty_id", {});
    if (!seen.insert(o.id).second) throw ValidationError("duplicate_id", {o.id});

    const bool shape_ok = std::visit(Overloaded{
                                         [](const AxisAlignedRect& r) {
                                           return std::isfinite(r.x_min) && std::isfinite(r.y_min) &&
                                                  std::isfinite(r.width) && std::isfinite(r.height) &&
                                                  r.width > 0.0 && r.height > 0.0;
                                         },
                                         [](const Circle& c) {
                                           return std::isfinite(c.cx) && std::isfinite(c.cy) &&
                                                  std::isfinite(c.r) && c.r > 0.0;
                                         },
                                     },
                                     o.shape);
    if (!shape_ok) throw ValidationError("shape", {o.id});

    if (!finite_non_negative(o.life)) throw ValidationError("life", {o.id});
    for (const auto& [bird, dmg] : o.bird_damage) {
      if (!finite_non_negative(dmg)) throw ValidationError("bird_damage", {o.id});
    }

    const Box b = o.box();
    if (b.x_min < bounds.x_min - kContactEpsilon || b.x_max > bounds.x_max + kContactEpsilon ||
        b.y_min < bounds.y_min - kContactEpsilon || b.y_max > bounds.y_max + kContactEpsilon) {
      throw ValidationError("out_of_bounds", {o.id});
    }
    if (o.is_movable() && !(launch_point.x < b.x_min)) throw ValidationError("launch_point", {o.id});
  }

  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = i + 1; j < objects.size(); ++j) {
      if (objects[i].is_static() && objects[j].is_static()) continue;
      if (interiors_overlap(objects[i].shape, objects[j].shape)) {
        throw ValidationError("overlap", {objects[i].id, objects[j].id});
      }
    }
  }

  for (const auto& o : objects) {
    if (o.is_movable() && compute_supports(objects, bounds.y_min, o).empty()) {
      throw ValidationError("floating", {o.id});
    }
  }

  Scene scene;
  scene.objects_ = std::move(objects);
  scene.launch_point_ = launch_point;
  scene.birds_ = std::move(birds);
  scene.bounds_ = bounds;
  return scene;
}

const GameObject* Scene::find(std::string_view id) const {
  for (const auto& o : objects_) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

const GameObject& Scene::at(std::string_view id) const {
  if (const GameObject* o = find(id)) return *o;
  throw UnknownObject(std::string(id));
}

std::vector<const GameObject*> Scene::movable_objects() const {
  std::vector<const GameObject*> out;
  for (const auto& o : objects_) {
    if (o.is_movable()) out.push_back(&o);
  }
  return out;
}

std::size_t Scene::movable_count() const {
  return static_cast<std::size_t>(
      std::count_if(objects_.begin(), objects_.end(), [](const GameObject& o) { return o.is_movable(); }));
}

std::vector<Contact> Scene::supports_of(const GameObject& o) const { return compute_supports(objects_, floor_y(), o); }

NoveltySpec::NoveltySpec(std::set<NoveltyEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ParseError("novelty list is empty");
  for (const auto& e : entries_) {
    if (is_static(e.material)) {
      throw ParseError("material '" + std::string(novelty_gauge::to_string(e.material)) + "' cannot be novel");
    }
  }
}

NoveltySpec NoveltySpec::parse(std::string_view text) {
  std::set<NoveltyEntry> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos || item.find(':', colon + 1) != std::string_view::npos) {
      throw ParseError("malformed novelty entry '" + std::string(item) + "', expected material:parameter");
    }
    entries.insert({material_from_string(item.substr(0, colon)), parameter_from_string(item.substr(colon + 1))});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return NoveltySpec(std::move(entries));
}

std::vector<PhysicalParameter> NoveltySpec::parameters_for(Material m) const {
  std::vector<PhysicalParameter> out;
  for (const auto& e : entries_) {
    if (e.material == m) out.push_back(e.parameter);
  }
  return out;
}

std::string NoveltySpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) os << ',';
    first = false;
    os << novelty_gauge::to_string(e.material) << ':' << novelty_gauge::to_string(e.parameter);
  }
  return os.str();
}

bool is_novel_object(const GameObject& o, const NoveltySpec& spec) {
  return std::any_of(spec.entries().begin(), spec.entries().end(),
                     [&](const NoveltyEntry& e) { return e.material == o.material; });
}

}  // namespace novelty_gauge
