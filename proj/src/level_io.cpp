#include "novelty_gauge/level_io.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace novelty_gauge {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ParseError(where + ": unknown key '" + key + "'");
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

Shape parse_shape(const json& s, const std::string& where) {
  const json& kind = require(s, "kind", where);
  if (!kind.is_string()) throw ParseError(where + ": 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "rect") {
    reject_unknown_keys(s, {"kind", "x", "y", "width", "height"}, where);
    return AxisAlignedRect{number(require(s, "x", where), where + ".x"), number(require(s, "y", where), where + ".y"),
                           number(require(s, "width", where), where + ".width"),
                           number(require(s, "height", where), where + ".height")};
  }
  if (k == "circle") {
    reject_unknown_keys(s, {"kind", "cx", "cy", "r"}, where);
    return Circle{number(require(s, "cx", where), where + ".cx"), number(require(s, "cy", where), where + ".cy"),
                  number(require(s, "r", where), where + ".r")};
  }
  throw ParseError(where + ": unknown shape kind '" + k + "'");
}

GameObject parse_object(const json& o, std::size_t index, const MaterialDefaults& defaults) {
  std::string where = "objects[" + std::to_string(index) + "]";
  reject_unknown_keys(o, {"id", "material", "shape", "life", "bird_damage"}, where);
  const json& id = require(o, "id", where);
  if (!id.is_string()) throw ParseError(where + ": 'id' must be a string");

  GameObject obj;
  obj.id = id.get<std::string>();
  where += " (" + obj.id + ")";
  const json& material = require(o, "material", where);
  if (!material.is_string()) throw ParseError(where + ": 'material' must be a string");
  obj.material = material_from_string(material.get<std::string>());
  obj.shape = parse_shape(require(o, "shape", where), where + ".shape");

  if (obj.is_movable()) {
    obj.life = defaults.life_of(obj.material);
    for (BirdKind b : kAllBirds) obj.bird_damage[b] = defaults.damage_of(b, obj.material);
  }
  if (auto it = o.find("life"); it != o.end()) obj.life = number(*it, where + ".life");
  if (auto it = o.find("bird_damage"); it != o.end()) {
    if (!it->is_object()) throw ParseError(where + ": 'bird_damage' must be an object");
    for (const auto& [bird, value] : it->items()) {
      obj.bird_damage[bird_from_string(bird)] = number(value, where + ".bird_damage." + bird);
    }
  }
  return obj;
}

}  // namespace

Scene parse_level(std::string_view text, const MaterialDefaults& defaults) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed level: ") + e.what());
  }
  reject_unknown_keys(doc, {"objects", "launch_point", "birds", "bounds"}, "level");

  const json& objects = require(doc, "objects", "level");
  if (!objects.is_array()) throw ParseError("level: 'objects' must be an array");
  std::vector<GameObject> parsed;
  for (std::size_t i = 0; i < objects.size(); ++i) parsed.push_back(parse_object(objects[i], i, defaults));

  const json& launch = require(doc, "launch_point", "level");
  if (!launch.is_array() || launch.size() != 2) throw ParseError("level: 'launch_point' must be [x, y]");
  Point launch_point{number(launch[0], "launch_point"), number(launch[1], "launch_point")};

  const json& birds = require(doc, "birds", "level");
  if (!birds.is_array()) throw ParseError("level: 'birds' must be an array");
  std::vector<BirdKind> bird_list;
  for (const auto& b : birds) {
    if (!b.is_string()) throw ParseError("level: bird entries must be strings");
    bird_list.push_back(bird_from_string(b.get<std::string>()));
  }

  const json& bounds = require(doc, "bounds", "level");
  if (!bounds.is_array() || bounds.size() != 4) throw ParseError("level: 'bounds' must be [x0, y0, x1, y1]");
  Box box{number(bounds[0], "bounds"), number(bounds[1], "bounds"), number(bounds[2], "bounds"),
          number(bounds[3], "bounds")};

  if (bird_list.empty()) throw ValidationError("empty_birds", {});
  return Scene::create(std::move(parsed), launch_point, std::move(bird_list), box);
}

Scene load_level(const std::filesystem::path& path, const MaterialDefaults& defaults) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read level file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_level(ss.str(), defaults);
}

std::string serialize_level(const Scene& scene) {
  json objects = json::array();
  for (const auto& o : scene.objects()) {
    json shape;
    if (const auto* r = std::get_if<AxisAlignedRect>(&o.shape)) {
      shape = {{"kind", "rect"}, {"x", r->x_min}, {"y", r->y_min}, {"width", r->width}, {"height", r->height}};
    } else {
      const auto& c = std::get<Circle>(o.shape);
      shape = {{"kind", "circle"}, {"cx", c.cx}, {"cy", c.cy}, {"r", c.r}};
    }
    json damage = json::object();
    for (const auto& [bird, value] : o.bird_damage) damage[std::string(to_string(bird))] = value;
    objects.push_back({{"id", o.id},
                       {"material", std::string(to_string(o.material))},
                       {"shape", shape},
                       {"life", o.life},
                       {"bird_damage", damage}});
  }
  json birds = json::array();
  for (BirdKind b : scene.birds()) birds.push_back(std::string(to_string(b)));
  const Box& b = scene.bounds();
  json doc = {{"objects", objects},
              {"launch_point", {scene.launch_point().x, scene.launch_point().y}},
              {"birds", birds},
              {"bounds", {b.x_min, b.y_min, b.x_max, b.y_max}}};
  return doc.dump(2) + "\n";
}

void save_level(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write level file '" + path.string() + "'");
  out << serialize_level(scene);
}

}  // namespace novelty_gauge
