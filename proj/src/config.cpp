#include "novelty_gauge/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace novelty_gauge {

namespace pt = boost::property_tree;

double PhysicsConstants::k2_for(BirdKind bird) const {
  auto it = k2.find(bird);
  if (it == k2.end()) throw ConfigError("no k2 constant for bird '" + std::string(to_string(bird)) + "'");
  return it->second;
}

MaterialDefaults MaterialDefaults::standard() {
  MaterialDefaults d;
  d.life = {{Material::wood, 40.0}, {Material::ice, 15.0}, {Material::stone, 80.0}, {Material::pig, 20.0}};
  d.damage[BirdKind::red] = {
      {Material::wood, 1.0}, {Material::ice, 1.0}, {Material::stone, 0.5}, {Material::pig, 1.0}};
  d.damage[BirdKind::blue] = {
      {Material::wood, 0.5}, {Material::ice, 2.0}, {Material::stone, 0.3}, {Material::pig, 1.0}};
  d.damage[BirdKind::yellow] = {
      {Material::wood, 2.0}, {Material::ice, 0.6}, {Material::stone, 0.4}, {Material::pig, 1.0}};
  return d;
}

double MaterialDefaults::life_of(Material m) const {
  auto it = life.find(m);
  return it == life.end() ? 0.0 : it->second;
}

double MaterialDefaults::damage_of(BirdKind b, Material m) const {
  auto bird = damage.find(b);
  if (bird == damage.end()) return 0.0;
  auto it = bird->second.find(m);
  return it == bird->second.end() ? 0.0 : it->second;
}

std::string_view to_string(ScoringMode m) {
  switch (m) {
    case ScoringMode::per_object: return "per_object";
    case ScoringMode::per_material: return "per_material";
    case ScoringMode::per_suspect_type: return "per_suspect_type";
  }
  return "?";
}

double ScoringPolicy::weight(Material m) const {
  auto it = weights.find(m);
  return it == weights.end() ? 0.0 : it->second;
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json_lines: return "json-lines";
  }
  return "?";
}

OutputFormat format_from_string(std::string_view text) {
  for (OutputFormat f : {OutputFormat::text, OutputFormat::csv, OutputFormat::json_lines}) {
    if (to_string(f) == text) return f;
  }
  throw ConfigError("unknown output format '" + std::string(text) + "'");
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void RunConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
  };
  auto non_negative = [](double v, const std::string& name) {
    if (!(std::isfinite(v) && v >= 0.0)) throw ConfigError(name + " must be non-negative");
  };
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0,1], got " + format_double(alpha));
  positive(physics.v0, "launch.v0");
  positive(physics.g, "physics.g");
  non_negative(physics.sample_step, "traj.sample_step");
  positive(physics.k1, "k1");
  positive(physics.k_flip, "k_flip");
  positive(physics.k_sliding_constant, "k_sliding_constant");
  for (BirdKind b : kAllBirds) positive(physics.k2_for(b), "k2");
  for (const auto& [m, v] : materials.life) non_negative(v, "life." + std::string(to_string(m)));
  for (const auto& [b, row] : materials.damage) {
    for (const auto& [m, v] : row) non_negative(v, "damage." + std::string(to_string(b)));
  }
  bool any_positive = false;
  for (const auto& [m, w] : scoring.weights) {
    non_negative(w, "scoring." + std::string(to_string(m)));
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw ConfigError("scoring policy needs at least one positive weight");
  for (PhysicalParameter p : kAllParameters) {
    if (!detectability.rows().contains(p)) {
      throw ConfigError("detectability table has no row for '" + std::string(to_string(p)) + "'");
    }
  }
}

std::string RunConfig::to_ini() const {
  std::ostringstream os;
  os << "alpha = " << format_double(alpha) << '\n';
  os << "k1 = " << format_double(physics.k1) << '\n';
  os << "k_flip = " << format_double(physics.k_flip) << '\n';
  os << "k_sliding_constant = " << format_double(physics.k_sliding_constant) << '\n';
  os << "format = " << to_string(format) << '\n';
  os << "\n[launch]\nv0 = " << format_double(physics.v0) << '\n';
  os << "\n[physics]\ng = " << format_double(physics.g) << '\n';
  os << "\n[traj]\nsample_step = " << format_double(physics.sample_step) << '\n';
  os << "\n[k2]\n";
  for (BirdKind b : kAllBirds) os << to_string(b) << " = " << format_double(physics.k2_for(b)) << '\n';
  os << "\n[life]\n";
  for (Material m : kMovableMaterials) os << to_string(m) << " = " << format_double(materials.life_of(m)) << '\n';
  for (BirdKind b : kAllBirds) {
    os << "\n[damage." << to_string(b) << "]\n";
    for (Material m : kMovableMaterials) {
      os << to_string(m) << " = " << format_double(materials.damage_of(b, m)) << '\n';
    }
  }
  os << "\n[detectability]\n";
  for (PhysicalParameter p : kAllParameters) os << to_string(p) << " = " << detectability.observable(p).to_string() << '\n';
  os << "\n[scoring]\nmode = " << to_string(scoring.mode) << '\n';
  for (Material m : kMovableMaterials) os << to_string(m) << " = " << format_double(scoring.weight(m)) << '\n';
  return os.str();
}

namespace {

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end) throw ConfigError("'" + key + "' is not a number: '" + text + "'");
  return v;
}

template <class Fn>
void for_each_key(const pt::ptree& section, const std::string& name, Fn&& fn) {
  for (const auto& [key, node] : section) {
    if (!node.empty()) throw ConfigError("nested section under [" + name + "]");
    fn(key, node.data());
  }
}

Material movable_material(const std::string& section, const std::string& key) {
  try {
    Material m = material_from_string(key);
    if (is_static(m)) throw ConfigError("");
    return m;
  } catch (const std::exception&) {
    throw ConfigError("unknown key '" + key + "' in [" + section + "]");
  }
}

}  // namespace

RunConfig RunConfig::from_ini(const std::string& text) {
  pt::ptree tree;
  try {
    std::istringstream is(text);
    pt::ini_parser::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  RunConfig cfg;
  auto is_section = [](const std::string& n) {
    return n == "launch" || n == "physics" || n == "traj" || n == "k2" || n == "life" || n == "detectability" ||
           n == "scoring" || n.starts_with("damage.");
  };
  for (const auto& [name, node] : tree) {
    if (node.empty() && !is_section(name)) {
      const std::string& value = node.data();
      if (name == "alpha") cfg.alpha = parse_number(name, value);
      else if (name == "k1") cfg.physics.k1 = parse_number(name, value);
      else if (name == "k_flip") cfg.physics.k_flip = parse_number(name, value);
      else if (name == "k_sliding_constant") cfg.physics.k_sliding_constant = parse_number(name, value);
      else if (name == "format") cfg.format = format_from_string(value);
      else throw ConfigError("unknown key '" + name + "'");
      continue;
    }

    if (name == "launch" || name == "physics" || name == "traj") {
      for_each_key(node, name, [&](const std::string& key, const std::string& value) {
        if (name == "launch" && key == "v0") cfg.physics.v0 = parse_number("launch.v0", value);
        else if (name == "physics" && key == "g") cfg.physics.g = parse_number("physics.g", value);
        else if (name == "traj" && key == "sample_step") cfg.physics.sample_step = parse_number("traj.sample_step", value);
        else throw ConfigError("unknown key '" + key + "' in [" + name + "]");
      });
    } else if (name == "k2") {
      for_each_key(node, name, [&](const std::string& key, const std::string& value) {
        try {
          cfg.physics.k2[bird_from_string(key)] = parse_number("k2." + key, value);
        } catch (const ParseError&) {
          throw ConfigError("unknown key '" + key + "' in [k2]");
        }
      });
    } else if (name == "life") {
      for_each_key(node, name, [&](const std::string& key, const std::string& value) {
        cfg.materials.life[movable_material(name, key)] = parse_number("life." + key, value);
      });
    } else if (name.starts_with("damage.")) {
      BirdKind bird;
      try {
        bird = bird_from_string(name.substr(7));
      } catch (const ParseError&) {
        throw ConfigError("unknown section [" + name + "]");
      }
      for_each_key(node, name, [&](const std::string& key, const std::string& value) {
        cfg.materials.damage[bird][movable_material(name, key)] = parse_number(name + "." + key, value);
      });
    } else if (name == "detectability") {
      for_each_key(node, name, [&](const std::string& key, const std::string& value) {
        try {
          cfg.detectability.set(parameter_from_string(key), CaseSet::parse(value));
        } catch (const ParseError& e) {
          throw ConfigError(std::string("[detectability] ") + e.what());
        }
      });
    } else if (name == "scoring") {
      for_each_key(node, name, [&](const std::string& key, const std::string& value) {
        if (key == "mode") {
          if (value == "per_object") cfg.scoring.mode = ScoringMode::per_object;
          else if (value == "per_material") cfg.scoring.mode = ScoringMode::per_material;
          else if (value == "per_suspect_type") cfg.scoring.mode = ScoringMode::per_suspect_type;
          else throw ConfigError("unknown scoring mode '" + value + "'");
        } else {
          cfg.scoring.weights[movable_material(name, key)] = parse_number("scoring." + key, value);
        }
      });
    } else {
      throw ConfigError("unknown section [" + name + "]");
    }
  }
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_ini(ss.str());
}

std::string RunConfig::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_ini()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace novelty_gauge
