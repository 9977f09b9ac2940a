#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "novelty_gauge/movement.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Launch ballistics and the experimentally fixed constants of the movement predicates.
struct PhysicsConstants {
  double v0 = 30.0;
  double g = 9.8;
  /// Horizontal sampling step for trajectory blocking; 0 selects the scene-dependent default.
  double sample_step = 0.0;
  double k1 = 19.6;
  std::map<BirdKind, double> k2{{BirdKind::red, 900.0}, {BirdKind::blue, 450.0}, {BirdKind::yellow, 1125.0}};
  double k_flip = 1.5;
  double k_sliding_constant = 2.0;

  double k2_for(BirdKind bird) const;
  friend bool operator==(const PhysicsConstants&, const PhysicsConstants&) = default;
};

/// Per-material life and per-bird damage coefficients applied when a level omits them.
struct MaterialDefaults {
  std::map<Material, double> life;
  std::map<BirdKind, std::map<Material, double>> damage;

  static MaterialDefaults standard();
  double life_of(Material m) const;
  double damage_of(BirdKind b, Material m) const;
  friend bool operator==(const MaterialDefaults&, const MaterialDefaults&) = default;
};

enum class ScoringMode { per_object, per_material, per_suspect_type };

std::string_view to_string(ScoringMode m);

struct ScoringPolicy {
  ScoringMode mode = ScoringMode::per_material;
  std::map<Material, double> weights{
      {Material::wood, 1.0}, {Material::ice, 1.0}, {Material::stone, 1.0}, {Material::pig, 1.0}};

  double weight(Material m) const;
  friend bool operator==(const ScoringPolicy&, const ScoringPolicy&) = default;
};

enum class OutputFormat { text, csv, json_lines };

std::string_view to_string(OutputFormat f);
OutputFormat format_from_string(std::string_view text);

struct RunConfig {
  double alpha = 0.5;
  PhysicsConstants physics;
  MaterialDefaults materials = MaterialDefaults::standard();
  DetectabilityTable detectability = DetectabilityTable::defaults();
  ScoringPolicy scoring;
  OutputFormat format = OutputFormat::text;

  /// Throws ConfigError on non-positive constants, alpha outside [0,1] or an unusable scoring policy.
  void validate() const;

  /// Sectioned key-value text; `from_ini(to_ini())` reproduces the configuration.
  std::string to_ini() const;
  static RunConfig from_ini(const std::string& text);
  static RunConfig load(const std::filesystem::path& path);

  /// 16 hex digits of FNV-1a over the canonical text form.
  std::string fingerprint() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Shortest round-tripping decimal form.
std::string format_double(double v);

}  // namespace novelty_gauge
