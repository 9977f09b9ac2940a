#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

/// Reads a level file (JSON) and returns a validated scene. Objects without
/// explicit `life` / `bird_damage` take them from `defaults`.
///
/// Throws ParseError for malformed text or unknown keys and ValidationError
/// when the scene breaks an invariant (including an empty bird list).
Scene load_level(const std::filesystem::path& path, const MaterialDefaults& defaults = MaterialDefaults::standard());
Scene parse_level(std::string_view text, const MaterialDefaults& defaults = MaterialDefaults::standard());

/// Writes every resolved field, so reloading needs no defaults to reproduce the scene.
std::string serialize_level(const Scene& scene);
void save_level(const Scene& scene, const std::filesystem::path& path);

}  // namespace novelty_gauge
