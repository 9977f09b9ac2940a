#pragma once

#include <cstddef>
#include <cstdint>

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

struct GeneratorOptions {
  std::size_t min_movable = 3;
  std::size_t max_movable = 12;
  std::size_t min_birds = 1;
  std::size_t max_birds = 4;
  /// Chance of each of up to two floating static platforms.
  double platform_probability = 0.3;
  double pig_probability = 0.25;
  /// Horizontal placement range for object left edges.
  double x_lo = 20.0;
  double x_hi = 50.0;
};

/// Random valid level built by dropping blocks and pigs onto a grid-aligned structure.
/// The same seed and options always give the same level on every platform.
Scene generate_level(std::uint64_t seed, const GeneratorOptions& options = {},
                     const MaterialDefaults& defaults = MaterialDefaults::standard());

}  // namespace novelty_gauge
