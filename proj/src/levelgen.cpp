#include "novelty_gauge/levelgen.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "novelty_gauge/dynamics.hpp"

namespace novelty_gauge {

namespace {

/// Portable draws; the standard distributions differ between library vendors.
class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

private:
  std::mt19937_64 rng_;
};

constexpr double kGrid = 0.5;

}  // namespace

Scene generate_level(std::uint64_t seed, const GeneratorOptions& options, const MaterialDefaults& defaults) {
  Draw draw(seed);
  const Box bounds{-5.0, 0.0, 120.0, 80.0};
  const Point launch{0.0, 5.0};
  const auto grid_steps = static_cast<std::size_t>((options.x_hi - options.x_lo) / kGrid);

  std::vector<GameObject> placed;
  for (int p = 0; p < 2; ++p) {
    if (!draw.chance(options.platform_probability)) continue;
    GameObject platform;
    platform.id = "platform" + std::to_string(p + 1);
    platform.material = Material::platform;
    const double x = options.x_lo + kGrid * static_cast<double>(draw.below(grid_steps));
    const double y = 4.0 + 2.0 * static_cast<double>(draw.below(3));
    platform.shape = AxisAlignedRect{x, y, kGrid * static_cast<double>(draw.between(4, 12)), kGrid};
    if (std::none_of(placed.begin(), placed.end(),
                     [&](const GameObject& q) { return interiors_overlap(q.shape, platform.shape); })) {
      placed.push_back(std::move(platform));
    }
  }

  const std::size_t wanted = draw.between(options.min_movable, std::max(options.min_movable, options.max_movable));
  std::size_t made = 0;
  for (std::size_t attempt = 0; made < wanted && attempt < wanted * 20; ++attempt) {
    GameObject o;
    const double x = options.x_lo + kGrid * static_cast<double>(draw.below(grid_steps));
    if (draw.chance(options.pig_probability)) {
      o.material = Material::pig;
      const double r = kGrid * static_cast<double>(draw.between(1, 2));
      o.shape = Circle{x + r, bounds.y_max, r};
    } else {
      static constexpr Material kBlocks[] = {Material::wood, Material::ice, Material::stone};
      o.material = kBlocks[draw.below(3)];
      const double w = kGrid * static_cast<double>(draw.between(1, 8));
      const double h = kGrid * static_cast<double>(draw.between(1, 8));
      o.shape = AxisAlignedRect{x, bounds.y_max, w, h};
    }
    const double land = landing_height(o.shape, placed, bounds.y_min);
    o.shape = translated(o.shape, 0.0, land - bounding_box(o.shape).y_min);
    const Box b = bounding_box(o.shape);
    if (b.y_max > 30.0) continue;
    if (std::any_of(placed.begin(), placed.end(), [&](const GameObject& q) { return interiors_overlap(q.shape, o.shape); })) {
      continue;
    }
    if (compute_supports(placed, bounds.y_min, o).empty()) continue;
    o.id = std::string(to_string(o.material)) + std::to_string(++made);
    o.life = defaults.life_of(o.material);
    for (BirdKind bird : kAllBirds) o.bird_damage[bird] = defaults.damage_of(bird, o.material);
    placed.push_back(std::move(o));
  }

  std::vector<BirdKind> birds;
  const std::size_t bird_count = draw.between(options.min_birds, std::max(options.min_birds, options.max_birds));
  for (std::size_t i = 0; i < bird_count; ++i) birds.push_back(kAllBirds[draw.below(kAllBirds.size())]);
  return Scene::create(std::move(placed), launch, std::move(birds), bounds);
}

}  // namespace novelty_gauge
