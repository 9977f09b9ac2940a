#pragma once

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/impact.hpp"
#include "novelty_gauge/movement.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

/// Movement cases observed for `o` in `result`; empty when `o` did not move.
///
/// The hit object is destroyed (1), flips (2) or slides (3). The pushed neighbour slides
/// or flips and then stops (6, 8) if it still ends up over a support at its level, else
/// falls off (7, 9). Everything else in a fall list falls straight (4) when the first
/// surface beneath it is one static piece spanning its whole footprint, otherwise it
/// rotates on the way down (5).
CaseSet classify_movement(const Scene& scene, const ImpactResult& result, const GameObject& o,
                          const PhysicsConstants& constants);

/// novel(o) and one of its observed cases can reveal one of its novel parameters.
bool detectable(const ImpactResult& result, const GameObject& o, const NoveltySpec& spec,
                const DetectabilityTable& table);

/// Some novel object moved detectably in `result`.
bool reveals_novelty(const Scene& scene, const ImpactResult& result, const NoveltySpec& spec,
                     const DetectabilityTable& table);

}  // namespace novelty_gauge
