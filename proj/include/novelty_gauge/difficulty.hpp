#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/impact.hpp"
#include "novelty_gauge/reachability.hpp"
#include "novelty_gauge/scene.hpp"

namespace novelty_gauge {

class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NoTargets : public std::runtime_error {
public:
  NoTargets() : std::runtime_error("no reachable targets") {}
};

class InsufficientData : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sum of per-object scores over the objects moved in `result`.
double impact_score(const Scene& scene, const ImpactResult& result, const ScoringPolicy& policy);

/// Simulates a shot at `target` along its first trajectory and scores it.
double impact_score(const Scene& scene, const GameObject& target, BirdKind bird, const ScoringPolicy& policy,
                    const PhysicsConstants& constants);

/// One reachable target in the current state, fully evaluated for the next bird.
struct ShotOption {
  TargetOption target;
  ImpactResult result;
  double score = 0.0;
  bool reveals_novelty = false;
};

std::vector<ShotOption> evaluate_shots(const Scene& scene, const NoveltySpec& spec, const RunConfig& config);

/// Index of the highest-scoring option; the first one wins ties. Throws NoTargets when empty.
std::size_t best_shot(const std::vector<ShotOption>& options);

GameObject best_target(const Scene& scene, BirdKind bird, const ScoringPolicy& policy,
                       const PhysicsConstants& constants);

struct InteractionRecord {
  std::size_t interaction = 0;  // 1-based
  std::size_t targets = 0;            // N_i
  std::size_t revealing_targets = 0;  // n_i
  double undetectable_fraction = 1.0; // M_i
  std::optional<std::string> best_target;
  bool detected = false;

  friend bool operator==(const InteractionRecord&, const InteractionRecord&) = default;
};

struct DifficultyRun {
  double value = 1.0;
  std::vector<InteractionRecord> trace;
};

/// Probabilistic interaction difficulty: mean over interactions of the fraction of targets
/// that cannot reveal the novelty, stopping at the first state where some target can.
/// A state without targets counts as fully undetectable.
DifficultyRun probabilistic_interaction_difficulty(const Scene& scene, const NoveltySpec& spec,
                                                   const RunConfig& config);

/// Best-shot interaction difficulty: (shots before the best shot reveals the novelty) / birds,
/// or 1 when it never does.
DifficultyRun best_shot_interaction_difficulty(const Scene& scene, const NoveltySpec& spec, const RunConfig& config);

/// alpha * pid + (1 - alpha) * bid. Throws DomainError for alpha outside [0, 1].
double combined_difficulty(double pid, double bid, double alpha = 0.5);

enum class Category { easy, medium, hard };

std::string_view to_string(Category c);

/// Percentile thresholds at 33.33% and 66.67% using nearest-rank order statistics
/// (rank = floor(p * n), at least 1). Scores at a threshold take the lower category.
/// Throws InsufficientData for fewer than three scores.
std::vector<Category> categorize(std::span<const double> scores);

struct DifficultyReport {
  double pid = 1.0;
  double bid = 1.0;
  double combined = 1.0;
  double alpha = 0.5;
  std::vector<InteractionRecord> pid_trace;
  std::vector<InteractionRecord> bid_trace;
  std::optional<Category> category;
  std::string config_hash;
};

DifficultyReport analyze(const Scene& scene, const NoveltySpec& spec, const RunConfig& config);

}  // namespace novelty_gauge
