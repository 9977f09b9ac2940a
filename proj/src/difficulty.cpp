#include "novelty_gauge/difficulty.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "novelty_gauge/detectability.hpp"
#include "novelty_gauge/dynamics.hpp"

namespace novelty_gauge {

double impact_score(const Scene& scene, const ImpactResult& result, const ScoringPolicy& policy) {
  switch (policy.mode) {
    case ScoringMode::per_object:
      return static_cast<double>(result.moved.size());
    case ScoringMode::per_material: {
      std::set<Material> seen;
      for (const auto& m : result.moved) seen.insert(scene.at(m.id).material);
      double total = 0.0;
      for (Material m : seen) total += policy.weight(m);
      return total;
    }
    case ScoringMode::per_suspect_type: {
      double total = 0.0;
      for (const auto& m : result.moved) total += policy.weight(scene.at(m.id).material);
      return total;
    }
  }
  return 0.0;
}

double impact_score(const Scene& scene, const GameObject& target, BirdKind bird, const ScoringPolicy& policy,
                    const PhysicsConstants& constants) {
  const auto trajectories = trajectories_to(scene, target, bird, constants);
  if (trajectories.empty()) throw std::invalid_argument("'" + target.id + "' is not a target");
  return impact_score(scene, simulate_interaction(scene, target, bird, trajectories.front(), constants), policy);
}

std::vector<ShotOption> evaluate_shots(const Scene& scene, const NoveltySpec& spec, const RunConfig& config) {
  std::vector<ShotOption> options;
  if (scene.birds().empty()) return options;
  const BirdKind bird = scene.birds().front();
  for (auto& target : find_targets(scene, bird, config.physics)) {
    ShotOption opt;
    opt.result = simulate_interaction(scene, target.object, bird, target.trajectories.front(), config.physics);
    opt.score = impact_score(scene, opt.result, config.scoring);
    opt.reveals_novelty = reveals_novelty(scene, opt.result, spec, config.detectability);
    opt.target = std::move(target);
    options.push_back(std::move(opt));
  }
  return options;
}

std::size_t best_shot(const std::vector<ShotOption>& options) {
  if (options.empty()) throw NoTargets();
  std::size_t best = 0;
  for (std::size_t i = 1; i < options.size(); ++i) {
    if (options[i].score > options[best].score) best = i;
  }
  return best;
}

GameObject best_target(const Scene& scene, BirdKind bird, const ScoringPolicy& policy,
                       const PhysicsConstants& constants) {
  const auto found = find_targets(scene, bird, constants);
  if (found.empty()) throw NoTargets();
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto result =
        simulate_interaction(scene, found[i].object, bird, found[i].trajectories.front(), constants);
    const double s = impact_score(scene, result, policy);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return found[best].object;
}

DifficultyRun probabilistic_interaction_difficulty(const Scene& scene, const NoveltySpec& spec,
                                                   const RunConfig& config) {
  const std::size_t total = scene.birds().size();
  DifficultyRun run;
  if (total == 0) throw DomainError("a level needs at least one bird");
  Scene state = scene;
  double sum = 0.0;
  for (std::size_t i = 1; i <= total; ++i) {
    const auto options = evaluate_shots(state, spec, config);
    InteractionRecord rec;
    rec.interaction = i;
    rec.targets = options.size();
    rec.revealing_targets = static_cast<std::size_t>(
        std::count_if(options.begin(), options.end(), [](const ShotOption& o) { return o.reveals_novelty; }));
    rec.undetectable_fraction =
        rec.targets == 0 ? 1.0
                         : static_cast<double>(rec.targets - rec.revealing_targets) / static_cast<double>(rec.targets);
    rec.detected = rec.revealing_targets > 0;
    sum += rec.undetectable_fraction;
    if (rec.undetectable_fraction != 1.0) {
      run.trace.push_back(std::move(rec));
      break;
    }
    if (options.empty()) {
      state = skip_interaction(state);
    } else {
      const auto& shot = options[best_shot(options)];
      rec.best_target = shot.target.object.id;
      state = apply_interaction(state, shot.result, config.physics);
    }
    run.trace.push_back(std::move(rec));
  }
  run.value = std::clamp(sum / static_cast<double>(total), 0.0, 1.0);
  return run;
}

DifficultyRun best_shot_interaction_difficulty(const Scene& scene, const NoveltySpec& spec, const RunConfig& config) {
  const std::size_t total = scene.birds().size();
  DifficultyRun run;
  if (total == 0) throw DomainError("a level needs at least one bird");
  Scene state = scene;
  std::size_t count = 0;
  bool flagged = false;
  for (std::size_t i = 1; i <= total; ++i) {
    ++count;
    const auto options = evaluate_shots(state, spec, config);
    InteractionRecord rec;
    rec.interaction = i;
    rec.targets = options.size();
    rec.revealing_targets = static_cast<std::size_t>(
        std::count_if(options.begin(), options.end(), [](const ShotOption& o) { return o.reveals_novelty; }));
    rec.undetectable_fraction =
        rec.targets == 0 ? 1.0
                         : static_cast<double>(rec.targets - rec.revealing_targets) / static_cast<double>(rec.targets);
    if (options.empty()) {
      state = skip_interaction(state);
      run.trace.push_back(std::move(rec));
      continue;
    }
    const auto& shot = options[best_shot(options)];
    rec.best_target = shot.target.object.id;
    rec.detected = shot.reveals_novelty;
    run.trace.push_back(rec);
    if (shot.reveals_novelty) {
      flagged = true;
      break;
    }
    state = apply_interaction(state, shot.result, config.physics);
  }
  if (!flagged) count = total + 1;
  run.value = static_cast<double>(count - 1) / static_cast<double>(total);
  return run;
}

double combined_difficulty(double pid, double bid, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
  return std::clamp(alpha * pid + (1.0 - alpha) * bid, 0.0, 1.0);
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::easy: return "easy";
    case Category::medium: return "medium";
    case Category::hard: return "hard";
  }
  return "?";
}

std::vector<Category> categorize(std::span<const double> scores) {
  if (scores.size() < 3) throw InsufficientData("categorization needs at least three scores");
  for (double s : scores) {
    if (!std::isfinite(s)) throw InsufficientData("scores must be finite");
  }
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  auto threshold = [&](double p) {
    const auto rank = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(p * n)));
    return sorted[rank - 1];
  };
  const double t1 = threshold(0.3333);
  const double t2 = threshold(0.6667);
  std::vector<Category> out;
  out.reserve(scores.size());
  for (double s : scores) out.push_back(s <= t1 ? Category::easy : s <= t2 ? Category::medium : Category::hard);
  return out;
}

DifficultyReport analyze(const Scene& scene, const NoveltySpec& spec, const RunConfig& config) {
  config.validate();
  DifficultyReport report;
  auto pid = probabilistic_interaction_difficulty(scene, spec, config);
  auto bid = best_shot_interaction_difficulty(scene, spec, config);
  report.pid = pid.value;
  report.bid = bid.value;
  report.alpha = config.alpha;
  report.combined = combined_difficulty(report.pid, report.bid, report.alpha);
  report.pid_trace = std::move(pid.trace);
  report.bid_trace = std::move(bid.trace);
  report.config_hash = config.fingerprint();
  return report;
}

}  // namespace novelty_gauge
