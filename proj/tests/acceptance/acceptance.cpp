// Acceptance suite: prints one PASS/FAIL line per criterion and exits non-zero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "novelty_gauge/commands.hpp"
#include "novelty_gauge/detectability.hpp"
#include "novelty_gauge/difficulty.hpp"
#include "novelty_gauge/dynamics.hpp"
#include "novelty_gauge/levelgen.hpp"
#include "novelty_gauge/reachability.hpp"
#include "oracle/oracle.hpp"
#include "support/scenes.hpp"

using namespace novelty_gauge;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::string> kNovelties = {
    "stone:friction", "wood:bounciness", "ice:mass",      "pig:gravity_scale", "stone:life",
    "wood:friction",  "pig:mass",        "ice:bounciness", "wood:mass,stone:friction"};

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

GeneratorOptions small_options() {
  GeneratorOptions opt;
  opt.min_movable = 1;
  opt.max_movable = 5;
  opt.max_birds = 4;
  opt.x_lo = 20.0;
  opt.x_hi = 27.0;
  opt.platform_probability = 0.4;
  return opt;
}

bool same_trace(const std::vector<InteractionRecord>& a, const oracle::Trace& b) {
  if (a.size() != b.steps.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& s = b.steps[i];
    if (a[i].targets != s.targets || a[i].revealing_targets != s.revealing ||
        a[i].undetectable_fraction != s.undetectable || a[i].best_target != s.shot || a[i].detected != s.detected) {
      return false;
    }
  }
  return true;
}

// 1. Golden vertical impact on the reconstructed two-bridge structure.
Outcome bridge_golden() {
  Outcome o;
  const auto t0 = Clock::now();
  const Scene s = testing_support::bridge_scene();
  const auto fall = as_set(vertical_impact(s, "o1"));
  const double elapsed = seconds_since(t0);
  const std::set<std::string> expected{"o1", "o3", "o4", "o5", "o6", "o8"};
  if (fall != expected) o.fail("fall set differs from {o1,o3,o4,o5,o6,o8}");
  if (elapsed >= 1.0) o.fail("took " + std::to_string(elapsed) + " s");
  o.detail = o.pass ? "exact match in " + std::to_string(elapsed * 1e3) + " ms" : o.detail;
  return o;
}

// 2. Production agrees with the brute-force oracles on small random scenes.
Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t scenes = 0, seeds = 0, traces = 0;
  for (std::uint64_t seed = 1; scenes < 1000; ++seed) {
    const Scene s = generate_level(seed, small_options());
    if (s.movable_count() == 0) continue;
    ++scenes;
    for (const GameObject* m : s.movable_objects()) {
      ++seeds;
      if (as_set(vertical_impact(s, m->id)) != oracle::oracle_fall_set(s, m->id)) {
        o.fail("vertical impact mismatch: level seed " + std::to_string(seed) + ", object " + m->id);
      }
    }
    const auto spec = NoveltySpec::parse(kNovelties[seed % kNovelties.size()]);
    const RunConfig config;
    const auto pid = probabilistic_interaction_difficulty(s, spec, config);
    const auto bid = best_shot_interaction_difficulty(s, spec, config);
    const auto opid = oracle::oracle_algorithm_trace(s, spec, oracle::Which::pid, config);
    const auto obid = oracle::oracle_algorithm_trace(s, spec, oracle::Which::bid, config);
    traces += 2;
    if (pid.value != opid.value || !same_trace(pid.trace, opid)) o.fail("PID mismatch: level seed " + std::to_string(seed));
    if (bid.value != obid.value || !same_trace(bid.trace, obid)) o.fail("BID mismatch: level seed " + std::to_string(seed));
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 60.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(scenes) + " scenes, " + std::to_string(seeds) + " fall sets, " + std::to_string(traces) +
               " traces, " + std::to_string(elapsed) + " s";
  }
  return o;
}

RunConfig random_config(std::mt19937_64& rng) {
  auto pick = [&](double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  RunConfig c;
  c.alpha = pick(0.0, 1.0);
  c.physics.k1 = pick(1.0, 40.0);
  for (auto& [bird, v] : c.physics.k2) v = pick(10.0, 2000.0);
  c.physics.k_flip = pick(0.5, 3.0);
  c.physics.k_sliding_constant = pick(0.5, 5.0);
  c.scoring.mode = static_cast<ScoringMode>(rng() % 3);
  for (auto& [m, w] : c.scoring.weights) w = static_cast<double>(rng() % 3);
  c.scoring.weights[Material::pig] = 1.0;
  return c;
}

// 3. Scores stay in [0,1] for random scenes, novelties and configurations.
Outcome score_bounds() {
  Outcome o;
  std::mt19937_64 rng(2024);
  const auto t0 = Clock::now();
  for (std::uint64_t i = 1; i <= 10000; ++i) {
    GeneratorOptions opt;
    opt.max_movable = 8;
    const Scene s = generate_level(i * 7919, opt);
    const auto spec = NoveltySpec::parse(kNovelties[rng() % kNovelties.size()]);
    const RunConfig config = random_config(rng);
    try {
      const auto r = analyze(s, spec, config);
      for (double v : {r.pid, r.bid, r.combined}) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) o.fail("out of range on triple " + std::to_string(i));
      }
    } catch (const std::exception& e) {
      o.fail("exception on triple " + std::to_string(i) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "10000 triples in " + std::to_string(seconds_since(t0)) + " s";
  return o;
}

// 4. Boundary identities.
Outcome boundary_identities() {
  Outcome o;
  const RunConfig config;
  const auto everything = NoveltySpec::parse(
      "wood:mass,wood:bounciness,ice:mass,ice:bounciness,stone:mass,stone:bounciness,pig:mass,pig:bounciness");
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Scene s = generate_level(seed);
    if (targets(s, s.birds().front(), config.physics).empty()) continue;
    const auto pid = probabilistic_interaction_difficulty(s, everything, config);
    const auto bid = best_shot_interaction_difficulty(s, everything, config);
    if (pid.value != 0.0 || bid.value != 0.0) o.fail("all-detectable level " + std::to_string(seed) + " not 0/0");
    ++checked;
  }
  GeneratorOptions no_pigs;
  no_pigs.pig_probability = 0.0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Scene s = generate_level(seed, no_pigs);
    const auto spec = NoveltySpec::parse("pig:mass");
    if (probabilistic_interaction_difficulty(s, spec, config).value != 1.0 ||
        best_shot_interaction_difficulty(s, spec, config).value != 1.0) {
      o.fail("never-detectable level " + std::to_string(seed) + " not 1/1");
    }
    ++checked;
  }
  const auto friction = NoveltySpec::parse("stone:friction");
  for (std::size_t b = 1; b <= 6; ++b) {
    for (std::size_t k = 1; k <= b; ++k) {
      const double expected = static_cast<double>(k - 1) / static_cast<double>(b);
      const double got = best_shot_interaction_difficulty(testing_support::walled_stone(k - 1, b), friction, config).value;
      if (got != expected) o.fail("BID for shot " + std::to_string(k) + " of " + std::to_string(b));
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " scenes";
  return o;
}

// 5. A detectable extra target never raises PID.
Outcome pid_monotonicity() {
  Outcome o;
  const RunConfig config;
  std::size_t tested = 0;
  for (std::uint64_t seed = 1; tested < 500 && seed < 5000; ++seed) {
    const Scene s = generate_level(seed);
    const auto spec = NoveltySpec::parse(kNovelties[seed % kNovelties.size()] + ",stone:friction");
    double right = 0.0, tallest = 0.0, widest = 0.0;
    for (const auto& obj : s.objects()) {
      right = std::max(right, obj.x_max());
      tallest = std::max(tallest, obj.height());
      widest = std::max(widest, obj.width());
    }
    auto objects = s.objects();
    const double x = right + config.physics.k_sliding_constant + tallest + 1.0;
    objects.push_back(testing_support::rect("extra", Material::stone, x, 0.0, widest, 1.0));
    const Scene augmented = Scene::create(objects, s.launch_point(), s.birds(), s.bounds());

    // Precondition: the extra block is a target that reveals the novelty on the first shot.
    const auto options = evaluate_shots(augmented, spec, config);
    const auto extra = std::find_if(options.begin(), options.end(),
                                    [](const ShotOption& opt) { return opt.target.object.id == "extra"; });
    if (extra == options.end() || !extra->reveals_novelty) continue;
    ++tested;
    const double before = probabilistic_interaction_difficulty(s, spec, config).value;
    const double after = probabilistic_interaction_difficulty(augmented, spec, config).value;
    if (after > before) o.fail("PID rose from " + std::to_string(before) + " to " + std::to_string(after) +
                               " on level seed " + std::to_string(seed));
  }
  if (tested < 500) o.fail("only " + std::to_string(tested) + " augmentable scenes");
  if (o.pass) o.detail = std::to_string(tested) + " augmented scenes";
  return o;
}

// 6. Detectability table rows and the straight-fall friction rule.
Outcome table_conformance() {
  Outcome o;
  using enum MovementCase;
  const auto table = DetectabilityTable::defaults();
  if (table.observable(PhysicalParameter::friction) != CaseSet{hit_slid, slid_and_stopped, slid_and_fell}) {
    o.fail("friction row is " + table.observable(PhysicalParameter::friction).to_string());
  }
  const CaseSet bounce{hit_flipped, hit_slid, fell_straight, fell_rotating, slid_and_stopped,
                       slid_and_fell, flipped_and_stopped, flipped_and_fell};
  if (table.observable(PhysicalParameter::bounciness) != bounce) {
    o.fail("bounciness row is " + table.observable(PhysicalParameter::bounciness).to_string());
  }

  const auto friction = NoveltySpec::parse("stone:friction");
  const auto stone = testing_support::rect("s", Material::stone, 30, 0, 1, 1);
  ImpactResult r;
  r.moved = {{"s", CaseSet{fell_straight}}};
  if (detectable(r, stone, friction, table)) o.fail("case-4-only stone flagged detectable");

  std::size_t case4_only = 0;
  const PhysicsConstants k;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Scene s = generate_level(seed);
    const BirdKind bird = s.birds().front();
    for (const auto& t : find_targets(s, bird, k)) {
      const auto result = simulate_interaction(s, t.object, bird, t.trajectories.front(), k);
      for (const auto& m : result.moved) {
        if (m.cases != CaseSet{fell_straight}) continue;
        ++case4_only;
        const GameObject& obj = s.at(m.id);
        for (Material mat : {Material::wood, Material::ice, Material::stone, Material::pig}) {
          NoveltySpec spec({NoveltyEntry{mat, PhysicalParameter::friction}});
          if (detectable(result, obj, spec, table)) o.fail("case-4-only " + m.id + " flagged on level " + std::to_string(seed));
        }
      }
    }
  }
  if (case4_only == 0) o.fail("no case-4-only movements generated");
  if (o.pass) o.detail = "rows exact; " + std::to_string(case4_only) + " case-4-only movements never flagged";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 7. Percentile split and the generate -> batch -> categorize workflow.
Outcome categorization(const fs::path& work) {
  Outcome o;
  std::vector<double> scores;
  for (int i = 0; i < 100; ++i) scores.push_back(static_cast<double>((i * 61) % 100) / 99.0);
  const auto cats = categorize(scores);
  const auto n = [&](Category c) { return std::count(cats.begin(), cats.end(), c); };
  if (n(Category::easy) != 33 || n(Category::medium) != 33 || n(Category::hard) != 34) {
    o.fail("split " + std::to_string(n(Category::easy)) + "/" + std::to_string(n(Category::medium)) + "/" +
           std::to_string(n(Category::hard)));
  }

  const auto t0 = Clock::now();
  std::ostringstream sink, err;
  GenerateOptions gen;
  gen.dir = work / "corpus";
  gen.count = 100;
  gen.seed = 5;
  if (cmd_generate(gen, sink, err) != kExitOk) o.fail("generate failed: " + err.str());
  BatchOptions batch;
  batch.dir = gen.dir;
  batch.novelty = "stone:friction";
  batch.jobs = 4;
  batch.out = work / "batch.csv";
  if (cmd_batch(batch, sink, err) != kExitOk) o.fail("batch failed: " + err.str());
  if (cmd_categorize(work / "batch.csv", work / "categorized.csv", sink, err) != kExitOk) {
    o.fail("categorize failed: " + err.str());
  }
  const double elapsed = seconds_since(t0);

  std::istringstream lines(slurp(work / "categorized.csv"));
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0, labelled = 0;
  while (std::getline(lines, line)) {
    ++rows;
    for (const char* label : {",easy", ",medium", ",hard"}) {
      const std::string l(label);
      if (line.size() >= l.size() && line.compare(line.size() - l.size(), l.size(), l) == 0) ++labelled;
    }
  }
  if (rows != 100 || labelled != 100) o.fail(std::to_string(labelled) + " of " + std::to_string(rows) + " rows labelled");
  if (elapsed >= 300.0) o.fail("pipeline took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "33/33/34; 100-level pipeline in " + std::to_string(elapsed) + " s";
  return o;
}

// 8. Batch output is byte-for-byte reproducible.
Outcome determinism(const fs::path& work) {
  Outcome o;
  std::ostringstream sink, err;
  GenerateOptions gen;
  gen.dir = work / "det";
  gen.count = 40;
  gen.seed = 17;
  cmd_generate(gen, sink, err);
  std::vector<std::string> outputs;
  for (std::size_t jobs : {4, 4, 1}) {
    BatchOptions batch;
    batch.dir = gen.dir;
    batch.novelty = "wood:bounciness,pig:gravity_scale";
    batch.jobs = jobs;
    batch.out = work / ("det_" + std::to_string(outputs.size()) + ".csv");
    std::ostringstream out;
    cmd_batch(batch, out, err);
    outputs.push_back(slurp(*batch.out));
  }
  if (outputs[0].empty()) o.fail("empty output");
  if (outputs[0] != outputs[1]) o.fail("two runs differ");
  if (outputs[0] != outputs[2]) o.fail("parallel and sequential runs differ");
  if (o.pass) o.detail = "3 runs, " + std::to_string(outputs[0].size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const fs::path work = fs::temp_directory_path() / "novelty_gauge_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 bridge golden vertical impact", bridge_golden},
      {"2 oracle equivalence", oracle_equivalence},
      {"3 score bounds", score_bounds},
      {"4 boundary identities", boundary_identities},
      {"5 PID monotonicity", pid_monotonicity},
      {"6 detectability table", table_conformance},
      {"7 categorization pipeline", [&] { return categorization(work); }},
      {"8 batch determinism", [&] { return determinism(work); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome result;
    try {
      result = check();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %s: %s\n", result.pass ? "PASS" : "FAIL", name.c_str(), result.detail.c_str());
    std::fflush(stdout);
    failures += result.pass ? 0 : 1;
  }
  fs::remove_all(work);
  return failures == 0 ? 0 : 1;
}
