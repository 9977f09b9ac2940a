#include "oracle.hpp"

#include <cmath>
#include <map>

#include "novelty_gauge/dynamics.hpp"
#include "novelty_gauge/reachability.hpp"

namespace oracle {

using namespace novelty_gauge;

namespace {

constexpr double kEps = 1e-6;

struct Extent {
  double x0, x1, y0, y1;
};

Extent extent(const GameObject& o) {
  if (const auto* r = std::get_if<AxisAlignedRect>(&o.shape)) {
    return {r->x_min, r->x_min + r->width, r->y_min, r->y_min + r->height};
  }
  const auto& c = std::get<Circle>(o.shape);
  return {c.cx - c.r, c.cx + c.r, c.cy - c.r, c.cy + c.r};
}

bool is_circle(const GameObject& o) { return std::holds_alternative<Circle>(o.shape); }

/// Horizontal part of the face `o` rests on (bottom) or offers (top). Circles touch at one point.
std::pair<double, double> face(const GameObject& o) {
  const Extent e = extent(o);
  if (is_circle(o)) {
    const double cx = std::get<Circle>(o.shape).cx;
    return {cx, cx};
  }
  return {e.x0, e.x1};
}

struct Touch {
  int below = -1;  // -1: the floor
  double lo = 0.0, hi = 0.0;
};

std::vector<std::vector<Touch>> touches(const Scene& scene) {
  const auto& objs = scene.objects();
  std::vector<std::vector<Touch>> out(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (objs[i].is_static()) continue;
    const Extent ei = extent(objs[i]);
    const auto [a0, a1] = face(objs[i]);
    if (std::fabs(ei.y0 - scene.bounds().y_min) <= kEps) out[i].push_back({-1, a0, a1});
    for (std::size_t j = 0; j < objs.size(); ++j) {
      if (j == i || std::fabs(extent(objs[j]).y1 - ei.y0) > kEps) continue;
      const auto [b0, b1] = face(objs[j]);
      const double lo = std::max(a0, b0), hi = std::min(a1, b1);
      const bool pointy = (a1 - a0) <= kEps || (b1 - b0) <= kEps;
      if (pointy ? lo <= hi + kEps : hi - lo > kEps) out[i].push_back({static_cast<int>(j), lo, std::max(lo, hi)});
    }
  }
  return out;
}

double surface(const GameObject& o) {
  const Extent e = extent(o);
  if (is_circle(o)) {
    const double r = std::get<Circle>(o.shape).r;
    return 3.14159265358979323846 * r * r;
  }
  return (e.x1 - e.x0) * (e.y1 - e.y0);
}

double middle_x(const GameObject& o) {
  const Extent e = extent(o);
  return 0.5 * (e.x0 + e.x1);
}

}  // namespace

std::set<std::string> oracle_fall_set(const Scene& scene, const std::string& seed) {
  const auto& objs = scene.objects();
  std::vector<std::size_t> movable;
  std::size_t seed_index = objs.size();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (objs[i].is_movable()) movable.push_back(i);
    if (objs[i].id == seed) seed_index = i;
  }
  if (movable.size() > 8) throw TooLarge("oracle_fall_set handles at most eight movable objects");
  if (seed_index == objs.size() || objs[seed_index].is_static()) throw std::invalid_argument("bad seed " + seed);

  const auto t = touches(scene);
  // Everything each object holds up, directly or through others.
  std::vector<double> load_x(objs.size(), 0.0);
  for (std::size_t i : movable) {
    std::set<std::size_t> load{i};
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t k : movable) {
        if (load.contains(k)) continue;
        for (const Touch& tc : t[k]) {
          if (tc.below >= 0 && load.contains(static_cast<std::size_t>(tc.below))) {
            load.insert(k);
            grew = true;
            break;
          }
        }
      }
    }
    double m = 0.0, mx = 0.0;
    for (std::size_t k : load) {
      m += surface(objs[k]);
      mx += surface(objs[k]) * middle_x(objs[k]);
    }
    load_x[i] = mx / m;
  }

  auto closed = [&](const std::vector<bool>& in) {
    for (std::size_t x : movable) {
      if (in[x]) continue;
      bool disturbed = false;
      double lo = INFINITY, hi = -INFINITY;
      for (const Touch& tc : t[x]) {
        const bool gone = tc.below >= 0 && in[static_cast<std::size_t>(tc.below)];
        disturbed = disturbed || gone;
        if (!gone) {
          lo = std::min(lo, tc.lo);
          hi = std::max(hi, tc.hi);
        }
      }
      if (!disturbed) continue;
      if (!(lo <= hi) || load_x[x] < lo - 1e-9 || load_x[x] > hi + 1e-9) return false;
    }
    return true;
  };

  std::vector<bool> meet(objs.size(), false);
  for (std::size_t x : movable) meet[x] = true;
  const std::size_t n = movable.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> in(objs.size(), false);
    for (std::size_t b = 0; b < n; ++b) in[movable[b]] = (mask >> b) & 1U;
    if (!in[seed_index] || !closed(in)) continue;
    for (std::size_t x : movable) meet[x] = meet[x] && in[x];
  }
  std::set<std::string> out;
  for (std::size_t x : movable) {
    if (meet[x]) out.insert(objs[x].id);
  }
  return out;
}

namespace {

struct Column {
  std::string target;
  ImpactResult result;
  double score = 0.0;
  bool reveals = false;
};

/// Detectability matrix of one state: one column per target, in target order.
std::vector<Column> matrix(const Scene& state, const NoveltySpec& spec, const RunConfig& config) {
  std::vector<Column> cols;
  if (state.birds().empty()) return cols;
  const BirdKind bird = state.birds().front();
  for (const auto& tgt : find_targets(state, bird, config.physics)) {
    Column c;
    c.target = tgt.object.id;
    c.result = simulate_interaction(state, tgt.object, bird, tgt.trajectories.front(), config.physics);
    std::set<Material> materials;
    for (const auto& m : c.result.moved) {
      const GameObject& o = state.at(m.id);
      materials.insert(o.material);
      switch (config.scoring.mode) {
        case ScoringMode::per_object: c.score += 1.0; break;
        case ScoringMode::per_suspect_type: c.score += config.scoring.weight(o.material); break;
        case ScoringMode::per_material: break;
      }
      for (const auto& entry : spec.entries()) {
        if (entry.material != o.material) continue;
        for (MovementCase mc : m.cases.cases()) {
          if (config.detectability.observable(entry.parameter).contains(mc)) c.reveals = true;
        }
      }
    }
    if (config.scoring.mode == ScoringMode::per_material) {
      for (Material mat : materials) c.score += config.scoring.weight(mat);
    }
    cols.push_back(std::move(c));
  }
  return cols;
}

std::size_t argmax(const std::vector<Column>& cols) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].score > cols[best].score) best = i;
  }
  return best;
}

}  // namespace

Trace oracle_algorithm_trace(const Scene& scene, const NoveltySpec& spec, Which which, const RunConfig& config) {
  if (scene.movable_count() > 8 || scene.birds().size() > 4) {
    throw TooLarge("oracle_algorithm_trace handles at most eight movable objects and four birds");
  }
  const double total = static_cast<double>(scene.birds().size());
  Scene state = scene;
  Trace trace;

  if (which == Which::pid) {
    double pid = 0.0;                                        // PID = 0
    for (std::size_t i = 0; i < scene.birds().size(); ++i) {  // for i in interactions
      const auto cols = matrix(state, spec, config);
      Step s;
      s.targets = cols.size();  // N_i
      for (const auto& c : cols) s.revealing += c.reveals ? 1 : 0;  // n_i
      s.undetectable = s.targets == 0 ? 1.0 : double(s.targets - s.revealing) / double(s.targets);  // M_i
      s.detected = s.revealing > 0;
      pid += s.undetectable;  // PID += M_i
      if (s.undetectable != 1.0) {  // if M_i != 1: break
        trace.steps.push_back(s);
        break;
      }
      if (cols.empty()) {
        state = skip_interaction(state);
      } else {  // shoot best target, update state
        const auto& best = cols[argmax(cols)];
        s.shot = best.target;
        state = apply_interaction(state, best.result, config.physics);
      }
      trace.steps.push_back(s);
    }
    trace.value = pid / total;  // PID /= interactions
    return trace;
  }

  double bid = 0.0;  // BID = 0
  bool flag = false;
  for (std::size_t i = 0; i < scene.birds().size(); ++i) {
    bid += 1.0;  // BID += 1
    const auto cols = matrix(state, spec, config);
    Step s;
    s.targets = cols.size();
    for (const auto& c : cols) s.revealing += c.reveals ? 1 : 0;
    s.undetectable = s.targets == 0 ? 1.0 : double(s.targets - s.revealing) / double(s.targets);
    if (cols.empty()) {
      state = skip_interaction(state);
      trace.steps.push_back(s);
      continue;
    }
    const auto& best = cols[argmax(cols)];
    s.shot = best.target;
    s.detected = best.reveals;
    trace.steps.push_back(s);
    if (best.reveals) {  // if detectable(o*, o_j): flag, break
      flag = true;
      break;
    }
    state = apply_interaction(state, best.result, config.physics);
  }
  if (!flag) bid = total + 1.0;
  trace.value = (bid - 1.0) / total;
  return trace;
}

}  // namespace oracle
