#include <doctest.h>

#include "novelty_gauge/config.hpp"
#include "novelty_gauge/level_io.hpp"
#include "novelty_gauge/scene.hpp"
#include "support/scenes.hpp"

using namespace novelty_gauge;
using testing_support::circle;
using testing_support::make_scene;
using testing_support::rect;

namespace {

const char* kMinimalLevel = R"({
  "objects": [{"id": "w", "material": "wood", "shape": {"kind": "rect", "x": 10, "y": 0, "width": 1, "height": 2}}],
  "launch_point": [0, 5],
  "birds": ["red"],
  "bounds": [-5, 0, 100, 50]
})";

}  // namespace

TEST_SUITE("scene") {
  TEST_CASE("minimal level loads with defaults filled in") {
    const Scene s = parse_level(kMinimalLevel);
    CHECK(s.movable_count() == 1);
    CHECK(s.birds().size() == 1);
    const GameObject& w = s.at("w");
    CHECK(w.life == doctest::Approx(40.0));
    CHECK(w.damage_for(BirdKind::yellow) == doctest::Approx(2.0));
    CHECK(w.x_max() == doctest::Approx(11.0));
    CHECK(w.y_max() == doctest::Approx(2.0));
  }

  TEST_CASE("interpenetrating blocks are rejected and named") {
    try {
      make_scene({rect("a", Material::wood, 10, 0, 2, 2), rect("b", Material::ice, 11, 0, 2, 2)});
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(e.reason() == "overlap");
      CHECK(e.object_ids() == std::vector<std::string>{"a", "b"});
    }
  }

  TEST_CASE("floating object is rejected") {
    CHECK_THROWS_AS(make_scene({rect("a", Material::wood, 10, 1, 2, 2)}), ValidationError);
  }

  TEST_CASE("object left of the launch point is rejected") {
    CHECK_THROWS_AS(make_scene({rect("a", Material::wood, -1, 0, 2, 2)}), ValidationError);
  }

  TEST_CASE("empty bird list is rejected at load") {
    std::string text = kMinimalLevel;
    text.replace(text.find("[\"red\"]"), 7, "[]");
    CHECK_THROWS_AS(parse_level(text), ValidationError);
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_level("{"), ParseError);
    std::string unknown = kMinimalLevel;
    unknown.replace(unknown.find("\"birds\""), 7, "\"colour\": 1, \"birds\"");
    CHECK_THROWS_AS(parse_level(unknown), ParseError);
    std::string bad_material = kMinimalLevel;
    bad_material.replace(bad_material.find("wood"), 4, "gold");
    CHECK_THROWS_AS(parse_level(bad_material), ParseError);
  }

  TEST_CASE("bridge structure has eight movable objects") {
    CHECK(testing_support::bridge_scene().movable_count() == 8);
  }

  TEST_CASE("serialize and reload gives an equal scene") {
    const Scene s = make_scene({rect("a", Material::wood, 10, 0, 2, 2), circle("p", Material::pig, 11, 2.5, 0.5),
                                rect("g", Material::platform, 30, 4, 3, 0.5)},
                               {BirdKind::blue, BirdKind::red});
    const Scene again = parse_level(serialize_level(s));
    CHECK(again == s);
    CHECK(serialize_level(again) == serialize_level(s));
  }

  TEST_CASE("circle resting on a block is supported") {
    const Scene s = make_scene({rect("a", Material::wood, 10, 0, 2, 2), circle("p", Material::pig, 11, 2.5, 0.5)});
    const auto contacts = s.supports_of(s.at("p"));
    REQUIRE(contacts.size() == 1);
    CHECK(contacts[0].supporter_id == "a");
  }
}

TEST_SUITE("novelty") {
  TEST_CASE("is_novel_object depends on material only") {
    const auto spec = NoveltySpec::parse("wood:bounciness");
    CHECK(is_novel_object(rect("w", Material::wood, 10, 0, 1, 1), spec));
    CHECK_FALSE(is_novel_object(rect("s", Material::stone, 10, 0, 1, 1), spec));
    const auto multi = NoveltySpec::parse("pig:gravity_scale,stone:life");
    CHECK(is_novel_object(circle("p", Material::pig, 10, 1, 1), multi));
    CHECK(is_novel_object(rect("w", Material::wood, 10, 0, 5, 5), spec));
  }

  TEST_CASE("malformed novelty strings") {
    CHECK_THROWS_AS(NoveltySpec::parse("stone-friction"), ParseError);
    CHECK_THROWS_AS(NoveltySpec::parse(""), ParseError);
    CHECK_THROWS_AS(NoveltySpec::parse("platform:mass"), ParseError);
    CHECK_THROWS_AS(NoveltySpec::parse("stone:colour"), ParseError);
  }

  TEST_CASE("round trip through text") {
    const auto spec = NoveltySpec::parse("stone:friction, wood:mass");
    CHECK(NoveltySpec::parse(spec.to_string()).entries() == spec.entries());
  }
}

TEST_SUITE("config") {
  TEST_CASE("ini round trip and stable fingerprint") {
    RunConfig c;
    c.alpha = 0.25;
    c.physics.k2[BirdKind::blue] = 500.0;
    c.scoring.mode = ScoringMode::per_suspect_type;
    c.scoring.weights[Material::wood] = 0.0;
    c.detectability.set(PhysicalParameter::mass, CaseSet::parse("1,4"));
    const RunConfig back = RunConfig::from_ini(c.to_ini());
    CHECK(back == c);
    CHECK(back.fingerprint() == c.fingerprint());
    CHECK(c.fingerprint().size() == 16);
    CHECK(c.fingerprint() != RunConfig{}.fingerprint());
  }

  TEST_CASE("invalid values") {
    RunConfig c;
    c.alpha = 1.5;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.physics.k_flip = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    for (auto& [m, w] : c.scoring.weights) w = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_ini("alpha = abc\n"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_ini("[launch]\nspeed = 3\n"), ConfigError);
  }
}
