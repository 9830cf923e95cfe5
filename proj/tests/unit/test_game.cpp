#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "flattorus/errors.hpp"
#include "flattorus/game.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace flattorus;
using namespace flattorus::game;

namespace {

GameState empty_state() {
  GameConfig cfg;
  cfg.asteroid_count = 0;
  return new_game(cfg, 1);
}

InputScript load_script() {
  std::ifstream in(FLATTORUS_TEST_DATA "/asteroids_600.txt");
  REQUIRE(in);
  return parse_input_script(in);
}

bool canonical(TorusPoint p, double s) { return p.u >= 0.0 && p.u < s && p.v >= 0.0 && p.v < s; }

}  // namespace

TEST_CASE("splitmix64 reference values") {
  // First outputs for seed 0, from the published reference implementation.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  SplitMix64 u(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.unit();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("FNV-1a 64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("new_game") {
  const GameConfig cfg;
  const GameState a = new_game(cfg, 7);
  const GameState b = new_game(cfg, 7);
  CHECK(state_hash(a) == state_hash(b));
  CHECK(canonical_state(a) == canonical_state(b));
  CHECK(state_hash(a) != state_hash(new_game(cfg, 8)));
  CHECK(a.ship.pos == TorusPoint{2.0, 2.0});
  CHECK(a.ship.heading == 0.0);
  CHECK(a.ship.alive);
  CHECK(a.tick == 0);

  const GameState one = new_game(cfg, 1);
  CHECK(one.asteroids.size() == 5);
  for (const Asteroid& ast : one.asteroids) {
    CHECK(oracle::torus_distance(ast.pos.u, ast.pos.v, 2.0, 2.0, 4.0) >= 1.0);
    CHECK(ast.radius == cfg.asteroid_radius);
    CHECK(ast.vel.norm() <= cfg.asteroid_speed);
    CHECK(canonical(ast.pos, 4.0));
  }

  CHECK(empty_state().asteroids.empty());

  GameConfig crowded;
  crowded.spawn_clearance = 3.0;  // exceeds the largest torus distance 2 sqrt 2
  CHECK_THROWS_AS(new_game(crowded, 1), ConfigError);
  GameConfig bad;
  bad.thrust = -1.0;
  CHECK_THROWS_AS(new_game(bad, 1), ConfigError);
  bad = GameConfig{};
  bad.dt = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("ship wraps horizontally at the same height") {
  const GameConfig cfg;
  GameState s = empty_state();
  s.ship.pos = {3.95, 2.0};
  s.ship.vel = {0.1 / cfg.dt, 0.0};
  const GameState next = tick(cfg, s, {});
  CHECK(next.ship.pos.u == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(next.ship.pos.v == 2.0);
  CHECK(next.tick == 1);
}

TEST_CASE("collision uses the minimal image") {
  const FlatTorus t(4.0);
  CHECK(collides({0.1, 0.0}, 0.0, {3.9, 0.0}, 0.3, t));
  CHECK_FALSE(collides({0.1, 0.0}, 0.0, {3.5, 0.0}, 0.3, t));

  const GameConfig cfg;
  GameState s = empty_state();
  s.ship.pos = {2.0, 2.0};
  s.bullets.push_back({s.next_id++, {0.1, 0.0}, {0.0, 0.0}, 1.0});
  s.asteroids.push_back({s.next_id++, {3.9, 0.0}, {0.0, 0.2}, 0.3});
  const GameState next = tick(cfg, s, {});
  CHECK(next.bullets.empty());
  REQUIRE(next.asteroids.size() == 2);
  for (const Asteroid& a : next.asteroids) {
    CHECK(a.radius == doctest::Approx(0.15));
    CHECK(std::fabs(a.vel.du * 0.0 + a.vel.dv * 0.2) <= 1e-15);  // perpendicular to the parent
    CHECK(a.id > s.asteroids[0].id);
  }
  CHECK(next.asteroids[0].vel.du == -next.asteroids[1].vel.du);
  CHECK(next.rng != s.rng);
}

TEST_CASE("small asteroids are destroyed without splitting") {
  const GameConfig cfg;
  GameState s = empty_state();
  s.bullets.push_back({s.next_id++, {1.0, 1.0}, {0.0, 0.0}, 1.0});
  s.asteroids.push_back({s.next_id++, {1.05, 1.0}, {0.0, 0.0}, 0.15});
  const GameState next = tick(cfg, s, {});
  CHECK(next.asteroids.empty());
  CHECK(next.bullets.empty());
  CHECK(next.rng == s.rng);
}

TEST_CASE("ship dies on contact") {
  const GameConfig cfg;
  GameState s = empty_state();
  s.asteroids.push_back({s.next_id++, {2.3, 2.0}, {0.0, 0.0}, 0.25});
  const GameState next = tick(cfg, s, {});
  CHECK_FALSE(next.ship.alive);
  const GameState later = tick(cfg, next, {1, true, true});
  CHECK(later.ship.heading == next.ship.heading);
  CHECK(later.bullets.empty());
}

TEST_CASE("controls: turn, thrust and fire") {
  const GameConfig cfg;
  const GameState s = empty_state();
  const GameState turned = tick(cfg, s, {1, false, false});
  CHECK(turned.ship.heading == doctest::Approx(M_PI * cfg.dt).epsilon(1e-15));
  const GameState back = tick(cfg, s, {-1, false, false});
  CHECK(back.ship.heading == doctest::Approx(2.0 * M_PI - M_PI * cfg.dt).epsilon(1e-15));
  const GameState pushed = tick(cfg, s, {0, true, false});
  CHECK(pushed.ship.vel.du == doctest::Approx(cfg.thrust * cfg.dt));
  CHECK(state_hash(pushed) != state_hash(tick(cfg, s, {})));

  GameState fired = tick(cfg, s, {0, false, true});
  REQUIRE(fired.bullets.size() == 1);
  CHECK(fired.bullets[0].vel.du == cfg.bullet_speed);
  for (int i = 1; i < 59; ++i) fired = tick(cfg, fired, {});
  CHECK(fired.bullets.size() == 1);
  fired = tick(cfg, fired, {});
  CHECK(fired.bullets.empty());
}

TEST_CASE("free motion is geodesic and exact") {
  const GameConfig cfg;
  GameConfig quiet = cfg;
  quiet.asteroid_radius = 0.01;
  quiet.ship_radius = 0.01;
  GameState s = new_game(quiet, 3);
  for (int i = 0; i < 100; ++i) {
    const GameState next = tick(quiet, s, {});
    if (next.asteroids.size() != s.asteroids.size()) break;
    for (std::size_t k = 0; k < s.asteroids.size(); ++k) {
      CHECK(next.asteroids[k].vel == s.asteroids[k].vel);
      CHECK(next.asteroids[k].pos == advance(s.asteroids[k].pos, s.asteroids[k].vel, quiet.dt, quiet.torus()));
    }
    CHECK(next.ship.pos == advance(s.ship.pos, s.ship.vel, quiet.dt, quiet.torus()));
    s = next;
  }
}

TEST_CASE("collision predicate is symmetric") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> x(0.0, 4.0);
  std::uniform_real_distribution<double> r(0.0, 1.0);
  const FlatTorus t(4.0);
  for (int i = 0; i < 10000; ++i) {
    const TorusPoint a = canonicalize(x(rng), x(rng), t);
    const TorusPoint b = canonicalize(x(rng), x(rng), t);
    const double ra = r(rng);
    const double rb = r(rng);
    CHECK(collides(a, ra, b, rb, t) == collides(b, rb, a, ra, t));
  }
}

TEST_CASE("long random play keeps every position canonical and ids increasing") {
  const GameConfig cfg;
  GameState s = new_game(cfg, 99);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const InputFrame in{static_cast<int>(rng() % 3) - 1, rng() % 2 == 0, rng() % 10 == 0};
    s = tick(cfg, s, in);
    REQUIRE(canonical(s.ship.pos, 4.0));
    std::uint64_t last = 0;
    for (const Asteroid& a : s.asteroids) {
      REQUIRE(canonical(a.pos, 4.0));
      REQUIRE(a.id > last);
      last = a.id;
    }
    last = 0;
    for (const Bullet& b : s.bullets) {
      REQUIRE(canonical(b.pos, 4.0));
      REQUIRE(b.id > last);
      REQUIRE(b.id < s.next_id);
      last = b.id;
    }
    REQUIRE(s.ship.heading >= 0.0);
    REQUIRE(s.ship.heading < 2.0 * M_PI);
  }
  CHECK(s.tick == 10000);
}

TEST_CASE("canonical state text") {
  GameState s = empty_state();
  s.ship.vel = {-0.0000001, 0.0};
  s.bullets.push_back({4, {0.5, 0.25}, {1.0, -2.0}, 0.5});
  const std::string text = canonical_state(s);
  CHECK(text ==
        "{\"tick\":0,\"rng\":\"1\",\"next_id\":1,\"ship\":{\"id\":0,\"u\":2.000000,\"v\":2.000000,\"du\":0.000000,"
        "\"dv\":0.000000,\"heading\":0.000000,\"alive\":true},\"asteroids\":[],\"bullets\":[{\"id\":4,\"u\":0.500000,"
        "\"v\":0.250000,\"du\":1.000000,\"dv\":-2.000000,\"ttl\":0.500000}]}");
  CHECK(state_hash(s) == fnv1a64(text));
}

TEST_CASE("input scripts") {
  std::istringstream ok("# header\n\n3 1 0 1   # trailing comment\n  10 -1 1 0\n");
  const InputScript script = parse_input_script(ok);
  REQUIRE(script.size() == 2);
  CHECK(script.at(3).turn == 1);
  CHECK(script.at(3).fire);
  CHECK_FALSE(script.at(3).thrust);
  CHECK(script.at(10).turn == -1);
  CHECK(script.at(10).thrust);

  for (const char* bad : {"1 2 0 0\n", "1 0 0\n", "x 0 0 0\n", "1 0 0 0 0\n", "-1 0 0 0\n", "1 0 0 0\n1 1 1 1\n",
                          "1 0 2 0\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(parse_input_script(in), InvalidArgument);
  }
}

TEST_CASE("600-tick scripted replay is deterministic and matches the golden hash") {
  const GameConfig cfg;
  const InputScript script = load_script();
  const GameState a = run_script(cfg, golden::kAsteroidsSeed, script, 600);
  const GameState b = run_script(cfg, golden::kAsteroidsSeed, script, 600);
  CHECK(a.tick == 600);
  CHECK(state_hash(a) == state_hash(b));
  CHECK(canonical_state(a) == canonical_state(b));
  CHECK(state_hash(a) == golden::kAsteroids600);
}
