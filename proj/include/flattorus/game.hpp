#pragma once

// Deterministic Asteroids on the flat square torus, advanced in fixed ticks.
//
// Tick order: steer and thrust the ship, fire, move every entity along its
// geodesic, age bullets, resolve bullet/asteroid hits (bullets and asteroids
// in id order, first hit wins), resolve ship/asteroid contact, bump the tick.
// RNG draws happen only in new_game and when an asteroid splits.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flattorus/torus.hpp"

namespace flattorus::game {

struct GameConfig {
  double side = 4.0;
  double turn_rate_deg = 180.0;     // deg/s
  double thrust = 2.0;              // units/s^2
  double bullet_speed = 3.0;        // units/s, added to ship velocity
  double bullet_ttl = 1.0;          // s
  int asteroid_count = 5;
  double asteroid_radius = 0.4;     // units
  double min_asteroid_radius = 0.1; // asteroids at >= 2x this split when hit
  double asteroid_speed = 0.5;      // units/s, upper bound at spawn
  double ship_radius = 0.1;
  double spawn_clearance = 1.0;     // min distance asteroid-ship at spawn
  double dt = 1.0 / 60.0;

  /// Throws ConfigError unless every quantity is positive (count may be 0).
  void validate() const;
  FlatTorus torus() const { return FlatTorus{side}; }
};

struct Ship {
  std::uint64_t id = 0;
  TorusPoint pos;
  TorusVector vel;
  double heading = 0.0;  // radians in [0, 2 pi)
  bool alive = true;
};

struct Asteroid {
  std::uint64_t id = 0;
  TorusPoint pos;
  TorusVector vel;
  double radius = 0.0;
};

struct Bullet {
  std::uint64_t id = 0;
  TorusPoint pos;
  TorusVector vel;
  double ttl = 0.0;  // s
};

struct InputFrame {
  int turn = 0;  // -1, 0, +1 (counter-clockwise positive)
  bool thrust = false;
  bool fire = false;
};

struct GameState {
  std::uint64_t tick = 0;
  Ship ship;
  std::vector<Asteroid> asteroids;
  std::vector<Bullet> bullets;
  std::uint64_t rng = 0;
  std::uint64_t next_id = 1;
};

/// splitmix64; the state is the 64-bit counter stored in GameState::rng.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();
  double unit();  // [0, 1) with 53 random bits
  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// Ship at the centre heading 0; asteroids placed by rejection sampling at
/// least spawn_clearance away from the ship. Throws ConfigError after 1000
/// failed placements of one asteroid.
GameState new_game(const GameConfig& cfg, std::uint64_t seed);

GameState tick(const GameConfig& cfg, const GameState& state, const InputFrame& input);

/// Circle overlap under the minimal-image metric; symmetric in its arguments.
bool collides(TorusPoint a, double ra, TorusPoint b, double rb, const FlatTorus& torus);

/// Canonical JSON form (fixed 6-decimal numbers, entities in id order).
std::string canonical_state(const GameState& state);

std::uint64_t fnv1a64(std::string_view bytes);

/// FNV-1a 64 of canonical_state.
std::uint64_t state_hash(const GameState& state);

using InputScript = std::map<std::uint64_t, InputFrame>;

/// Lines `tick_index turn thrust fire`; '#' starts a comment. Ticks without a
/// line get a neutral input. Throws InvalidArgument with the line number on bad input.
InputScript parse_input_script(std::istream& in);

/// Runs `ticks` ticks from new_game(cfg, seed); `on_tick` sees every state after its tick.
GameState run_script(const GameConfig& cfg, std::uint64_t seed, const InputScript& script, std::uint64_t ticks,
                     const std::function<void(const GameState&)>& on_tick = {});

}  // namespace flattorus::game
