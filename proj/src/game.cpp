#include "flattorus/game.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <sstream>

#include "flattorus/errors.hpp"

namespace flattorus::game {

void GameConfig::validate() const {
  const double positives[] = {side,          turn_rate_deg,  thrust,      bullet_speed, bullet_ttl,     asteroid_radius,
                              min_asteroid_radius, asteroid_speed, ship_radius, spawn_clearance, dt};
  for (double x : positives) {
    if (!std::isfinite(x) || x <= 0.0) throw ConfigError("game config values must be finite and positive");
  }
  if (asteroid_count < 0) throw ConfigError("asteroid_count must be >= 0");
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace

GameState new_game(const GameConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const FlatTorus torus = cfg.torus();
  GameState s;
  s.ship = Ship{0, {torus.half(), torus.half()}, {0.0, 0.0}, 0.0, true};
  SplitMix64 rng(seed);
  for (int i = 0; i < cfg.asteroid_count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      const TorusPoint p = canonicalize(rng.unit() * cfg.side, rng.unit() * cfg.side, torus);
      if (torus_distance(p, s.ship.pos, torus) < cfg.spawn_clearance) continue;
      const double heading = rng.unit() * kTwoPi;
      const double speed = cfg.asteroid_speed * (0.5 + 0.5 * rng.unit());
      s.asteroids.push_back(
          Asteroid{s.next_id++, p, {speed * std::cos(heading), speed * std::sin(heading)}, cfg.asteroid_radius});
      placed = true;
    }
    if (!placed) throw ConfigError("could not place asteroid clear of the ship after 1000 samples");
  }
  s.rng = rng.state();
  return s;
}

bool collides(TorusPoint a, double ra, TorusPoint b, double rb, const FlatTorus& torus) {
  return torus_distance(a, b, torus) < ra + rb;
}

GameState tick(const GameConfig& cfg, const GameState& state, const InputFrame& input) {
  const FlatTorus torus = cfg.torus();
  const double dt = cfg.dt;
  GameState next = state;
  Ship& ship = next.ship;

  if (ship.alive) {
    ship.heading = wrap_angle(ship.heading + input.turn * (cfg.turn_rate_deg * std::numbers::pi / 180.0) * dt);
    const double hx = std::cos(ship.heading);
    const double hy = std::sin(ship.heading);
    if (input.thrust) {
      ship.vel.du += hx * cfg.thrust * dt;
      ship.vel.dv += hy * cfg.thrust * dt;
    }
    if (input.fire) {
      next.bullets.push_back(Bullet{next.next_id++, ship.pos,
                                    {ship.vel.du + hx * cfg.bullet_speed, ship.vel.dv + hy * cfg.bullet_speed},
                                    cfg.bullet_ttl});
    }
    ship.pos = advance(ship.pos, ship.vel, dt, torus);
  }
  for (Asteroid& a : next.asteroids) a.pos = advance(a.pos, a.vel, dt, torus);

  std::vector<Bullet> live;
  for (Bullet b : next.bullets) {
    b.pos = advance(b.pos, b.vel, dt, torus);
    b.ttl -= dt;
    if (b.ttl > 1e-9) live.push_back(b);
  }

  SplitMix64 rng(next.rng);
  std::vector<bool> destroyed(next.asteroids.size(), false);
  std::vector<Asteroid> fragments;
  std::vector<Bullet> surviving;
  for (const Bullet& b : live) {
    bool hit = false;
    for (std::size_t i = 0; i < next.asteroids.size() && !hit; ++i) {
      if (destroyed[i]) continue;
      const Asteroid& a = next.asteroids[i];
      if (!collides(b.pos, 0.0, a.pos, a.radius, torus)) continue;
      hit = true;
      destroyed[i] = true;
      if (a.radius >= 2.0 * cfg.min_asteroid_radius) {
        const double jitter = rng.unit();
        const double speed = a.vel.norm();
        TorusVector perp;
        if (speed > 0.0) {
          perp = {-a.vel.dv / speed, a.vel.du / speed};
        } else {
          perp = {std::cos(jitter * kTwoPi), std::sin(jitter * kTwoPi)};
        }
        const double child_speed = std::max(speed, 0.5 * cfg.asteroid_speed) * (1.0 + 0.5 * jitter);
        const double r = 0.5 * a.radius;
        fragments.push_back(Asteroid{0, a.pos, {perp.du * child_speed, perp.dv * child_speed}, r});
        fragments.push_back(Asteroid{0, a.pos, {-perp.du * child_speed, -perp.dv * child_speed}, r});
      }
    }
    if (!hit) surviving.push_back(b);
  }
  next.bullets = std::move(surviving);

  std::vector<Asteroid> remaining;
  for (std::size_t i = 0; i < next.asteroids.size(); ++i) {
    if (!destroyed[i]) remaining.push_back(next.asteroids[i]);
  }
  for (Asteroid& f : fragments) {
    f.id = next.next_id++;
    remaining.push_back(f);
  }
  next.asteroids = std::move(remaining);
  next.rng = rng.state();

  if (ship.alive) {
    for (const Asteroid& a : next.asteroids) {
      if (collides(ship.pos, cfg.ship_radius, a.pos, a.radius, torus)) {
        ship.alive = false;
        break;
      }
    }
  }
  ++next.tick;
  return next;
}

namespace {

void put_number(std::string& out, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  if (std::string_view(buf) == "-0.000000") {
    out += "0.000000";
  } else {
    out += buf;
  }
}

void put_field(std::string& out, const char* key, double x) {
  out += '"';
  out += key;
  out += "\":";
  put_number(out, x);
}

void put_motion(std::string& out, std::uint64_t id, TorusPoint p, TorusVector v) {
  out += "\"id\":" + std::to_string(id) + ",";
  put_field(out, "u", p.u);
  out += ',';
  put_field(out, "v", p.v);
  out += ',';
  put_field(out, "du", v.du);
  out += ',';
  put_field(out, "dv", v.dv);
}

}  // namespace

std::string canonical_state(const GameState& s) {
  std::string out = "{\"tick\":" + std::to_string(s.tick) + ",\"rng\":\"" + std::to_string(s.rng) +
                    "\",\"next_id\":" + std::to_string(s.next_id) + ",\"ship\":{";
  put_motion(out, s.ship.id, s.ship.pos, s.ship.vel);
  out += ',';
  put_field(out, "heading", s.ship.heading);
  out += s.ship.alive ? ",\"alive\":true}" : ",\"alive\":false}";
  out += ",\"asteroids\":[";
  for (std::size_t i = 0; i < s.asteroids.size(); ++i) {
    if (i) out += ',';
    out += '{';
    put_motion(out, s.asteroids[i].id, s.asteroids[i].pos, s.asteroids[i].vel);
    out += ',';
    put_field(out, "radius", s.asteroids[i].radius);
    out += '}';
  }
  out += "],\"bullets\":[";
  for (std::size_t i = 0; i < s.bullets.size(); ++i) {
    if (i) out += ',';
    out += '{';
    put_motion(out, s.bullets[i].id, s.bullets[i].pos, s.bullets[i].vel);
    out += ',';
    put_field(out, "ttl", s.bullets[i].ttl);
    out += '}';
  }
  out += "]}";
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t state_hash(const GameState& state) { return fnv1a64(canonical_state(state)); }

InputScript parse_input_script(std::istream& in) {
  InputScript script;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long index = 0;
    int turn = 0;
    int thrust = 0;
    int fire = 0;
    if (!(fields >> index)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InvalidArgument("input script line " + std::to_string(line_no) + ": expected tick index");
    }
    std::string extra;
    if (!(fields >> turn >> thrust >> fire) || (fields >> extra)) {
      throw InvalidArgument("input script line " + std::to_string(line_no) + ": expected 'tick turn thrust fire'");
    }
    if (index < 0 || turn < -1 || turn > 1 || thrust < 0 || thrust > 1 || fire < 0 || fire > 1) {
      throw InvalidArgument("input script line " + std::to_string(line_no) + ": value out of range");
    }
    if (!script.emplace(static_cast<std::uint64_t>(index), InputFrame{turn, thrust == 1, fire == 1}).second) {
      throw InvalidArgument("input script line " + std::to_string(line_no) + ": duplicate tick index");
    }
  }
  return script;
}

GameState run_script(const GameConfig& cfg, std::uint64_t seed, const InputScript& script, std::uint64_t ticks,
                     const std::function<void(const GameState&)>& on_tick) {
  GameState s = new_game(cfg, seed);
  for (std::uint64_t i = 0; i < ticks; ++i) {
    const auto it = script.find(s.tick);
    s = tick(cfg, s, it == script.end() ? InputFrame{} : it->second);
    if (on_tick) on_tick(s);
  }
  return s;
}

}  // namespace flattorus::game
