#include <cmath>
#include <random>

#include "doctest.h"
#include "flattorus/errors.hpp"
#include "flattorus/torus.hpp"
#include "support/oracles.hpp"

using namespace flattorus;

namespace {
const FlatTorus kT{4.0};
}

TEST_CASE("canonicalize wraps into the half-open square") {
  CHECK(canonicalize(5, -1, kT) == TorusPoint{1, 3});
  CHECK(canonicalize(0, 0, kT) == TorusPoint{0, 0});
  CHECK(canonicalize(4, 4, kT) == TorusPoint{0, 0});
  CHECK_FALSE(std::signbit(canonicalize(-0.0, -8.0, kT).u));
  CHECK_FALSE(std::signbit(canonicalize(-0.0, -8.0, kT).v));
  const TorusPoint tiny = canonicalize(-1e-18, 0, kT);
  CHECK(tiny.u >= 0.0);
  CHECK(tiny.u < 4.0);
  CHECK_THROWS_AS(canonicalize(NAN, 0, kT), InvalidArgument);
  CHECK_THROWS_AS(canonicalize(0, INFINITY, kT), InvalidArgument);
  CHECK_THROWS_AS(FlatTorus(0.0), InvalidArgument);
  CHECK_THROWS_AS(FlatTorus(-1.0), InvalidArgument);
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-50.0, 50.0);
  for (int i = 0; i < 10000; ++i) {
    const TorusPoint p = canonicalize(x(rng), x(rng), kT);
    CHECK(canonicalize(p.u, p.v, kT) == p);
  }
}

TEST_CASE("minimal displacement examples") {
  const TorusVector d1 = minimal_displacement({0, 0}, {3, 0}, kT);
  CHECK(d1 == TorusVector{-1, 0});
  CHECK(torus_distance({0, 0}, {3, 0}, kT) == 1.0);

  const TorusVector d2 = minimal_displacement({0.5, 0.5}, {3.5, 3.5}, kT);
  CHECK(d2 == TorusVector{-1, -1});
  CHECK(torus_distance({0.5, 0.5}, {3.5, 3.5}, kT) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  // Four tied candidates; lexicographically smallest offset (-1, -1) wins.
  const TorusVector d3 = minimal_displacement({0, 0}, {2, 2}, kT);
  CHECK(d3 == TorusVector{-2, -2});
  CHECK(d3.norm() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  int ties = 0;
  for (int k = -1; k <= 1; ++k) {
    for (int l = -1; l <= 1; ++l) {
      if (std::hypot(2.0 + 4.0 * k, 2.0 + 4.0 * l) == std::hypot(2.0, 2.0)) ++ties;
    }
  }
  CHECK(ties == 4);
}

TEST_CASE("distance properties on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> x(0.0, 4.0);
  const double bound = 2.0 * std::sqrt(2.0);
  for (int i = 0; i < 10000; ++i) {
    const TorusPoint a = canonicalize(x(rng), x(rng), kT);
    const TorusPoint b = canonicalize(x(rng), x(rng), kT);
    const TorusPoint c = canonicalize(x(rng), x(rng), kT);
    const double ab = torus_distance(a, b, kT);
    CHECK(ab == torus_distance(b, a, kT));
    CHECK(ab <= torus_distance(a, c, kT) + torus_distance(c, b, kT) + 1e-12);
    CHECK(ab <= bound + 1e-15);
    CHECK(std::fabs(ab - oracle::torus_distance(a.u, a.v, b.u, b.v, 4.0)) <= 1e-12);
    const double tu = x(rng);
    const double tv = x(rng);
    const double shifted =
        torus_distance(canonicalize(a.u + tu, a.v + tv, kT), canonicalize(b.u + tu, b.v + tv, kT), kT);
    CHECK(std::fabs(shifted - ab) <= 1e-12);
  }
  CHECK(torus_distance({0, 0}, {2, 2}, kT) == doctest::Approx(bound).epsilon(1e-15));
}

TEST_CASE("geodesic segment splits at the wrap") {
  const TorusPolyline g = geodesic_segment({0.5, 1}, {3.5, 1}, kT);
  REQUIRE(g.pieces.size() == 2);
  CHECK(g.pieces[0].start == Point2{0.5, 1});
  CHECK(g.pieces[0].end == Point2{0, 1});
  CHECK(g.pieces[0].wraps_u);
  CHECK_FALSE(g.pieces[0].wraps_v);
  CHECK(g.pieces[1].start == Point2{4, 1});
  CHECK(g.pieces[1].end == Point2{3.5, 1});
  CHECK(g.length == doctest::Approx(1.0).epsilon(1e-15));

  const TorusPolyline diag = geodesic_segment({0, 0}, {2, 2}, kT);
  CHECK(diag.pieces.size() == 1);
  CHECK(diag.length == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));

  const TorusPolyline same = geodesic_segment({1, 1}, {1, 1}, kT);
  CHECK(same.pieces.size() == 1);
  CHECK(same.length == 0.0);
}

TEST_CASE("closed loops trace the full period") {
  const TorusPolyline equator = trace_geodesic({0, 1}, {4, 0}, kT);
  CHECK(equator.length == 4.0);
  const TorusPolyline loop = trace_geodesic({0.3, 1}, {4, 0}, kT);
  REQUIRE(loop.pieces.size() == 2);
  CHECK(loop.pieces.back().end.u == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(loop.pieces.back().end.v == 1.0);
  const TorusPolyline diag = trace_geodesic({0, 0}, {4, 4}, kT);
  CHECK(diag.length == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("geodesic pieces stay in the closed square and chain across seams") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(0.0, 4.0);
  std::uniform_real_distribution<double> big(-13.0, 13.0);
  for (int i = 0; i < 10000; ++i) {
    const TorusPoint a = canonicalize(x(rng), x(rng), kT);
    const TorusPoint b = canonicalize(x(rng), x(rng), kT);
    const TorusPolyline g = geodesic_segment(a, b, kT);
    const double expected = minimal_displacement(a, b, kT).norm();
    double sum = 0.0;
    for (const PolylinePiece& p : g.pieces) sum += p.length();
    CHECK(std::fabs(g.length - expected) <= 1e-12 * std::max(1.0, expected));
    CHECK(std::fabs(sum - g.length) <= 1e-12 * std::max(1.0, expected));

    const TorusPolyline w = trace_geodesic(a, {big(rng), big(rng)}, kT);
    for (std::size_t k = 0; k < w.pieces.size(); ++k) {
      const PolylinePiece& p = w.pieces[k];
      for (Point2 q : {p.start, p.end}) {
        CHECK(q.u >= -1e-12);
        CHECK(q.u <= 4.0 + 1e-12);
        CHECK(q.v >= -1e-12);
        CHECK(q.v <= 4.0 + 1e-12);
      }
      if (k + 1 < w.pieces.size()) {
        CHECK((p.wraps_u || p.wraps_v));
        const TorusPoint end = canonicalize(p.end, kT);
        const TorusPoint next = canonicalize(w.pieces[k + 1].start, kT);
        CHECK(torus_distance(end, next, kT) <= 1e-12);
      }
    }
  }
}

TEST_CASE("equal-v geodesics follow the edge line") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> x(0.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = x(rng);
    const TorusPoint a = canonicalize(x(rng), v, kT);
    const TorusPoint b = canonicalize(x(rng), v, kT);
    const TorusPolyline g = geodesic_segment(a, b, kT);
    for (const PolylinePiece& p : g.pieces) {
      CHECK(p.start.v == v);
      CHECK(p.end.v == v);
    }
    const double du = std::fabs(a.u - b.u);
    CHECK(g.length == doctest::Approx(std::min(du, 4.0 - du)).epsilon(1e-12));
  }
}

TEST_CASE("advance moves along straight lines and wraps") {
  const TorusPoint p = advance({3.9, 0}, {0.2, 0}, 1.0, kT);
  CHECK(p.u == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(p.v == 0.0);
  const TorusPoint q = advance({0, 3.95}, {0, 0.1}, 1.0, kT);
  CHECK(q.u == 0.0);
  CHECK(q.v == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(advance({1.25, 2.5}, {0, 0}, 3.0, kT) == TorusPoint{1.25, 2.5});
  CHECK_THROWS_AS(advance({1, 1}, {1, 1}, -0.1, kT), InvalidArgument);
}
