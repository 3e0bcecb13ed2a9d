#include <doctest.h>

#include <random>

#include "cm/geom.hpp"
#include "cm/instances.hpp"
#include "cm/separator.hpp"
#include "cm/verify.hpp"
#include "oracles.hpp"

using namespace cm;

namespace {

long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// Triangle (0,0), (S,0), (0,S) with m random points strictly inside.
PointSet random_triangle(std::size_t m, std::mt19937_64& rng, Coord S = 1000000) {
  PointSet ps;
  ps.points = {{0, 0}, {S, 0}, {0, S}};
  std::uniform_int_distribution<Coord> d(1, S - 2);
  while (ps.size() < m + 3) {
    const Point p{d(rng), d(rng)};
    if (p.x + p.y >= S) continue;
    bool ok = true;
    for (Index i = 0; i < ps.size() && ok; ++i)
      for (Index j = i + 1; j < ps.size() && ok; ++j)
        if (oracle::det(ps[i], ps[j], p) == 0 || ps[i] == p) ok = false;
    if (ok) ps.points.push_back(p);
  }
  return ps;
}

std::vector<Index> interior_of(const PointSet& ps) {
  std::vector<Index> v;
  for (Index i = 3; i < ps.size(); ++i) v.push_back(i);
  return v;
}

// Every q satisfies all three subtriangle bounds, recounted from scratch.
void check_split(const PointSet& ps, const TriangleSplitRequest& req, const std::vector<Index>& q) {
  const auto m = static_cast<long long>(req.interior.size());
  const long long l = req.weights[0] + req.weights[1] + req.weights[2];
  CHECK(static_cast<long long>(q.size()) >= l - 2 * m + 3);
  const auto& v = req.vertices;
  for (Index x : q) {
    for (int i = 0; i < 3; ++i) {
      const Index prev = v[static_cast<std::size_t>((i + 2) % 3)];
      const Index next = v[static_cast<std::size_t>((i + 1) % 3)];
      CHECK(static_cast<long long>(oracle::count_inside(ps, prev, x, next, req.interior)) <=
            req.weights[static_cast<std::size_t>(i)]);
    }
  }
}

}  // namespace

TEST_CASE("split_triangle: generous weights keep every point") {
  std::mt19937_64 rng(1);
  const auto ps = random_triangle(4, rng);
  const TriangleSplitRequest req{{0, 1, 2}, interior_of(ps), {3, 3, 3}};
  const auto q = split_triangle(req, ps);
  CHECK(q == interior_of(ps));
  check_split(ps, req, q);
}

TEST_CASE("split_triangle: a lone point") {
  std::mt19937_64 rng(2);
  const auto ps = random_triangle(1, rng);
  const TriangleSplitRequest req{{0, 1, 2}, {3}, {0, 0, 0}};
  CHECK(split_triangle(req, ps) == std::vector<Index>{3});
}

TEST_CASE("split_triangle: random instances satisfy the bounds") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    const std::size_t m = 1 + rng() % 60;
    const auto ps = random_triangle(m, rng);
    const auto mm = static_cast<long long>(m);
    std::array<long long, 3> w{};
    do {
      for (auto& x : w) x = static_cast<long long>(rng() % m);
    } while (w[0] + w[1] + w[2] <= 2 * mm - 3);
    const TriangleSplitRequest req{{0, 1, 2}, interior_of(ps), w};
    check_split(ps, req, split_triangle(req, ps));
    // Same request with the triangle listed clockwise.
    const TriangleSplitRequest cw{{0, 2, 1}, interior_of(ps), w};
    check_split(ps, cw, split_triangle(cw, ps));
  }
  const auto ps = random_triangle(10, rng);
  const TriangleSplitRequest req{{0, 1, 2}, interior_of(ps), {6, 6, 6}};
  const auto q = split_triangle(req, ps);
  CHECK(q.size() >= 1);
  check_split(ps, req, q);
}

TEST_CASE("split_triangle rejects invalid requests") {
  std::mt19937_64 rng(4);
  const auto ps = random_triangle(5, rng);
  CHECK_THROWS_AS(split_triangle({{0, 1, 2}, interior_of(ps), {1, 1, 1}}, ps), PreconditionError);
  CHECK_THROWS_AS(split_triangle({{0, 1, 2}, interior_of(ps), {5, 4, 4}}, ps), PreconditionError);
  CHECK_THROWS_AS(split_triangle({{0, 1, 2}, {}, {0, 0, 0}}, ps), PreconditionError);
  CHECK_THROWS_AS(split_triangle({{3, 1, 2}, {0}, {0, 0, 0}}, ps), PreconditionError);
}

TEST_CASE("balanced split point") {
  std::mt19937_64 rng(5);
  for (std::size_t m : {1, 4, 100}) {
    const auto ps = random_triangle(m, rng);
    const auto in = interior_of(ps);
    const Index q = balanced_split_point(0, 1, 2, in, ps);
    const auto bound = static_cast<std::size_t>(ceil_div(2 * static_cast<long long>(m) - 2, 3));
    CHECK(oracle::count_inside(ps, 0, 1, q, in) <= bound);
    CHECK(oracle::count_inside(ps, 1, 2, q, in) <= bound);
    CHECK(oracle::count_inside(ps, 2, 0, q, in) <= bound);
  }
  const auto ps = random_triangle(1, rng);
  CHECK_THROWS_AS(balanced_split_point(0, 1, 2, {}, ps), PreconditionError);
}

TEST_CASE("separating path: small cases") {
  PointSet sq;
  sq.points = {{0, 0}, {10, 0}, {10, 10}, {0, 10}, {4, 6}};
  const auto s = separating_path(sq);
  CHECK(check_separator(sq, s, 1, true));
  CHECK(s.edge_count() >= 1);
  CHECK(s.edge_count() <= 2);
  for (std::size_t n = 2; n <= 4; ++n) {
    PointSet ps;
    ps.points.assign(sq.points.begin(), sq.points.begin() + static_cast<long>(n));
    if (n == 4) ps.points[3] = {3, 2};
    const auto t = separating_path(ps);
    CHECK(t.edge_count() == 1);
    CHECK(check_separator(ps, t, 0, true));
  }
  PointSet one;
  one.points = {{0, 0}};
  CHECK_THROWS_AS(separating_path(one), PreconditionError);
}

TEST_CASE("separating path: random sets, exhaustive crossing check") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 5 + rng() % 56;
    const auto ps = oracle::random_gp(n, rng, it % 2 ? 1000000 : 300);
    const auto s = separating_path(ps, static_cast<std::uint64_t>(it));
    const auto k = static_cast<std::size_t>(ceil_div(static_cast<long long>(n) - 4, 3));
    REQUIRE(check_separator(ps, s, k, true));
    CHECK(s.sideA.size() + s.sideB.size() + s.path.size() == n);
    CHECK(s.edge_count() <= 2);
    // endpoints extremal
    const auto h = oracle::hull(ps);
    CHECK(std::find(h.begin(), h.end(), s.path.front()) != h.end());
    CHECK(std::find(h.begin(), h.end(), s.path.back()) != h.end());
  }
}

TEST_CASE("separating path: structured sets and determinism") {
  for (std::size_t n : {7, 12, 30, 59}) {
    for (const auto& ps : {windmill_uncolored(n), convex_position(n, 3), polygon_with_center(n, 1)}) {
      const auto s = separating_path(ps);
      CHECK(check_separator(ps, s, static_cast<std::size_t>(ceil_div(static_cast<long long>(n) - 4, 3)),
                            true));
    }
  }
  const auto ps = random_general_position(200, 9);
  const auto a = separating_path(ps, 4);
  const auto b = separating_path(ps, 4);
  CHECK(a.path == b.path);
  CHECK(a.sideA == b.sideA);
}

TEST_CASE("colored separators: bounds and exhaustive crossing") {
  for (int c : {4, 5, 7, 10}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const std::size_t n = colored_threshold(c);
      const auto ps = random_balanced_coloring(random_general_position(n, seed), c, seed);
      const auto s = polychromatic_separating_path_c4(ps, true, seed);
      const auto k = ceil_div((c - 3) * static_cast<long long>(n) - 9 * c, 3 * c);
      CHECK(s.polychromatic);
      CHECK(s.edge_count() <= 2);
      CHECK(check_separator(ps, s, static_cast<std::size_t>(std::max(0LL, k)), true));
    }
  }
  for (int c : {2, 3, 5}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const std::size_t n = colored_threshold(c);
      const auto ps = random_balanced_coloring(random_general_position(n, seed), c, seed);
      const auto s = polychromatic_separator_3edges(ps, true, seed);
      const auto k = ceil_div((c - 1) * static_cast<long long>(n) - 12 * c, 3 * c);
      CHECK(s.polychromatic);
      CHECK(s.edge_count() <= 3);
      CHECK(check_separator(ps, s, static_cast<std::size_t>(std::max(0LL, k)), true));
    }
  }
}

TEST_CASE("colored separators at n = 400") {
  const auto base = random_general_position(400, 17);
  {
    const auto ps = random_balanced_coloring(base, 4, 1);
    const auto s = polychromatic_separating_path_c4(ps);
    CHECK(check_separator(ps, s, 31, false));
  }
  {
    // 400 < 60c here, so the threshold check is switched off.
    const auto ps = random_balanced_coloring(base, 10, 1);
    const auto s = polychromatic_separating_path_c4(ps, false);
    CHECK(check_separator(ps, s, 91, false));
  }
  {
    const auto ps = random_balanced_coloring(base, 2, 1);
    const auto s = polychromatic_separator_3edges(ps);
    CHECK(check_separator(ps, s, 63, false));
  }
  {
    const auto ps = random_balanced_coloring(base, 3, 1);
    const auto s = polychromatic_separator_3edges(ps);
    CHECK(check_separator(ps, s, 85, false));
  }
}

TEST_CASE("colored separators: small inputs stay valid when they succeed") {
  std::mt19937_64 rng(7);
  int built = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 8 + rng() % 50;
    const int c = 2 + static_cast<int>(rng() % 5);
    const auto ps = random_balanced_coloring(oracle::random_gp(n, rng, 100000), c, rng());
    try {
      const auto s = polychromatic_separator_3edges(ps, false, 0);
      CHECK(check_separator(ps, s, 0, true));
      CHECK(s.polychromatic);
      ++built;
    } catch (const ConstructionError&) {
    }
    if (c >= 4) {
      try {
        const auto s = polychromatic_separating_path_c4(ps, false, 0);
        CHECK(check_separator(ps, s, 0, true));
        CHECK(s.polychromatic);
      } catch (const ConstructionError&) {
      }
    }
  }
  CHECK(built > 100);
}

TEST_CASE("colored separators: preconditions") {
  const auto ps = random_general_position(300, 1);
  CHECK_THROWS_AS(polychromatic_separating_path_c4(random_balanced_coloring(ps, 3, 0)),
                  PreconditionError);
  CHECK_THROWS_AS(polychromatic_separator_3edges(ps), PreconditionError);
  CHECK_THROWS_AS(polychromatic_separator_3edges(random_balanced_coloring(ps, 1, 0)),
                  PreconditionError);
  // Below 60c with the threshold enforced.
  CHECK_THROWS_AS(polychromatic_separator_3edges(random_balanced_coloring(ps, 6, 0)),
                  PreconditionError);
  CHECK_NOTHROW(polychromatic_separator_3edges(random_balanced_coloring(ps, 5, 0)));
}
