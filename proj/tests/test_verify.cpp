#include <doctest.h>

#include "cm/connected_matching.hpp"
#include "cm/geom.hpp"
#include "cm/instances.hpp"
#include "cm/separator.hpp"
#include "cm/verify.hpp"

using namespace cm;

namespace {

PointSet square() {
  PointSet ps;
  ps.points = {{0, 0}, {10, 0}, {10, 10}, {0, 11}, {20, 3}, {21, 30}};
  return ps;
}

Matching edges(std::vector<Segment> e) {
  Matching m;
  m.edges = std::move(e);
  return m;
}

}  // namespace

TEST_CASE("is_matching") {
  const auto ps = square();
  CHECK(is_matching(ps, {}));
  CHECK_FALSE(is_matching(ps, edges({{0, 1}, {1, 2}})));
  CHECK(is_matching(ps, edges({{0, 1}, {2, 3}})));
  CHECK_FALSE(is_matching(ps, edges({{0, 0}})));
  CHECK_FALSE(is_matching(ps, edges({{0, 9}})));
}

TEST_CASE("is_connected") {
  const auto ps = square();
  CHECK(is_connected(ps, {}));
  CHECK(is_connected(ps, edges({{0, 1}})));
  CHECK_FALSE(is_connected(ps, edges({{0, 1}, {3, 2}})));  // two disjoint sides
  CHECK(is_connected(ps, edges({{0, 2}, {1, 3}})));         // the diagonals
  // A chain: 4-5 does not touch the diagonals, 0-4 would tie it in.
  CHECK_FALSE(is_connected(ps, edges({{0, 2}, {1, 3}, {4, 5}})));
  const auto oct = polygon_with_center(9, 0);
  CHECK(is_connected(oct, antipodal_connected_matching(convex_hull(oct))));
}

TEST_CASE("is_polychromatic") {
  auto ps = square();
  CHECK_FALSE(is_polychromatic(ps, edges({{0, 1}})));
  CHECK(is_polychromatic(ps, {}));
  ps.num_colors = 3;
  ps.colors = {0, 1, 2, 2, 0, 1};
  CHECK(is_polychromatic(ps, edges({{0, 1}})));
  CHECK_FALSE(is_polychromatic(ps, edges({{2, 3}})));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto col = random_balanced_coloring(random_general_position(80, seed), 2 + seed % 5, seed);
    CHECK(is_polychromatic(col, connected_matching_colored(col, seed).matching));
  }
}

TEST_CASE("describe_matching_problem names the offending indices") {
  auto ps = square();
  CHECK(describe_matching_problem(ps, edges({{0, 2}, {1, 3}}), false).empty());
  const auto shared = describe_matching_problem(ps, edges({{0, 1}, {1, 2}}), false);
  CHECK(shared.find("point 1") != std::string::npos);
  CHECK(describe_matching_problem(ps, edges({{0, 1}, {3, 2}}), false).find("connected") !=
        std::string::npos);
  ps.num_colors = 2;
  ps.colors = {0, 0, 1, 1, 0, 1};
  CHECK(describe_matching_problem(ps, edges({{0, 1}}), true).find("(0,1)") != std::string::npos);
  CHECK(describe_matching_problem(ps, edges({{0, 2}}), true).empty());
}

TEST_CASE("check_separator") {
  const auto ps = random_general_position(10, 1);
  const auto s = separating_path(ps);
  CHECK(check_separator(ps, s, 2));
  CHECK_FALSE(check_separator(ps, s, 10));

  // Move one point from side B to side A: some A-B segment now avoids the path.
  bool caught = false;
  for (std::uint64_t seed = 0; seed < 20 && !caught; ++seed) {
    const auto q = random_general_position(20, seed);
    auto t = separating_path(q);
    if (t.sideB.empty()) continue;
    t.sideA.push_back(t.sideB.back());
    t.sideB.pop_back();
    caught = !check_separator(q, t, 0, true);
  }
  CHECK(caught);

  // Missing or duplicated points.
  auto dup = s;
  dup.sideA.push_back(dup.sideB.front());
  CHECK_FALSE(check_separator(ps, dup, 0, true));
  auto lost = s;
  lost.sideA.pop_back();
  CHECK_FALSE(check_separator(ps, lost, 0, true));

  // A polychromatic flag over a monochromatic path edge.
  auto col = random_balanced_coloring(ps, 2, 0);
  auto flagged = s;
  flagged.polychromatic = true;
  col.colors[s.path[0]] = 0;
  col.colors[s.path[1]] = 0;
  CHECK_FALSE(check_separator(col, flagged, 0, true));
}

TEST_CASE("check_bound_report") {
  BoundReport r;
  r.n = 27;
  r.theorem = Theorem::Uncolored;
  r.guaranteed = Rational(136, 27);
  r.achieved = 6;
  CHECK(check_bound_report(r));
  r.achieved = 5;
  CHECK_FALSE(check_bound_report(r));
  r.guaranteed = Rational(5);  // wrong formula value
  r.achieved = 6;
  CHECK_FALSE(check_bound_report(r));

  BoundReport c;
  c.n = 420;
  c.c = 10;
  c.theorem = Theorem::Colored1;
  c.guaranteed = Rational(7 * 420, 60) - Rational(1, 2);
  c.achieved = 49;
  CHECK(check_bound_report(c));
  c.achieved = 48;
  CHECK_FALSE(check_bound_report(c));
  c.applies = false;  // below the theorem's range only the formula is checked
  CHECK(check_bound_report(c));
}
