#include <doctest.h>

#include <set>
#include <sstream>

#include "cm/connected_matching.hpp"
#include "cm/instances.hpp"
#include "cm/io.hpp"
#include "cm/separator.hpp"

using namespace cm;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t k = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++k;
  return k;
}

}  // namespace

TEST_CASE("points round trip") {
  for (int c : {0, 3}) {
    auto ps = random_general_position(25, 4);
    if (c) ps = random_balanced_coloring(ps, c, 1);
    std::stringstream s;
    write_points(s, ps);
    const auto back = read_points(s);
    CHECK(back.points == ps.points);
    CHECK(back.colors == ps.colors);
    CHECK(back.num_colors == ps.num_colors);
  }
}

TEST_CASE("points format details") {
  std::istringstream in("# comment\n3 2\n0 0 1\n\n5 -7 0\n# mid\n-3 9 1\n");
  const auto ps = read_points(in);
  CHECK(ps.size() == 3);
  CHECK(ps[1] == Point{5, -7});
  CHECK(ps.colors == std::vector<int>{1, 0, 1});
  const char* bad[] = {"",          "2 0\n1 1\n",       "2 0\n1 1\n2 2\n3 3\n", "1 2\n1 1 2\n",
                       "1 0\n1 x\n", "1 0\n1 1 1 1\n", "-1 0\n"};
  for (const char* text : bad) {
    std::istringstream b(text);
    CHECK_THROWS_AS(read_points(b), PreconditionError);
  }
  CHECK_THROWS_AS(read_points_file("/nonexistent/points.txt"), PreconditionError);
}

TEST_CASE("matching round trip") {
  const auto ps = random_general_position(40, 2);
  const auto m = connected_matching_uncolored(ps).matching;
  std::stringstream s;
  write_matching(s, m);
  CHECK(s.str().find("# size=" + std::to_string(m.size())) != std::string::npos);
  const auto back = read_matching(s);
  REQUIRE(back.size() == m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(back.edges[i].a == m.edges[i].a);
    CHECK(back.edges[i].b == m.edges[i].b);
  }
  std::istringstream bad("0 1\n2\n");
  CHECK_THROWS_AS(read_matching(bad), PreconditionError);
  std::istringstream neg("0 -1\n");
  CHECK_THROWS_AS(read_matching(neg), PreconditionError);
}

TEST_CASE("svg output") {
  const auto ps = random_general_position(12, 1);
  const auto plain = render_svg(ps, nullptr, nullptr);
  CHECK(count(plain, "<circle") == 12);
  CHECK(count(plain, "<line") == 0);
  CHECK(plain.find("viewBox") != std::string::npos);

  const auto m = connected_matching_uncolored(ps).matching;
  const auto sep = separating_path(ps);
  const auto drawn = render_svg(ps, &m, &sep);
  CHECK(count(drawn, "<line") == m.size());
  CHECK(count(drawn, "stroke-dasharray") == 1);

  const auto col = render_svg(random_balanced_coloring(ps, 3, 0), nullptr, nullptr);
  std::set<std::string> fills;
  for (auto p = col.find("fill=\"#"); p != std::string::npos; p = col.find("fill=\"#", p + 1))
    fills.insert(col.substr(p, 14));
  CHECK(fills.size() == 3);
}
