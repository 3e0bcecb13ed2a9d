#include "cm/instances.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <unordered_set>

#include "cm/geom.hpp"

namespace cm {

namespace {

constexpr std::size_t kWindmillCheckLimit = 60;

void require_coord_max(Coord coord_max) {
  if (coord_max < 1 || coord_max > kCoordLimit) {
    throw PreconditionError("coord_max must lie in [1, 2^30]");
  }
}

std::vector<std::size_t> blade_sizes(std::size_t n, int blades) {
  const auto b = static_cast<std::size_t>(blades);
  std::vector<std::size_t> sizes(b, n / b);
  for (std::size_t i = 0; i < n % b; ++i) ++sizes[i];
  return sizes;
}

// Blade i leaves the origin in direction pi/2 + rotation + 2 pi i / blades,
// from radius R/4 to R, bulging towards the previous blade by a parabola of
// height h.
PointSet blade_points(std::size_t n, int blades, Coord coord_max, double rotation) {
  const auto sizes = blade_sizes(n, blades);
  const double r1 = static_cast<double>(coord_max);
  const double r0 = 0.25 * r1;
  const double h = 0.05 * (r1 - r0);
  PointSet ps;
  for (int i = 0; i < blades; ++i) {
    const double theta = std::numbers::pi / 2 + rotation + 2 * std::numbers::pi * i / blades;
    const double dx = std::cos(theta), dy = std::sin(theta);
    const double nx = dy, ny = -dx;  // direction rotated by -90 degrees
    const std::size_t m = sizes[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < m; ++j) {
      const double s = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
      const double t = r0 + (r1 - r0) * s;
      const double off = 4 * h * s * (1 - s);
      ps.points.push_back({std::llround(t * dx + off * nx), std::llround(t * dy + off * ny)});
    }
  }
  return ps;
}

// Every two segments of different parts with disjoint endpoints are disjoint.
// part(s, t) < 0 means the segment is not considered.
bool parts_separate(const PointSet& ps, const std::function<int(Index, Index)>& part) {
  struct Part {
    Segment s;
    int id;
  };
  std::vector<Part> segs;
  for (Index s = 0; s < ps.size(); ++s) {
    for (Index t = s + 1; t < ps.size(); ++t) {
      const int id = part(s, t);
      if (id >= 0) segs.push_back({{s, t}, id});
    }
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& [s, p] = segs[i];
      const auto& [t, q] = segs[j];
      if (p == q || s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) continue;
      if (segments_cross(ps, s, t)) return false;
    }
  }
  return true;
}

bool windmill3_ok(const PointSet& ps, const std::vector<int>& blade) {
  const std::size_t n = ps.size();
  // Lines through two points of a blade separate the other two blades.
  for (Index s = 0; s < n; ++s) {
    for (Index t = s + 1; t < n; ++t) {
      if (blade[s] != blade[t]) continue;
      std::array<std::optional<Orientation>, 3> side;
      for (Index x = 0; x < n; ++x) {
        if (blade[x] == blade[s]) continue;
        const auto o = orientation(ps, s, t, x);
        auto& seen = side[static_cast<std::size_t>(blade[x])];
        if (o == Orientation::Collinear || (seen && *seen != o)) return false;
        seen = o;
      }
      const int b1 = (blade[s] + 1) % 3, b2 = (blade[s] + 2) % 3;
      if (side[static_cast<std::size_t>(b1)] && side[static_cast<std::size_t>(b2)] &&
          *side[static_cast<std::size_t>(b1)] == *side[static_cast<std::size_t>(b2)]) {
        return false;
      }
    }
  }
  return parts_separate(ps, [&](Index s, Index t) {
    const int bs = blade[s], bt = blade[t];
    if (bs == bt) return bs;
    return (bs + 1) % 3 == bt ? bs : bt;
  });
}

bool windmill4_ok(const PointSet& ps, const std::vector<int>& blade) {
  return parts_separate(ps, [&](Index s, Index t) {
    const int bs = blade[s], bt = blade[t];
    if ((bs + 1) % 4 == bt) return bs;
    if ((bt + 1) % 4 == bs) return bt;
    return -1;
  });
}

PointSet windmill(std::size_t n, int blades, Coord coord_max,
                  const std::function<bool(const PointSet&, const std::vector<int>&)>& ok) {
  require_coord_max(coord_max);
  const auto blade = windmill_blades(n, blades);
  for (int attempt = 0; attempt < 16; ++attempt) {
    PointSet ps = blade_points(n, blades, coord_max, 0.1 + 0.0137 * attempt);
    if (!is_general_position(ps)) continue;
    if (n <= kWindmillCheckLimit && !ok(ps, blade)) continue;
    ps.gp = GeneralPosition::Verified;
    return ps;
  }
  throw ResolutionError("windmill does not resolve within coord_max; raise it");
}

struct Hash128 {
  std::size_t operator()(unsigned __int128 x) const {
    const auto lo = static_cast<std::uint64_t>(x);
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Windmill3: return "windmill3";
    case Kind::Windmill4: return "windmill4";
    case Kind::Random: return "random";
    case Kind::Convex: return "convex";
    case Kind::HexCenter: return "hexcenter";
  }
  return "random";
}

Kind parse_kind(const std::string& name) {
  for (Kind k : {Kind::Windmill3, Kind::Windmill4, Kind::Random, Kind::Convex, Kind::HexCenter}) {
    if (kind_name(k) == name) return k;
  }
  throw PreconditionError("unknown instance kind: " + name);
}

std::vector<int> windmill_blades(std::size_t n, int blades) {
  std::vector<int> out;
  const auto sizes = blade_sizes(n, blades);
  for (int i = 0; i < blades; ++i) out.insert(out.end(), sizes[static_cast<std::size_t>(i)], i);
  return out;
}

PointSet windmill_uncolored(std::size_t n, Coord coord_max) {
  if (n < 3) throw PreconditionError("windmill3 needs n >= 3");
  return windmill(n, 3, coord_max, windmill3_ok);
}

PointSet windmill_bicolored(std::size_t n, Coord coord_max) {
  if (n < 4) throw PreconditionError("windmill4 needs n >= 4");
  PointSet ps = windmill(n, 4, coord_max, windmill4_ok);
  ps.num_colors = 2;
  for (int b : windmill_blades(n, 4)) ps.colors.push_back(b % 2);
  return ps;
}

PointSet random_general_position(std::size_t n, std::uint64_t seed, Coord coord_max) {
  require_coord_max(coord_max);
  const double side = 2.0 * static_cast<double>(coord_max) + 1;
  if (side * side < 4.0 * static_cast<double>(n) * static_cast<double>(n)) {
    throw PreconditionError("coord_max too small for n random points");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coord(-coord_max, coord_max);
  std::set<Point> seen;
  const auto fresh = [&] {
    while (true) {
      const Point p{coord(rng), coord(rng)};
      if (seen.insert(p).second) return p;
    }
  };
  PointSet ps;
  ps.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ps.points.push_back(fresh());
  if (n > kRandomVerifyLimit) {
    ps.gp = GeneralPosition::Assumed;
    return ps;
  }
  for (int round = 0;; ++round) {
    const auto t = find_collinear_triple(ps);
    if (!t) break;
    if (round > 10000) throw ResolutionError("could not reach general position");
    seen.erase(ps.points[t->c]);
    ps.points[t->c] = fresh();
  }
  ps.gp = GeneralPosition::Verified;
  return ps;
}

PointSet random_balanced_coloring(const PointSet& ps, int c, std::uint64_t seed) {
  if (c < 1 || static_cast<std::size_t>(c) > ps.size()) {
    throw PreconditionError("need 1 <= c <= n colors");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> label(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) label[static_cast<std::size_t>(i)] = i;
  std::shuffle(label.begin(), label.end(), rng);
  PointSet out = ps;
  out.num_colors = c;
  out.colors.resize(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out.colors[i] = label[i % static_cast<std::size_t>(c)];
  }
  std::shuffle(out.colors.begin(), out.colors.end(), rng);
  return out;
}

PointSet convex_position(std::size_t n, std::uint64_t seed, Coord coord_max) {
  require_coord_max(coord_max);
  const auto h = static_cast<Coord>(std::max<std::size_t>(n, 2) - 1);
  if (h * h > coord_max) throw ResolutionError("coord_max too small for a parabola of n points");
  const Coord ax = coord_max / h;
  const Coord ay = coord_max / (h * h);
  PointSet ps;
  for (std::size_t i = 0; i < n; ++i) {
    const Coord x = 2 * static_cast<Coord>(i) - h;  // -h, -h+2, ..., h
    ps.points.push_back({x * ax, x * x * ay});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(ps.points.begin(), ps.points.end(), rng);
  ps.gp = GeneralPosition::Verified;
  return ps;
}

PointSet polygon_with_center(std::size_t n, std::uint64_t seed, Coord coord_max) {
  require_coord_max(coord_max);
  if (n < 4) throw PreconditionError("polygon with center needs n >= 4");
  const double r = static_cast<double>(coord_max);
  const std::size_t k = n - 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double rot = 0.05 + 0.011 * attempt + 1e-4 * static_cast<double>(seed % 1000);
    PointSet ps;
    for (std::size_t i = 0; i < k; ++i) {
      const double a = rot + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
      ps.points.push_back({std::llround(r * std::cos(a)), std::llround(r * std::sin(a))});
    }
    ps.points.push_back({3 + attempt, 1 + 2 * attempt});
    if (convex_hull(ps).size() == k && is_general_position(ps)) {
      ps.gp = GeneralPosition::Verified;
      return ps;
    }
  }
  throw ResolutionError("polygon with center does not resolve within coord_max");
}

PointSet generate(const GenSpec& spec) {
  if (spec.n < 2) throw PreconditionError("n must be at least 2");
  if (spec.c < 0) throw PreconditionError("c must be non-negative");
  if (spec.kind == Kind::Windmill4) {
    if (spec.c != 0 && spec.c != 2) throw PreconditionError("windmill4 is 2-colored (c = 2)");
    return windmill_bicolored(spec.n, spec.coord_max);
  }
  PointSet ps;
  switch (spec.kind) {
    case Kind::Windmill3: ps = windmill_uncolored(spec.n, spec.coord_max); break;
    case Kind::Random: ps = random_general_position(spec.n, spec.seed, spec.coord_max); break;
    case Kind::Convex: ps = convex_position(spec.n, spec.seed, spec.coord_max); break;
    case Kind::HexCenter: ps = polygon_with_center(spec.n, spec.seed, spec.coord_max); break;
    case Kind::Windmill4: break;
  }
  if (spec.c > 0) ps = random_balanced_coloring(ps, spec.c, spec.seed ^ 0x5bd1e995ULL);
  return ps;
}

OracleResult oracle_max_connected_matching(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n > kOracleLimit) throw SizeLimitError("oracle is limited to 14 points");
  using Mask = unsigned __int128;
  std::vector<Segment> segs;
  for (Index s = 0; s < n; ++s) {
    for (Index t = s + 1; t < n; ++t) {
      if (!ps.colored() || ps.color(s) != ps.color(t)) segs.push_back({s, t});
    }
  }
  const std::size_t m = segs.size();
  const auto bit = [](std::size_t i) { return Mask{1} << i; };
  std::vector<Mask> crossing(m, 0), incident(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    incident[segs[i].a] |= bit(i);
    incident[segs[i].b] |= bit(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) continue;
      if (segments_cross(ps, s, t)) {
        crossing[i] |= bit(j);
        crossing[j] |= bit(i);
      }
    }
  }

  const std::size_t cap = n / 2;
  std::size_t best = 0;
  Mask best_mask = 0;
  std::unordered_set<Mask, Hash128> visited;
  std::function<void(Mask, Mask, Mask, std::size_t)> grow = [&](Mask chosen, Mask blocked,
                                                                Mask frontier, std::size_t size) {
    if (size > best) {
      best = size;
      best_mask = chosen;
    }
    if (best == cap || size + (n - 2 * size) / 2 <= best) return;
    Mask cand = frontier & ~blocked;
    while (cand != 0 && best < cap) {
      const auto lo = static_cast<std::uint64_t>(cand);
      const std::size_t i = lo != 0 ? static_cast<std::size_t>(std::countr_zero(lo))
                                    : 64 + static_cast<std::size_t>(std::countr_zero(
                                               static_cast<std::uint64_t>(cand >> 64)));
      cand &= ~bit(i);
      const Mask next = chosen | bit(i);
      if (!visited.insert(next).second) continue;
      grow(next, blocked | incident[segs[i].a] | incident[segs[i].b], frontier | crossing[i],
           size + 1);
    }
  };
  for (std::size_t i = 0; i < m && best < cap; ++i) {
    visited.insert(bit(i));
    grow(bit(i), incident[segs[i].a] | incident[segs[i].b], crossing[i], 1);
  }

  OracleResult out;
  out.size = best;
  for (std::size_t i = 0; i < m; ++i) {
    if (best_mask & bit(i)) out.matching.edges.push_back(segs[i]);
  }
  return out;
}

}  // namespace cm
