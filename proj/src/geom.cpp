#include "cm/geom.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace cm {

namespace {

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool upper_half(Point v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

}  // namespace

bool segments_cross(Point a, Point b, Point c, Point d) {
  const auto o1 = orientation(a, b, c);
  const auto o2 = orientation(a, b, d);
  const auto o3 = orientation(c, d, a);
  const auto o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
      o3 != Orientation::Collinear && o4 != Orientation::Collinear) {
    return true;
  }
  if (o1 == Orientation::Collinear && on_segment(a, b, c)) return true;
  if (o2 == Orientation::Collinear && on_segment(a, b, d)) return true;
  if (o3 == Orientation::Collinear && on_segment(c, d, a)) return true;
  if (o4 == Orientation::Collinear && on_segment(c, d, b)) return true;
  return false;
}

bool segments_cross(const PointSet& ps, Segment s, Segment t) {
  return segments_cross(ps[s.a], ps[s.b], ps[t.a], ps[t.b]);
}

std::vector<Index> convex_hull(const PointSet& ps, std::span<const Index> subset) {
  std::vector<Index> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end(), [&](Index a, Index b) { return ps[a] < ps[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](Index a, Index b) { return ps[a] == ps[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;

  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<Index> hull(2 * idx.size());
  std::size_t k = 0;
  for (Index i : idx) {
    while (k >= 2 && orientation(ps, hull[k - 2], hull[k - 1], i) != Orientation::CCW) --k;
    hull[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
    const Index i = idx[j];
    while (k >= lower && orientation(ps, hull[k - 2], hull[k - 1], i) != Orientation::CCW) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Index> convex_hull(const PointSet& ps) {
  std::vector<Index> all(ps.size());
  std::iota(all.begin(), all.end(), Index{0});
  return convex_hull(ps, all);
}

RayHullHit last_ray_hull_intersection(const PointSet& ps, std::span<const Index> subset,
                                      Point origin, Point direction, std::uint64_t seed) {
  if (direction == Point{}) throw PreconditionError("ray direction must be nonzero");
  // Frame: the ray points "up"; abscissa is cross(p - origin, direction),
  // positive to the right of the ray; ordinate is the dot product.
  const auto abscissa = [&](Index i) { return cross(ps[i] - origin, direction); };
  const auto height = [&](Index i) { return dot(ps[i] - origin, direction); };

  std::vector<Index> sides;
  std::vector<Index> on_line;
  bool has_left = false, has_right = false;
  for (Index i : subset) {
    const Wide x = abscissa(i);
    if (x == 0) {
      on_line.push_back(i);
    } else {
      sides.push_back(i);
      (x < 0 ? has_left : has_right) = true;
    }
  }

  const auto farthest_on_line = [&]() -> std::optional<Index> {
    std::optional<Index> best;
    for (Index i : on_line) {
      if (!best || height(i) > height(*best)) best = i;
    }
    return best;
  };

  if (!has_left || !has_right) {
    // Tangent (or missing) ray: the hull lies on one side of the ray's line.
    const auto best = farthest_on_line();
    if (!best || height(*best) < 0) throw NoIntersectionError("ray misses the convex hull");
    return HullVertex{*best};
  }

  // min b subject to a*x_p + b >= y_p, randomized incremental.
  std::mt19937_64 rng(seed);
  std::shuffle(sides.begin(), sides.end(), rng);
  const auto first_left = std::find_if(sides.begin(), sides.end(),
                                       [&](Index i) { return abscissa(i) < 0; });
  std::iter_swap(sides.begin(), first_left);
  const auto first_right = std::find_if(sides.begin() + 1, sides.end(),
                                        [&](Index i) { return abscissa(i) > 0; });
  std::iter_swap(sides.begin() + 1, first_right);

  Index left = sides[0];
  Index right = sides[1];
  for (std::size_t t = 2; t < sides.size(); ++t) {
    const Index r = sides[t];
    if (orientation(ps, left, right, r) != Orientation::CCW) continue;
    // r is above the current optimum line; the new line passes through r.
    const Wide xr = abscissa(r);
    std::optional<Index> best;
    for (std::size_t s = 0; s < t; ++s) {
      const Index c = sides[s];
      const Wide dx = cross(ps[c] - ps[r], direction);
      if (xr > 0) {
        if (dx >= 0) continue;
        if (!best || orientation(ps, *best, r, c) == Orientation::CCW) best = c;
      } else {
        if (dx <= 0) continue;
        if (!best || orientation(ps, r, *best, c) == Orientation::CCW) best = c;
      }
    }
    if (!best) throw std::logic_error("ray/hull LP: empty one-dimensional subproblem");
    if (xr > 0) {
      left = *best;
      right = r;
    } else {
      left = r;
      right = *best;
    }
    if (abscissa(left) >= 0 || abscissa(right) <= 0) {
      throw std::logic_error("ray/hull LP: optimum does not straddle the ray");
    }
  }

  std::optional<Index> vertex;
  for (Index z : on_line) {
    if (orientation(ps, left, right, z) == Orientation::CCW &&
        (!vertex || height(z) > height(*vertex))) {
      vertex = z;
    }
  }
  if (vertex) {
    if (height(*vertex) < 0) throw NoIntersectionError("ray misses the convex hull");
    return HullVertex{*vertex};
  }
  if (orientation(ps[left], ps[right], origin) == Orientation::CCW) {
    throw NoIntersectionError("ray misses the convex hull");
  }
  return HullEdge{left, right};
}

RayHullHit last_ray_hull_intersection(const PointSet& ps, Point origin, Point direction,
                                      std::uint64_t seed) {
  std::vector<Index> all(ps.size());
  std::iota(all.begin(), all.end(), Index{0});
  return last_ray_hull_intersection(ps, all, origin, direction, seed);
}

std::size_t point_depth(const PointSet& ps, Index i) {
  const Point p = ps[i];
  std::vector<Index> around;
  around.reserve(ps.size());
  for (Index j = 0; j < ps.size(); ++j) {
    if (j != i) around.push_back(j);
  }
  const std::size_t m = around.size();
  if (m < 2) return 0;
  std::sort(around.begin(), around.end(),
            [&](Index a, Index b) { return direction_less(ps[a] - p, ps[b] - p); });

  // Rotating half-plane: for each direction p->q_s, count the points strictly
  // to its left. Those form a contiguous run after s in angular order.
  std::size_t best = m;
  std::size_t end = 1;
  for (std::size_t s = 0; s < m; ++s) {
    end = std::max(end, s + 1);
    while (end < s + m &&
           orientation(p, ps[around[s]], ps[around[end % m]]) == Orientation::CCW) {
      ++end;
    }
    const std::size_t left = end - s - 1;
    const std::size_t right = m - 1 - left;
    best = std::min({best, left, right});
  }
  return best;
}

std::optional<CollinearTriple> find_collinear_triple(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<std::pair<Point, Index>> dirs;
  for (Index i = 0; i < n; ++i) {
    dirs.clear();
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      Point v = ps[j] - ps[i];
      if (v == Point{}) return CollinearTriple{i, j, j};
      if (!upper_half(v)) v = Point{-v.x, -v.y};
      dirs.emplace_back(v, j);
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& a, const auto& b) { return cross(a.first, b.first) > 0; });
    for (std::size_t t = 1; t < dirs.size(); ++t) {
      if (cross(dirs[t - 1].first, dirs[t].first) == 0) {
        return CollinearTriple{i, dirs[t - 1].second, dirs[t].second};
      }
    }
  }
  return std::nullopt;
}

bool is_general_position(const PointSet& ps) { return !find_collinear_triple(ps); }

bool within_coord_limit(Point p) {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit &&
         p.y <= kCoordLimit;
}

bool is_balanced(const PointSet& ps) {
  if (!ps.colored()) return true;
  if (ps.colors.size() != ps.size()) return false;
  std::vector<std::size_t> count(static_cast<std::size_t>(ps.num_colors), 0);
  for (int c : ps.colors) {
    if (c < 0 || c >= ps.num_colors) return false;
    ++count[static_cast<std::size_t>(c)];
  }
  const auto [lo, hi] = std::minmax_element(count.begin(), count.end());
  return *hi - *lo <= 1;
}

void require_valid(const PointSet& ps) {
  for (const Point& p : ps.points) {
    if (!within_coord_limit(p)) throw PreconditionError("coordinate exceeds 2^30 in magnitude");
  }
  if (ps.colored() && !is_balanced(ps)) {
    throw PreconditionError("coloring is not balanced");
  }
  if (ps.gp == GeneralPosition::Unknown) {
    if (auto t = find_collinear_triple(ps)) {
      throw PreconditionError(t->b == t->c ? "duplicate points"
                                           : "points are not in general position");
    }
  }
}

}  // namespace cm
