// Brute-force reference implementations used only by the tests. None of them
// shares code with the library beyond the Point/PointSet types.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "cm/types.hpp"

namespace oracle {

using cm::Index;
using cm::Point;
using cm::PointSet;
using I128 = __int128;

inline I128 det(Point a, Point b, Point c) {
  return I128{b.x - a.x} * (c.y - a.y) - I128{b.y - a.y} * (c.x - a.x);
}

inline int sgn(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// O(n^3) triple scan.
inline bool general_position(const PointSet& ps) {
  const std::size_t n = ps.size();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      if (ps[i] == ps[j]) return false;
      for (Index k = j + 1; k < n; ++k)
        if (det(ps[i], ps[j], ps[k]) == 0) return false;
    }
  return true;
}

// Closed segments ab and cd intersect; parametric test with exact
// fractions, independent of the orientation-case analysis in the library.
inline bool segments_meet(Point a, Point b, Point c, Point d) {
  const I128 rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  const I128 den = rx * sy - ry * sx;
  const I128 qpx = c.x - a.x, qpy = c.y - a.y;
  if (den == 0) {
    if (qpx * ry - qpy * rx != 0) return false;  // parallel, not collinear
    // collinear: overlap of projections
    const auto proj = [&](Point p) { return I128{p.x - a.x} * rx + I128{p.y - a.y} * ry; };
    const I128 len = rx * rx + ry * ry;
    I128 t0 = proj(c), t1 = proj(d);
    if (t0 > t1) std::swap(t0, t1);
    return t1 >= 0 && t0 <= len;
  }
  I128 t = qpx * sy - qpy * sx;  // t/den on ab
  I128 u = qpx * ry - qpy * rx;  // u/den on cd
  I128 dd = den;
  if (dd < 0) {
    dd = -dd;
    t = -t;
    u = -u;
  }
  return t >= 0 && t <= dd && u >= 0 && u <= dd;
}

// Gift wrapping, CCW from the lexicographically smallest point.
inline std::vector<Index> hull(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n < 3) {
    std::vector<Index> v(n);
    for (Index i = 0; i < n; ++i) v[i] = i;
    std::sort(v.begin(), v.end(), [&](Index a, Index b) { return ps[a] < ps[b]; });
    return v;
  }
  Index start = 0;
  for (Index i = 1; i < n; ++i)
    if (ps[i] < ps[start]) start = i;
  std::vector<Index> out;
  Index cur = start;
  do {
    out.push_back(cur);
    Index cand = cur == 0 ? 1 : 0;
    for (Index i = 0; i < n; ++i) {
      if (i == cur) continue;
      const int s = sgn(det(ps[cur], ps[cand], ps[i]));
      if (s < 0) cand = i;  // i is clockwise of cand: wrap tighter
    }
    cur = cand;
  } while (cur != start && out.size() <= n);
  return out;
}

struct Vertex {
  Index index;
};
struct Edge {
  Index a, b;  // unordered
};
using Feature = std::variant<std::monostate, Vertex, Edge>;

// Last point where the ray leaves the hull, by scanning every hull edge.
inline Feature ray_exit(const PointSet& ps, Point o, Point d) {
  const auto h = hull(ps);
  // best parameter t = num/den (den > 0)
  std::optional<std::pair<I128, I128>> best;
  Feature feat;
  const auto better = [](std::pair<I128, I128> x, std::pair<I128, I128> y) {
    return x.first * y.second > y.first * x.second;
  };
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Point s = ps[h[i]], e = ps[h[(i + 1) % h.size()]];
    const I128 ex = e.x - s.x, ey = e.y - s.y;
    I128 den = I128{d.x} * ey - I128{d.y} * ex;
    if (den == 0) continue;
    const I128 sox = s.x - o.x, soy = s.y - o.y;
    I128 t = sox * ey - soy * ex;
    I128 u = sox * d.y - soy * d.x;
    if (den < 0) {
      den = -den;
      t = -t;
      u = -u;
    }
    if (t < 0 || u < 0 || u > den) continue;
    const std::pair<I128, I128> tp{t, den};
    Feature f;
    if (u == 0) {
      f = Vertex{h[i]};
    } else if (u == den) {
      f = Vertex{h[(i + 1) % h.size()]};
    } else {
      f = Edge{h[i], h[(i + 1) % h.size()]};
    }
    if (!best || better(tp, *best)) {
      best = tp;
      feat = f;
    }
  }
  return feat;
}

// Depth via every line through p and another point.
inline std::size_t depth(const PointSet& ps, Index p) {
  const std::size_t n = ps.size();
  if (n <= 2) return 0;
  std::size_t best = n;
  for (Index q = 0; q < n; ++q) {
    if (q == p) continue;
    std::size_t l = 0, r = 0;
    for (Index t = 0; t < n; ++t) {
      if (t == p || t == q) continue;
      (det(ps[p], ps[q], ps[t]) > 0 ? l : r)++;
    }
    best = std::min({best, l, r});
  }
  return best;
}

inline bool strictly_inside(const PointSet& ps, Index a, Index b, Index c, Index t) {
  const int s = sgn(det(ps[a], ps[b], ps[c]));
  return sgn(det(ps[a], ps[b], ps[t])) == s && sgn(det(ps[b], ps[c], ps[t])) == s &&
         sgn(det(ps[c], ps[a], ps[t])) == s;
}

inline std::size_t count_inside(const PointSet& ps, Index a, Index b, Index c,
                                const std::vector<Index>& pts) {
  std::size_t k = 0;
  for (Index t : pts) k += strictly_inside(ps, a, b, c, t) ? 1 : 0;
  return k;
}

// Kuhn's augmenting paths on an explicit bipartite graph.
inline std::size_t max_bipartite(std::size_t left, std::size_t right,
                                 const std::function<bool(std::size_t, std::size_t)>& adj) {
  std::vector<std::optional<std::size_t>> match_r(right);
  std::size_t size = 0;
  for (std::size_t l = 0; l < left; ++l) {
    std::vector<char> seen(right, 0);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) {
      for (std::size_t y = 0; y < right; ++y) {
        if (!adj(x, y) || seen[y]) continue;
        seen[y] = 1;
        if (!match_r[y] || augment(*match_r[y])) {
          match_r[y] = x;
          return true;
        }
      }
      return false;
    };
    if (augment(l)) ++size;
  }
  return size;
}

// Connected via BFS over pairwise intersections.
inline bool connected(const PointSet& ps, const cm::Matching& m) {
  const std::size_t k = m.size();
  if (k <= 1) return true;
  std::vector<char> seen(k, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < k; ++j) {
      if (seen[j]) continue;
      const auto& s = m.edges[i];
      const auto& t = m.edges[j];
      if (segments_meet(ps[s.a], ps[s.b], ps[t.a], ps[t.b])) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == k;
}

inline bool disjoint_endpoints(const PointSet& ps, const cm::Matching& m) {
  std::vector<char> used(ps.size(), 0);
  for (const auto& s : m.edges) {
    if (s.a >= ps.size() || s.b >= ps.size() || s.a == s.b || used[s.a] || used[s.b]) return false;
    used[s.a] = used[s.b] = 1;
  }
  return true;
}

// Random distinct points in [-r, r]^2 with no collinear triple.
inline PointSet random_gp(std::size_t n, std::mt19937_64& rng, cm::Coord r = 1000000) {
  std::uniform_int_distribution<cm::Coord> d(-r, r);
  PointSet ps;
  while (ps.size() < n) {
    const Point p{d(rng), d(rng)};
    bool ok = true;
    for (Index i = 0; i < ps.size() && ok; ++i) {
      if (ps[i] == p) ok = false;
      for (Index j = i + 1; j < ps.size() && ok; ++j)
        if (det(ps[i], ps[j], p) == 0) ok = false;
    }
    if (ok) ps.points.push_back(p);
  }
  return ps;
}

}  // namespace oracle
