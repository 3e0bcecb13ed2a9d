#include "cm/separator.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "cm/geom.hpp"

namespace cm {

namespace {

long long ceil_div(long long num, long long den) {
  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

long long floor_div(long long num, long long den) {
  return num >= 0 ? num / den : -((-num + den - 1) / den);
}

bool inside_triangle(const PointSet& ps, Index a, Index b, Index c, Index t) {
  const auto s = orientation(ps, a, b, c);
  return orientation(ps, a, b, t) == s && orientation(ps, b, c, t) == s &&
         orientation(ps, c, a, t) == s;
}

// Even-odd membership of t in the closed polygon `poly` (possibly
// self-intersecting). t must not lie on the polygon.
bool parity_inside(const PointSet& ps, const std::vector<Index>& poly, Index t) {
  const Point p = ps[t];
  bool in = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = ps[poly[i]];
    const Point b = ps[poly[(i + 1) % poly.size()]];
    if ((a.y > p.y) != (b.y > p.y)) {
      const auto o = orientation(a, b, p);
      if (b.y > a.y ? o == Orientation::CCW : o == Orientation::CW) in = !in;
    }
  }
  return in;
}

bool path_polychromatic(const PointSet& ps, const std::vector<Index>& path) {
  if (!ps.colored()) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (ps.color(path[i]) == ps.color(path[i + 1])) return false;
  }
  return true;
}

Separator make_separator(const PointSet& ps, std::vector<Index> path, std::vector<Index> x,
                         std::vector<Index> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (y.size() < x.size() || (y.size() == x.size() && y < x)) std::swap(x, y);
  Separator s;
  s.polychromatic = path_polychromatic(ps, path);
  s.path = std::move(path);
  s.sideA = std::move(x);
  s.sideB = std::move(y);
  return s;
}

// The points of P sorted (lazily) by angle around the lowest point q0. All
// of them lie in [0, pi) as seen from q0, so one orientation test orders any
// two of them.
class Fan {
 public:
  explicit Fan(const PointSet& ps) : ps_(ps) {
    q0_ = 0;
    for (Index i = 1; i < ps.size(); ++i) {
      if (ps[i].y < ps[q0_].y || (ps[i].y == ps[q0_].y && ps[i].x < ps[q0_].x)) q0_ = i;
    }
    for (Index i = 0; i < ps.size(); ++i) {
      if (i != q0_) others_.push_back(i);
    }
  }

  Index apex() const { return q0_; }
  std::size_t n() const { return ps_.size(); }
  const std::vector<Index>& others() const { return others_; }

  bool before(Index a, Index b) const {
    return orientation(ps_, q0_, a, b) == Orientation::CCW;
  }

  // q_k, 1-based rank among the other points.
  Index kth(std::size_t k) const {
    return select_kth<Index>(others_, [this](Index a, Index b) { return before(a, b); }, k);
  }

  std::size_t rank(Index t) const {
    std::size_t r = 1;
    for (Index o : others_) r += before(o, t) ? 1 : 0;
    return r;
  }

 private:
  const PointSet& ps_;
  Index q0_;
  std::vector<Index> others_;
};

// Outcome of comparing the rays q0 q_k and q0 q_{n-k} with the hull: either
// an extremal point strictly between them, or the hull edge q_a q_b they both
// leave through.
struct Layout {
  bool triangle = false;
  Index extremal = 0;
  Index qa = 0, qb = 0;
  std::size_t a = 0, b = 0;
};

Layout locate(const PointSet& ps, const Fan& fan, std::size_t k, std::uint64_t seed) {
  const std::size_t n = fan.n();
  const Index q0 = fan.apex();
  const Index qk = fan.kth(k);
  const Index qnk = fan.kth(n - k);
  const auto hit1 = last_ray_hull_intersection(ps, ps[q0], ps[qk] - ps[q0], seed);
  const auto hit2 = last_ray_hull_intersection(ps, ps[q0], ps[qnk] - ps[q0], seed + 1);

  // Does the ray q0 -> t meet the closed segment e1 e2?
  const auto ray_meets = [&](Index t, Index e1, Index e2) {
    const auto o1 = orientation(ps, q0, t, e1);
    const auto o2 = orientation(ps, q0, t, e2);
    return o1 == Orientation::Collinear || o2 == Orientation::Collinear || o1 != o2;
  };

  Layout out;
  std::optional<std::pair<Index, Index>> edge;
  if (const auto* e = std::get_if<HullEdge>(&hit1)) {
    if (ray_meets(qnk, e->first, e->second)) {
      edge = {e->first, e->second};
    } else {
      out.extremal = fan.before(qk, e->first) ? e->first : e->second;
    }
  } else if (const auto* e2 = std::get_if<HullEdge>(&hit2)) {
    if (ray_meets(qk, e2->first, e2->second)) {
      edge = {e2->first, e2->second};
    } else {
      out.extremal = fan.before(e2->first, qnk) ? e2->first : e2->second;
    }
  } else {
    // Both q_k and q_{n-k} are hull vertices.
    const auto inner = orientation(ps, qk, qnk, q0);
    std::optional<Index> far;
    Wide far_dist = 0;
    for (Index t = 0; t < n; ++t) {
      if (orientation(ps, qk, qnk, t) != -inner) continue;
      const Wide d = cross(ps[qnk] - ps[qk], ps[t] - ps[qk]);
      const Wide ad = d < 0 ? -d : d;
      if (!far || ad > far_dist) {
        far = t;
        far_dist = ad;
      }
    }
    if (far) {
      out.extremal = *far;
    } else {
      edge = {qk, qnk};
    }
  }

  if (edge) {
    out.triangle = true;
    out.qa = edge->first;
    out.qb = edge->second;
    if (fan.before(out.qb, out.qa)) std::swap(out.qa, out.qb);
    out.a = fan.rank(out.qa);
    out.b = fan.rank(out.qb);
    if (out.a > k || out.b < n - k) throw std::logic_error("separator: hull edge out of range");
  }
  return out;
}

std::vector<Index> line_side(const PointSet& ps, Index from, Index to, Orientation side,
                             const std::vector<Index>& exclude) {
  std::vector<Index> out;
  for (Index t = 0; t < ps.size(); ++t) {
    if (std::find(exclude.begin(), exclude.end(), t) != exclude.end()) continue;
    if (orientation(ps, from, to, t) == side) out.push_back(t);
  }
  return out;
}

Separator one_edge(const PointSet& ps, Index from, Index to) {
  std::vector<Index> path{from, to};
  return make_separator(ps, path, line_side(ps, from, to, Orientation::CCW, path),
                        line_side(ps, from, to, Orientation::CW, path));
}

// Triangle q0 q_a q_b of the fan, with the three regions a split path can
// cut off. Region j is the one bounded by the path from vertex j-1 to vertex
// j+1 and, for j = 1, 2, the hull beyond the triangle edge opposite j.
class FanTriangle {
 public:
  FanTriangle(const PointSet& ps, const Fan& fan, const Layout& lay)
      : ps_(ps), fan_(fan), v_{fan.apex(), lay.qa, lay.qb} {
    for (Index t : fan.others()) {
      if (fan.before(lay.qa, t) && fan.before(t, lay.qb)) interior_.push_back(t);
    }
  }

  Index vertex(int i) const { return v_[static_cast<std::size_t>((i % 3 + 3) % 3)]; }
  const std::vector<Index>& interior() const { return interior_; }

  bool in_region(int j, const std::vector<Index>& path, Index t) const {
    if (j == 1 && fan_.before(v_[2], t)) return true;
    if (j == 2 && fan_.before(t, v_[1])) return true;
    if (t == v_[0] || !fan_.before(v_[1], t) || !fan_.before(t, v_[2])) return false;
    return parity_inside(ps_, path, t);
  }

  // Path from vertex j-1 through `mid` to vertex j+1.
  std::vector<Index> region_path(int j, const std::vector<Index>& mid) const {
    std::vector<Index> path{vertex(j - 1)};
    path.insert(path.end(), mid.begin(), mid.end());
    path.push_back(vertex(j + 1));
    return path;
  }

  // Split P by the path bounding region j.
  Separator split(int j, const std::vector<Index>& path) const {
    std::vector<Index> in, out;
    for (Index t = 0; t < ps_.size(); ++t) {
      if (std::find(path.begin(), path.end(), t) != path.end()) continue;
      (in_region(j, path, t) ? in : out).push_back(t);
    }
    return make_separator(ps_, path, std::move(in), std::move(out));
  }

  // Among the regions cut off by paths[j] (j = 0, 1, 2), the most populated
  // one and the separator it induces.
  Separator largest(const std::array<std::vector<Index>, 3>& paths) const {
    int best = 0;
    std::size_t best_count = 0;
    for (int j = 0; j < 3; ++j) {
      const auto& path = paths[static_cast<std::size_t>(j)];
      std::size_t count = 0;
      for (Index t = 0; t < ps_.size(); ++t) {
        if (std::find(path.begin(), path.end(), t) != path.end()) continue;
        count += in_region(j, path, t) ? 1 : 0;
      }
      if (j == 0 || count > best_count) {
        best = j;
        best_count = count;
      }
    }
    return split(best, paths[static_cast<std::size_t>(best)]);
  }

  // Split points for weights derived from w0 as w1 = w0 - (n-b-1),
  // w2 = w0 - (a-1), each clamped to the vacuous bound m - 1.
  std::vector<Index> candidates(long long w0, const Layout& lay) const {
    const long long n = static_cast<long long>(ps_.size());
    const long long m = static_cast<long long>(interior_.size());
    if (m < 1) throw ConstructionError("separator: empty split triangle");
    std::array<long long, 3> w{w0, w0 - (n - static_cast<long long>(lay.b) - 1),
                               w0 - (static_cast<long long>(lay.a) - 1)};
    for (auto& x : w) x = std::clamp(x, 0LL, m - 1);
    if (w[0] + w[1] + w[2] <= 2 * m - 3) {
      throw ConstructionError("separator: split weights too small for this triangle");
    }
    TriangleSplitRequest req{{v_[0], v_[1], v_[2]}, interior_, w};
    return split_triangle(req, ps_);
  }

 private:
  const PointSet& ps_;
  const Fan& fan_;
  std::array<Index, 3> v_;
  std::vector<Index> interior_;
};

Separator small_separating_path(const PointSet& ps) {
  const auto hull = convex_hull(ps);
  std::optional<Separator> best;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Separator s = one_edge(ps, hull[0], hull[i]);
    if (!best || s.sideA.size() > best->sideA.size()) best = std::move(s);
  }
  return *best;
}

// Three-point path q0 q_l q_j (q0 and q_j extremal, q_l anywhere). The side
// through small ranks gets everything angularly before the first turn plus
// the part of the cone between q_l and q_j beyond segment q_l q_j.
Separator bent_path(const PointSet& ps, const Fan& fan, Index ql, Index qj) {
  const Index q0 = fan.apex();
  const bool l_first = fan.before(ql, qj);
  const Index lo = l_first ? ql : qj;
  const Index hi = l_first ? qj : ql;
  const auto inner = orientation(ps, lo, hi, q0);
  std::vector<Index> low, high;
  for (Index t : fan.others()) {
    if (t == ql || t == qj) continue;
    bool is_low;
    if (fan.before(t, lo)) {
      is_low = true;
    } else if (fan.before(hi, t)) {
      is_low = false;
    } else {
      const bool beyond = orientation(ps, lo, hi, t) != inner;
      // Beyond the segment the region belongs to the side not containing the
      // triangle q0 q_l q_j.
      is_low = l_first ? beyond : !beyond;
    }
    (is_low ? low : high).push_back(t);
  }
  return make_separator(ps, {q0, ql, qj}, std::move(low), std::move(high));
}

// First layout of the colored constructions: an extremal q_j lies strictly
// between q_k and q_{n-k}.
Separator colored_extremal_case(const PointSet& ps, const Fan& fan, Index qj) {
  const Index q0 = fan.apex();
  if (ps.color(q0) != ps.color(qj)) return one_edge(ps, q0, qj);
  const long long n = static_cast<long long>(ps.size());
  const auto lo_rank = static_cast<std::size_t>(std::max(1LL, ceil_div(n - 4, 4)));
  const auto hi_rank = static_cast<std::size_t>(std::min(n - 1, floor_div(3 * n + 4, 4)));
  if (lo_rank > hi_rank) throw ConstructionError("separator: empty middle range");
  const Index lo = fan.kth(lo_rank);
  const Index hi = fan.kth(hi_rank);
  for (Index t : fan.others()) {
    const bool in_range = t == lo || t == hi || (fan.before(lo, t) && fan.before(t, hi));
    if (in_range && ps.color(t) != ps.color(q0)) return bent_path(ps, fan, t, qj);
  }
  throw ConstructionError("separator: no point of another color in the middle range");
}

void require_colored(const PointSet& ps, int min_colors, bool enforce_threshold) {
  if (!ps.colored() || ps.num_colors < min_colors) {
    throw PreconditionError("colored separator needs at least " + std::to_string(min_colors) +
                            " colors");
  }
  if (!is_balanced(ps)) throw PreconditionError("coloring is not balanced");
  if (enforce_threshold && ps.size() < colored_threshold(ps.num_colors)) {
    throw PreconditionError("colored separator needs n >= " +
                            std::to_string(colored_threshold(ps.num_colors)));
  }
  if (ps.size() < 5) throw ConstructionError("colored separator needs at least 5 points");
}

std::optional<Index> color_avoiding(const PointSet& ps, const std::vector<Index>& pool,
                                    const FanTriangle& tri) {
  for (Index q : pool) {
    const int c = ps.color(q);
    if (c != ps.color(tri.vertex(0)) && c != ps.color(tri.vertex(1)) &&
        c != ps.color(tri.vertex(2))) {
      return q;
    }
  }
  return std::nullopt;
}

Separator single_split_point(const FanTriangle& tri, Index q) {
  std::array<std::vector<Index>, 3> paths;
  for (int j = 0; j < 3; ++j) paths[static_cast<std::size_t>(j)] = tri.region_path(j, {q});
  return tri.largest(paths);
}

}  // namespace

std::vector<Index> split_triangle(const TriangleSplitRequest& req, const PointSet& ps) {
  const auto m = static_cast<long long>(req.interior.size());
  const auto& v = req.vertices;
  const auto& w = req.weights;
  if (m < 1) throw PreconditionError("split_triangle: no interior points");
  for (long long wi : w) {
    if (wi < 0 || wi >= m) throw PreconditionError("split_triangle: weight outside [0, m)");
  }
  if (w[0] + w[1] + w[2] <= 2 * m - 3) {
    throw PreconditionError("split_triangle: weights sum to at most 2m - 3");
  }
  if (orientation(ps, v[0], v[1], v[2]) == Orientation::Collinear) {
    throw PreconditionError("split_triangle: degenerate triangle");
  }
  for (Index t : req.interior) {
    if (!inside_triangle(ps, v[0], v[1], v[2], t)) {
      throw PreconditionError("split_triangle: point not strictly inside the triangle");
    }
  }

  std::vector<char> scanned(req.interior.size(), 0);
  std::vector<std::size_t> order(req.interior.size());
  for (int i = 0; i < 3; ++i) {
    // Rotate the ray from vertex i-1 through vertex i towards vertex i+1 and
    // mark the first m - w_i - 1 points it passes.
    const auto count = static_cast<std::size_t>(m - w[static_cast<std::size_t>(i)] - 1);
    if (count == 0) continue;
    const Index pivot = v[static_cast<std::size_t>((i + 2) % 3)];
    const Index from = v[static_cast<std::size_t>(i)];
    const Index toward = v[static_cast<std::size_t>((i + 1) % 3)];
    const auto turn = orientation(ps, pivot, from, toward);
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    select_in_place(std::span<std::size_t>(order), count, [&](std::size_t a, std::size_t b) {
      return orientation(ps, pivot, req.interior[a], req.interior[b]) == turn;
    });
    for (std::size_t t = 0; t < count; ++t) scanned[order[t]] = 1;
  }

  std::vector<Index> q;
  for (std::size_t t = 0; t < req.interior.size(); ++t) {
    if (!scanned[t]) q.push_back(req.interior[t]);
  }
  return q;
}

Index balanced_split_point(Index p0, Index p1, Index p2, const std::vector<Index>& interior,
                            const PointSet& ps) {
  const auto m = static_cast<long long>(interior.size());
  if (m < 1) throw PreconditionError("balanced_split_point: no interior points");
  const long long w = ceil_div(2 * m - 2, 3);
  const auto q = split_triangle({{p0, p1, p2}, interior, {w, w, w}}, ps);
  return q.front();
}

std::size_t colored_threshold(int num_colors) {
  return 60 * static_cast<std::size_t>(std::max(num_colors, 0));
}

Separator separating_path(const PointSet& ps, std::uint64_t seed) {
  const std::size_t n = ps.size();
  if (n < 2) throw PreconditionError("separating_path needs at least 2 points");
  if (n <= 4) return small_separating_path(ps);

  const Fan fan(ps);
  const auto k = static_cast<std::size_t>(ceil_div(static_cast<long long>(n) - 4, 3));
  const Layout lay = locate(ps, fan, k, seed);
  if (!lay.triangle) return one_edge(ps, fan.apex(), lay.extremal);

  const FanTriangle tri(ps, fan, lay);
  const long long r = ceil_div(2 * static_cast<long long>(n) - 8, 3);
  const auto q = tri.candidates(r, lay);
  return single_split_point(tri, q.front());
}

Separator polychromatic_separating_path_c4(const PointSet& ps, bool enforce_threshold,
                                           std::uint64_t seed) {
  require_colored(ps, 4, enforce_threshold);
  const long long n = static_cast<long long>(ps.size());
  const long long c = ps.num_colors;
  const Fan fan(ps);
  const auto k = static_cast<std::size_t>(ceil_div(n - 4, 3));
  const Layout lay = locate(ps, fan, k, seed);
  if (!lay.triangle) return colored_extremal_case(ps, fan, lay.extremal);

  const FanTriangle tri(ps, fan, lay);
  // w0 = ceil((1/c + 2/3) n)
  const auto q = tri.candidates(ceil_div((3 + 2 * c) * n, 3 * c), lay);
  const auto pick = color_avoiding(ps, q, tri);
  if (!pick) throw ConstructionError("separator: no split point with a fourth color");
  return single_split_point(tri, *pick);
}

Separator polychromatic_separator_3edges(const PointSet& ps, bool enforce_threshold,
                                         std::uint64_t seed) {
  require_colored(ps, 2, enforce_threshold);
  const long long n = static_cast<long long>(ps.size());
  const long long c = ps.num_colors;
  const Fan fan(ps);
  const auto k = static_cast<std::size_t>(ceil_div(n - 4, 3));
  const Layout lay = locate(ps, fan, k, seed);
  if (!lay.triangle) return colored_extremal_case(ps, fan, lay.extremal);

  const FanTriangle tri(ps, fan, lay);
  // w0 = ceil((1/(3c) + 2/3) n)
  const auto q = tri.candidates(ceil_div((1 + 2 * c) * n, 3 * c), lay);
  if (const auto pick = color_avoiding(ps, q, tri)) return single_split_point(tri, *pick);

  // Every candidate repeats a triangle color. Take two candidates of
  // different colors; each triangle vertex connects to one that differs from
  // it, and q1 q2 links them.
  const Index q1 = q.front();
  const auto q2_it = std::find_if(q.begin(), q.end(),
                                  [&](Index t) { return ps.color(t) != ps.color(q1); });
  if (q2_it == q.end()) throw ConstructionError("separator: split candidates are monochromatic");
  const Index q2 = *q2_it;
  const auto partner = [&](int i) {
    return ps.color(q1) != ps.color(tri.vertex(i)) ? q1 : q2;
  };
  std::array<std::vector<Index>, 3> paths;
  for (int j = 0; j < 3; ++j) {
    std::vector<Index> mid{partner(j - 1)};
    if (partner(j + 1) != mid.front()) mid.push_back(partner(j + 1));
    paths[static_cast<std::size_t>(j)] = tri.region_path(j, mid);
  }
  return tri.largest(paths);
}

}  // namespace cm
