#include "cm/connected_matching.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cm/crossing_matching.hpp"
#include "cm/geom.hpp"

namespace cm {

namespace {

void append(Matching& m, const Matching& extra) {
  m.edges.insert(m.edges.end(), extra.edges.begin(), extra.edges.end());
}

// Pairs B[i] with A[i] for i < |B|.
Matching zip(const std::vector<Index>& A, const std::vector<Index>& B) {
  Matching m;
  const std::size_t k = std::min(A.size(), B.size());
  for (std::size_t i = 0; i < k; ++i) m.edges.push_back({A[i], B[i]});
  return m;
}

void require_all_cross(const PointSet& ps, const CrossingInstance& inst) {
  if (inst.A.empty() || inst.B.empty()) return;
  // Every pair crosses iff the extreme phi values of the two sides are
  // ordered: max phi1(A) <= min phi1(B) and min phi2(A) >= max phi2(B).
  const PhiFrame f(ps, inst);
  const auto by = [](auto key) {
    return [key](Index s, Index t) { return key(s) < key(t); };
  };
  const auto phi1a = [&](Index a) { return f.phi1_a(a); };
  const auto phi2a = [&](Index a) { return f.phi2_a(a); };
  const auto phi1b = [&](Index b) { return f.phi1_b(b); };
  const auto phi2b = [&](Index b) { return f.phi2_b(b); };
  const Index a1 = *std::max_element(inst.A.begin(), inst.A.end(), by(phi1a));
  const Index a2 = *std::min_element(inst.A.begin(), inst.A.end(), by(phi2a));
  const Index b1 = *std::min_element(inst.B.begin(), inst.B.end(), by(phi1b));
  const Index b2 = *std::max_element(inst.B.begin(), inst.B.end(), by(phi2b));
  if (f.phi1_b(b1) < f.phi1_a(a1) || f.phi2_a(a2) < f.phi2_b(b2)) {
    throw PreconditionError("across-segment instance: some A-B segment misses the segment");
  }
}

// Convex polygon as a cyclic counterclockwise list over slot ids, with a
// finger on the lexicographically largest vertex.
class ConvexChain {
 public:
  explicit ConvexChain(std::size_t slots) : next_(slots), prev_(slots), alive_(slots, 0) {}

  std::size_t size() const { return size_; }
  std::size_t finger() const { return finger_; }
  std::size_t next(std::size_t s) const { return next_[s]; }
  std::size_t prev(std::size_t s) const { return prev_[s]; }

  void link_after(std::size_t at, std::size_t s) {
    const std::size_t nx = next_[at];
    next_[at] = s;
    prev_[s] = at;
    next_[s] = nx;
    prev_[nx] = s;
    alive_[s] = 1;
    ++size_;
  }

  void make_single(std::size_t s) {
    next_[s] = prev_[s] = s;
    alive_[s] = 1;
    size_ = 1;
    finger_ = s;
  }

  void set_finger(std::size_t s) { finger_ = s; }

  void unlink(std::size_t s) {
    next_[prev_[s]] = next_[s];
    prev_[next_[s]] = prev_[s];
    alive_[s] = 0;
    --size_;
  }

  bool alive(std::size_t s) const { return alive_[s] != 0; }

  std::vector<std::size_t> cycle() const {
    std::vector<std::size_t> out;
    if (size_ == 0) return out;
    std::size_t s = finger_;
    do {
      out.push_back(s);
      s = next_[s];
    } while (s != finger_);
    return out;
  }

 private:
  std::vector<std::size_t> next_;
  std::vector<std::size_t> prev_;
  std::vector<char> alive_;
  std::size_t size_ = 0;
  std::size_t finger_ = 0;
};

// Matches what it can of A and B with bichromatic edges; see
// greedy_polychromatic_matching.
Matching greedy_partial(const std::vector<Index>& A, const std::vector<Index>& B,
                        const PointSet& ps) {
  const auto c = static_cast<std::size_t>(std::max(ps.num_colors, 1));
  using Buckets = std::vector<std::vector<Index>>;
  const auto fill = [&](const std::vector<Index>& side) {
    Buckets b(c);
    for (Index t : side) b[static_cast<std::size_t>(ps.color(t))].push_back(t);
    // pop_back hands out the lowest index first
    for (auto& v : b) std::sort(v.rbegin(), v.rend());
    return b;
  };
  Buckets ba = fill(A);
  Buckets bb = fill(B);

  // Take the color with the largest count over both sides; pair one of its
  // points on the smaller side (or, if it has none there, on the larger side)
  // with the most popular other color across. Whenever the full size
  // min(|A|, |B|) is reachable, no color ever exceeds the larger side's count.
  const auto most_popular_except = [c](const Buckets& b, std::size_t skip) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < c; ++k) {
      if (k == skip || b[k].empty()) continue;
      if (!best || b[k].size() > b[*best].size()) best = k;
    }
    return best;
  };
  const bool a_small = A.size() <= B.size();
  Buckets& bs = a_small ? ba : bb;
  Buckets& bl = a_small ? bb : ba;

  Matching m;
  while (true) {
    std::optional<std::size_t> k;
    for (std::size_t j = 0; j < c; ++j) {
      if (bs[j].empty() && bl[j].empty()) continue;
      if (!k || bs[j].size() + bl[j].size() > bs[*k].size() + bl[*k].size()) k = j;
    }
    if (!k) break;
    std::optional<std::size_t> cs, cl;
    if (!bs[*k].empty()) {
      cs = k;
      cl = most_popular_except(bl, *k);
    } else {
      cl = k;
      cs = most_popular_except(bs, *k);
    }
    if (!cs || !cl) break;
    const Index x = bs[*cs].back(), y = bl[*cl].back();
    m.edges.push_back(a_small ? Segment{x, y} : Segment{y, x});
    bs[*cs].pop_back();
    bl[*cl].pop_back();
  }
  return m;
}

// The maximal crossing matching across e, split by which side of e's line
// each endpoint is on.
Matching crossing_split(const PointSet& ps, Segment e, const std::vector<Index>& A,
                        const std::vector<Index>& B) {
  std::vector<Index> al, ar, bl, br;
  for (Index t : A) (orientation(ps, e.a, e.b, t) == Orientation::CCW ? al : ar).push_back(t);
  for (Index t : B) (orientation(ps, e.a, e.b, t) == Orientation::CCW ? bl : br).push_back(t);
  Matching m = maximal_crossing_matching({e, al, br}, ps);
  append(m, maximal_crossing_matching({e, ar, bl}, ps));
  return m;
}

std::vector<Index> without(const std::vector<Index>& all, const std::vector<char>& used) {
  std::vector<Index> out;
  for (Index t : all) {
    if (!used[t]) out.push_back(t);
  }
  return out;
}

// For each point, min over a few fixed directions of the points strictly on
// either side of the perpendicular line through it (plus the at most one
// other point on that line), and 0 on the hull. Never below the depth.
std::vector<std::size_t> depth_upper_bounds(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<std::size_t> bound(n, n);
  const Point dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {2, -1}, {1, -2}};
  std::vector<std::pair<Coord, Index>> keyed(n);
  for (const Point& dir : dirs) {
    for (Index i = 0; i < n; ++i) keyed[i] = {dir.x * ps[i].x + dir.y * ps[i].y, i};
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t lo = 0; lo < n;) {
      std::size_t hi = lo;
      while (hi < n && keyed[hi].first == keyed[lo].first) ++hi;
      const std::size_t b = std::min(lo, n - hi) + (hi - lo - 1);
      for (std::size_t j = lo; j < hi; ++j) {
        bound[keyed[j].second] = std::min(bound[keyed[j].second], b);
      }
      lo = hi;
    }
  }
  for (Index h : convex_hull(ps)) bound[h] = 0;
  return bound;
}

BoundReport make_report(const PointSet& ps, std::size_t achieved, Theorem th, long long depth,
                        bool applies) {
  BoundReport r;
  r.n = ps.size();
  r.c = ps.num_colors;
  r.achieved = achieved;
  r.theorem = th;
  r.depth = depth;
  r.applies = applies;
  r.guaranteed = theorem_bound(th, static_cast<long long>(ps.size()), ps.num_colors, depth);
  return r;
}

}  // namespace

long long ceil_of(const Rational& r) {
  const long long q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() > 0) ? q + 1 : q;
}

Rational m_bound(long long a, long long b) {
  if (b < 0 || b > a) throw PreconditionError("m_bound requires 0 <= b <= a");
  if (a <= 2 * b + 3) return Rational(1 + b);
  if (a <= 7 * b + 3) return Rational(a + 3 * b + 2, 5);
  return Rational(1 + 2 * b);
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::None: return "none";
    case Theorem::Uncolored: return "uncolored";
    case Theorem::Deep: return "deep";
    case Theorem::Colored1: return "colored-path";
    case Theorem::Colored2: return "colored-3edge";
  }
  return "none";
}

Rational theorem_bound(Theorem t, long long n, long long c, long long depth) {
  switch (t) {
    case Theorem::None: return Rational(0);
    case Theorem::Uncolored: return Rational(5 * n + 1, 27);
    case Theorem::Deep: return Rational(depth);
    case Theorem::Colored1:
      if (c < 1) throw PreconditionError("colored bound needs c >= 1");
      return Rational((c - 3) * n, 6 * c) - Rational(1, 2);
    case Theorem::Colored2:
      if (c < 1) throw PreconditionError("colored bound needs c >= 1");
      return Rational((c - 1) * n, 9 * c) - Rational(1, 3);
  }
  return Rational(0);
}

Matching antipodal_connected_matching(const std::vector<Index>& convex_pts) {
  Matching m;
  const std::size_t half = convex_pts.size() / 2;
  for (std::size_t i = 0; i < half; ++i) m.edges.push_back({convex_pts[i], convex_pts[i + half]});
  return m;
}

Matching connected_matching_across_segment(Index u, Index v, const std::vector<Index>& A,
                                           const std::vector<Index>& B, const PointSet& ps) {
  if (B.size() > A.size()) throw PreconditionError("across-segment instance needs |B| <= |A|");
  const CrossingInstance inst{{u, v}, A, B};
  require_opposite_sides(ps, inst);
  require_all_cross(ps, inst);

  Matching m;
  m.edges.push_back({u, v});
  const std::size_t a = A.size();
  std::vector<Index> order(A);
  std::sort(order.begin(), order.end(), [&](Index s, Index t) { return ps[s] < ps[t]; });
  std::vector<Index> bq(B);
  std::sort(bq.begin(), bq.end());
  std::size_t next_b = 0;

  std::size_t rem_a = a, rem_b = B.size(), rounds = 0;
  const auto done = [&] { return rem_b == 0 || rem_a <= rem_b; };
  const auto P = [&](std::size_t slot) { return ps[order[slot]]; };

  // Slots 0..a-1 are the points of A in sweep order. X is the hull of the
  // swept points not yet matched; it stays in convex position.
  ConvexChain X(a);
  const auto insert = [&](std::size_t p) {
    const std::size_t n = X.size();
    if (n == 0) {
      X.make_single(p);
      return;
    }
    const std::size_t r = X.finger();
    if (n == 1) {
      X.link_after(r, p);
    } else if (n == 2) {
      if (orientation(P(r), P(X.next(r)), P(p)) == Orientation::CCW) {
        X.link_after(X.next(r), p);
      } else {
        X.link_after(r, p);
      }
    } else if (orientation(P(r), P(X.next(r)), P(p)) == Orientation::CW) {
      X.link_after(r, p);
    } else {
      X.link_after(X.prev(r), p);
    }
    X.set_finger(p);
  };
  // A vertex of X that falls inside CH(X + p). Only the finger and its two
  // neighbours need checking: the finger is always on the chain p sees.
  const auto swallowed = [&](std::size_t p) -> std::optional<std::size_t> {
    if (X.size() < 3) return std::nullopt;
    const std::size_t r = X.finger();
    for (std::size_t q : {r, X.next(r), X.prev(r)}) {
      if (orientation(P(X.prev(q)), P(q), P(p)) == Orientation::CW &&
          orientation(P(q), P(X.next(q)), P(p)) == Orientation::CW) {
        return q;
      }
    }
    return std::nullopt;
  };

  std::optional<std::size_t> pending;  // swept point neither in X nor matched
  std::size_t swept = 0;
  bool stopped = done();
  while (!stopped && swept < a) {
    const std::size_t p = swept++;
    while (true) {
      const auto q = swallowed(p);
      if (!q) {
        insert(p);
        break;
      }
      const std::size_t q1 = X.prev(*q), q2 = X.next(*q);
      const Index r = bq[next_b++];
      const Index qi = order[*q];
      const std::array<std::pair<std::size_t, std::size_t>, 3> sides{
          {{p, q1}, {q1, q2}, {q2, p}}};
      std::optional<std::pair<std::size_t, std::size_t>> hit;
      for (const auto& s : sides) {
        if (segments_cross(ps[qi], ps[r], P(s.first), P(s.second))) {
          hit = s;
          break;
        }
      }
      if (!hit) throw std::logic_error("across-segment: no triangle edge crossed");
      m.edges.push_back({qi, r});
      m.edges.push_back({order[hit->first], order[hit->second]});

      const bool finger_lost = X.finger() == *q || X.finger() == hit->first ||
                               X.finger() == hit->second;
      std::size_t last = *q;
      X.unlink(*q);
      for (std::size_t s : {hit->first, hit->second}) {
        if (s != p) {
          X.unlink(s);
          last = s;
        }
      }
      if (X.size() > 0 && finger_lost) {
        const std::size_t s1 = X.prev(last), s2 = X.next(last);
        X.set_finger(P(s1) < P(s2) ? s2 : s1);
      }
      rem_a -= 3;
      rem_b -= 1;
      ++rounds;
      if (m.size() != 1 + 2 * rounds) throw std::logic_error("across-segment: bad accounting");
      const bool p_used = hit->first == p || hit->second == p;
      if (done()) {
        stopped = true;
        if (!p_used) pending = p;
        break;
      }
      if (p_used) break;
    }
  }

  if (rem_b == 0) return m;

  // Remaining points of A: X, the pending point and everything unswept.
  std::vector<Index> rest;
  for (std::size_t s : X.cycle()) rest.push_back(order[s]);
  if (pending) rest.push_back(order[*pending]);
  for (std::size_t s = swept; s < a; ++s) rest.push_back(order[s]);
  if (rest.size() != rem_a) throw std::logic_error("across-segment: lost track of A");
  const std::vector<Index> b_rest(bq.begin() + static_cast<std::ptrdiff_t>(next_b), bq.end());

  if (rem_a <= rem_b) {
    const auto diff = static_cast<long long>(a) - static_cast<long long>(B.size());
    if (static_cast<long long>(rounds) != (diff + 1) / 2) {
      throw std::logic_error("across-segment: round count differs from ceil((a-b)/2)");
    }
    append(m, zip(rest, b_rest));
    return m;
  }

  // A' is in convex position: either finish crossing uv, or use the
  // antipodal matching inside A'.
  Matching crossing = m;
  append(crossing, zip(rest, b_rest));
  Matching inside = antipodal_connected_matching(rest);
  return inside.size() > crossing.size() ? inside : crossing;
}

MatchingResult connected_matching_uncolored(const PointSet& ps, std::uint64_t seed) {
  if (ps.size() < 2) throw PreconditionError("need at least 2 points");
  require_valid(ps);
  const Separator sep = separating_path(ps, seed);
  const std::vector<Index>& B = sep.sideA;
  const std::vector<Index>& A = sep.sideB;

  Matching best;
  if (sep.edge_count() == 1) {
    best.edges.push_back(sep.edge(0));
    append(best, zip(A, B));
  } else {
    for (int first = 0; first < 2; ++first) {
      const Segment e1 = sep.edge(static_cast<std::size_t>(first));
      const Segment e2 = sep.edge(static_cast<std::size_t>(1 - first));

      Matching m1;
      m1.edges.push_back(e1);
      append(m1, crossing_split(ps, e1, A, B));
      std::vector<char> used(ps.size(), 0);
      for (std::size_t i = 1; i < m1.size(); ++i) used[m1.edges[i].a] = used[m1.edges[i].b] = 1;
      const auto a2 = without(A, used);
      const auto b2 = without(B, used);

      Matching m2;
      m2.edges.push_back(e2);
      append(m2, zip(a2, b2));

      for (const Matching* cand : {&m1, &m2}) {
        if (cand->size() > best.size()) best = *cand;
      }
      if (!b2.empty()) {
        Matching m3 = connected_matching_across_segment(e2.a, e2.b, a2, b2, ps);
        if (m3.size() > best.size()) best = std::move(m3);
      }
    }
  }
  const std::size_t k = best.size();
  return {std::move(best), make_report(ps, k, Theorem::Uncolored, 0, true)};
}

MatchingResult deep_point_matching(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n < 2) throw PreconditionError("need at least 2 points");
  require_valid(ps);

  // Deepest point, lowest index on ties. Only points whose depth upper bound
  // reaches the best depth so far are evaluated.
  const std::vector<std::size_t> bound = depth_upper_bounds(ps);
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Index s, Index t) {
    return bound[s] != bound[t] ? bound[s] > bound[t] : s < t;
  });
  Index p = order[0];
  std::size_t d = 0;
  bool first = true;
  for (Index i : order) {
    if (!first && bound[i] < d) break;
    const std::size_t di = bound[i] == 0 ? 0 : point_depth(ps, i);
    if (first || di > d || (di == d && i < p)) {
      p = i;
      d = di;
    }
    first = false;
  }
  std::optional<Index> a;
  for (Index h : convex_hull(ps)) {
    if (h != p && (!a || h < *a)) a = h;
  }
  if (!a) throw std::logic_error("deep matching: no extremal partner");

  std::vector<Index> above, below;
  for (Index t = 0; t < n; ++t) {
    if (t == p || t == *a) continue;
    (orientation(ps, p, *a, t) == Orientation::CCW ? above : below).push_back(t);
  }
  std::sort(above.begin(), above.end(),
            [&](Index s, Index t) { return orientation(ps, p, s, t) == Orientation::CCW; });
  std::sort(below.begin(), below.end(),
            [&](Index s, Index t) { return orientation(ps, p, s, t) == Orientation::CW; });

  Matching m;
  m.edges.push_back({p, *a});
  for (std::size_t i = 1; i < d; ++i) m.edges.push_back({below[i - 1], above[d - i - 1]});
  const std::size_t k = m.size();
  return {std::move(m), make_report(ps, k, Theorem::Deep, static_cast<long long>(d), true)};
}

Matching greedy_polychromatic_matching(const std::vector<Index>& A, const std::vector<Index>& B,
                                       const PointSet& ps) {
  if (!ps.colored()) throw PreconditionError("greedy polychromatic matching needs colors");
  Matching m = greedy_partial(A, B, ps);
  if (m.size() < std::min(A.size(), B.size())) {
    throw InfeasibleError("no bichromatic partner left for the remaining points");
  }
  return m;
}

MatchingResult connected_matching_colored(const PointSet& ps, std::uint64_t seed) {
  if (!ps.colored() || ps.num_colors < 2) {
    throw PreconditionError("colored matching needs at least 2 colors");
  }
  if (ps.size() < 2) throw PreconditionError("need at least 2 points");
  require_valid(ps);
  const int c = ps.num_colors;
  const bool in_range = ps.size() >= colored_threshold(c);

  // Matching across the separator, cut down to the path edge crossed by the
  // most matching edges.
  const auto route = [&](Theorem th) -> std::optional<Matching> {
    Separator sep;
    try {
      sep = th == Theorem::Colored1 ? polychromatic_separating_path_c4(ps, false, seed)
                                    : polychromatic_separator_3edges(ps, false, seed);
    } catch (const ConstructionError&) {
      return std::nullopt;
    }
    if (!sep.polychromatic) return std::nullopt;
    const Matching across = greedy_partial(sep.sideA, sep.sideB, ps);
    std::size_t best_edge = 0, best_count = 0;
    for (std::size_t j = 0; j < sep.edge_count(); ++j) {
      std::size_t count = 0;
      for (const Segment& s : across.edges) count += segments_cross(ps, s, sep.edge(j)) ? 1 : 0;
      if (j == 0 || count > best_count) {
        best_edge = j;
        best_count = count;
      }
    }
    Matching m;
    m.edges.push_back(sep.edge(best_edge));
    for (const Segment& s : across.edges) {
      if (segments_cross(ps, s, sep.edge(best_edge))) m.edges.push_back(s);
    }
    return m;
  };

  std::optional<Matching> best;
  Theorem claimed = Theorem::None;
  Rational claimed_bound(0);
  const auto n = static_cast<long long>(ps.size());
  for (Theorem th : {Theorem::Colored2, Theorem::Colored1}) {
    if (th == Theorem::Colored1 && c < 4) continue;
    auto m = route(th);
    if (!m) continue;
    if (!best || m->size() > best->size()) best = std::move(m);
    const Rational bound = theorem_bound(th, n, c);
    if (claimed == Theorem::None || bound > claimed_bound) {
      claimed = th;
      claimed_bound = bound;
    }
  }

  if (!best) {
    // Neither construction went through: any bichromatic edge is connected.
    Matching m;
    for (Index j = 1; j < ps.size(); ++j) {
      if (ps.color(j) != ps.color(0)) {
        m.edges.push_back({0, j});
        break;
      }
    }
    const std::size_t k = m.size();
    return {std::move(m), make_report(ps, k, Theorem::None, 0, false)};
  }
  const std::size_t k = best->size();
  return {std::move(*best), make_report(ps, k, claimed, 0, in_range)};
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Uncolored: return "uncolored";
    case Method::Deep: return "deep";
    case Method::Colored: return "colored";
  }
  return "auto";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::Auto, Method::Uncolored, Method::Deep, Method::Colored}) {
    if (method_name(m) == name) return m;
  }
  throw PreconditionError("unknown method: " + name);
}

MatchingResult solve(const PointSet& ps, Method method, std::uint64_t seed) {
  switch (method) {
    case Method::Uncolored: return connected_matching_uncolored(ps, seed);
    case Method::Deep: return deep_point_matching(ps);
    case Method::Colored: return connected_matching_colored(ps, seed);
    case Method::Auto: break;
  }
  if (ps.colored()) return connected_matching_colored(ps, seed);
  MatchingResult a = connected_matching_uncolored(ps, seed);
  MatchingResult b = deep_point_matching(ps);
  return b.matching.size() > a.matching.size() ? b : a;
}

}  // namespace cm
