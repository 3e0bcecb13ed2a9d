#include "cm/verify.hpp"

#include <numeric>
#include <optional>
#include <vector>

#include "cm/geom.hpp"

namespace cm {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_str(const Segment& s) {
  return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
}

}  // namespace

bool is_matching(const PointSet& ps, const Matching& m) {
  std::vector<char> used(ps.size(), 0);
  for (const Segment& s : m.edges) {
    if (s.a >= ps.size() || s.b >= ps.size() || s.a == s.b) return false;
    if (used[s.a] || used[s.b]) return false;
    used[s.a] = used[s.b] = 1;
  }
  return true;
}

bool is_connected(const PointSet& ps, const Matching& m) {
  const std::size_t k = m.size();
  if (k <= 1) return true;
  UnionFind uf(k);
  std::size_t parts = k;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (segments_cross(ps, m.edges[i], m.edges[j]) && uf.unite(i, j)) --parts;
    }
  }
  return parts == 1;
}

bool is_polychromatic(const PointSet& ps, const Matching& m) {
  for (const Segment& s : m.edges) {
    if (!ps.colored() || ps.color(s.a) == ps.color(s.b)) return false;
  }
  return true;
}

std::string describe_matching_problem(const PointSet& ps, const Matching& m, bool colored) {
  std::vector<std::optional<std::size_t>> owner(ps.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Segment& s = m.edges[i];
    if (s.a >= ps.size() || s.b >= ps.size()) return "index out of range in edge " + edge_str(s);
    if (s.a == s.b) return "loop edge " + edge_str(s);
    for (Index p : {s.a, s.b}) {
      if (owner[p]) {
        return "point " + std::to_string(p) + " is shared by edges " +
               edge_str(m.edges[*owner[p]]) + " and " + edge_str(s);
      }
      owner[p] = i;
    }
  }
  if (colored) {
    for (const Segment& s : m.edges) {
      if (!ps.colored() || ps.color(s.a) == ps.color(s.b)) {
        return "edge " + edge_str(s) + " is monochromatic";
      }
    }
  }
  if (!is_connected(ps, m)) return "segments do not form a connected set";
  return {};
}

bool check_separator(const PointSet& ps, const Separator& s, std::size_t k, bool exhaustive) {
  const std::size_t n = ps.size();
  if (s.path.size() < 2 || s.path.size() > 4) return false;
  if (s.sideA.size() < k || s.sideB.size() < k) return false;
  std::vector<int> role(n, -1);
  const auto claim = [&](const std::vector<Index>& v, int r) {
    for (Index t : v) {
      if (t >= n || role[t] != -1) return false;
      role[t] = r;
    }
    return true;
  };
  if (!claim(s.path, 0) || !claim(s.sideA, 1) || !claim(s.sideB, 2)) return false;
  for (int r : role) {
    if (r == -1) return false;
  }
  if (s.polychromatic) {
    if (!ps.colored()) return false;
    for (std::size_t i = 0; i + 1 < s.path.size(); ++i) {
      if (ps.color(s.path[i]) == ps.color(s.path[i + 1])) return false;
    }
  }
  if (exhaustive) {
    for (Index a : s.sideA) {
      for (Index b : s.sideB) {
        bool met = false;
        for (std::size_t e = 0; e + 1 < s.path.size() && !met; ++e) {
          met = segments_cross(ps[a], ps[b], ps[s.path[e]], ps[s.path[e + 1]]);
        }
        if (!met) return false;
      }
    }
  }
  return true;
}

bool check_separator(const PointSet& ps, const Separator& s, std::size_t k) {
  return check_separator(ps, s, k, ps.size() <= kExhaustiveSeparatorLimit);
}

bool check_bound_report(const BoundReport& r) {
  Rational expected;
  try {
    expected = theorem_bound(r.theorem, static_cast<long long>(r.n), r.c, r.depth);
  } catch (const PreconditionError&) {
    return false;
  }
  if (expected != r.guaranteed) return false;
  if (!r.applies) return true;
  const long long need = ceil_of(r.guaranteed);
  return static_cast<long long>(r.achieved) >= need;
}

}  // namespace cm
