#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cm/types.hpp"

namespace cm {

using Wide = __int128;

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

constexpr Orientation operator-(Orientation o) {
  return static_cast<Orientation>(-static_cast<int>(o));
}

constexpr Wide cross(Point a, Point b) {
  return Wide{a.x} * b.y - Wide{a.y} * b.x;
}

constexpr Wide dot(Point a, Point b) { return Wide{a.x} * b.x + Wide{a.y} * b.y; }

/// Exact sign of (q - p) x (r - p).
constexpr Orientation orientation(Point p, Point q, Point r) {
  const Wide c = cross(q - p, r - p);
  return c > 0 ? Orientation::CCW : (c < 0 ? Orientation::CW : Orientation::Collinear);
}

inline Orientation orientation(const PointSet& ps, Index p, Index q, Index r) {
  return orientation(ps[p], ps[q], ps[r]);
}

/// Closed-segment intersection test. Segments sharing an endpoint intersect.
bool segments_cross(Point a, Point b, Point c, Point d);
bool segments_cross(const PointSet& ps, Segment s, Segment t);

/// True if the direction of `a` comes strictly before the direction of `b`
/// when sweeping counterclockwise from the positive x-axis. Both vectors must
/// be nonzero. Uses a half-plane split and one cross product; no angles.
constexpr bool direction_less(Point a, Point b) {
  const auto upper = [](Point v) { return v.y > 0 || (v.y == 0 && v.x > 0); };
  const bool ua = upper(a);
  const bool ub = upper(b);
  if (ua != ub) return ua;
  return cross(a, b) > 0;
}

// ---------------------------------------------------------------------------
// k-selection

namespace detail {

template <class T, class Less>
void insertion_sort(std::span<T> v, Less& less) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    T x = std::move(v[i]);
    std::size_t j = i;
    for (; j > 0 && less(x, v[j - 1]); --j) v[j] = std::move(v[j - 1]);
    v[j] = std::move(x);
  }
}

// Three-way partition of v around `pivot`. Returns [lt, gt): the block of
// elements equivalent to the pivot.
template <class T, class Less>
std::pair<std::size_t, std::size_t> partition3(std::span<T> v, const T& pivot, Less& less) {
  std::size_t lt = 0, i = 0, gt = v.size();
  while (i < gt) {
    if (less(v[i], pivot)) {
      std::swap(v[lt++], v[i++]);
    } else if (less(pivot, v[i])) {
      std::swap(v[i], v[--gt]);
    } else {
      ++i;
    }
  }
  return {lt, gt};
}

template <class T, class Less>
void select_in_place_impl(std::span<T> v, std::size_t k, Less& less);

// Median of medians of groups of five; reorders v.
template <class T, class Less>
T median_of_medians(std::span<T> v, Less& less) {
  const std::size_t n = v.size();
  std::size_t m = 0;
  for (std::size_t g = 0; g < n; g += 5) {
    auto group = v.subspan(g, std::min<std::size_t>(5, n - g));
    insertion_sort(group, less);
    std::swap(v[m++], group[group.size() / 2]);
  }
  auto medians = v.first(m);
  select_in_place_impl(medians, m / 2, less);
  return medians[m / 2];
}

template <class T, class Less>
void select_in_place_impl(std::span<T> v, std::size_t k, Less& less) {
  // Introselect: median-of-three pivots until the depth budget runs out, then
  // median of medians, which keeps the worst case linear.
  int budget = 2 * static_cast<int>(std::bit_width(v.size()));
  std::size_t lo = 0, hi = v.size();
  while (hi - lo > 16) {
    auto w = v.subspan(lo, hi - lo);
    T pivot;
    if (budget-- > 0) {
      const T& a = w.front();
      const T& b = w[w.size() / 2];
      const T& c = w.back();
      if (less(a, b)) {
        pivot = less(b, c) ? b : (less(a, c) ? c : a);
      } else {
        pivot = less(a, c) ? a : (less(b, c) ? c : b);
      }
    } else {
      pivot = median_of_medians(w, less);
    }
    auto [lt, gt] = partition3(w, pivot, less);
    const std::size_t rel = k - lo;
    if (rel < lt) {
      hi = lo + lt;
    } else if (rel < gt) {
      return;
    } else {
      lo += gt;
    }
  }
  insertion_sort(v.subspan(lo, hi - lo), less);
}

}  // namespace detail

/// Reorders `items` so that items[k - 1] holds the element of rank k (1-based)
/// and every element before it is not greater. Only `less` is used.
template <class T, class Less>
void select_in_place(std::span<T> items, std::size_t k, Less less) {
  if (items.empty() || k < 1 || k > items.size()) {
    throw RankError("select: rank out of range");
  }
  detail::select_in_place_impl(items, k - 1, less);
}

/// Element of rank k (1-based) in non-decreasing order.
template <class T, class Less>
T select_kth(std::span<const T> items, Less less, std::size_t k) {
  std::vector<T> work(items.begin(), items.end());
  select_in_place(std::span<T>(work), k, less);
  return work[k - 1];
}

// ---------------------------------------------------------------------------
// Hulls and rays

/// Extreme points of `subset` in counterclockwise order, starting at the
/// lexicographically smallest point.
std::vector<Index> convex_hull(const PointSet& ps, std::span<const Index> subset);
std::vector<Index> convex_hull(const PointSet& ps);

struct HullVertex {
  Index index;
  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

/// Hull edge; `first` lies to the left of the ray and `second` to its right.
struct HullEdge {
  Index first;
  Index second;
  friend bool operator==(const HullEdge&, const HullEdge&) = default;
};

using RayHullHit = std::variant<HullVertex, HullEdge>;

/// Hull feature containing the last point where the ray from `origin` along
/// `direction` leaves CH(subset). Solved as a two-variable linear program by
/// randomized incremental construction in the ray's frame; all tests are
/// orientation signs in the original coordinates.
RayHullHit last_ray_hull_intersection(const PointSet& ps, std::span<const Index> subset,
                                      Point origin, Point direction, std::uint64_t seed = 0);
RayHullHit last_ray_hull_intersection(const PointSet& ps, Point origin, Point direction,
                                      std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Depth and general position

/// Minimum, over lines through point i, of the number of points strictly on
/// one side. O(n log n).
std::size_t point_depth(const PointSet& ps, Index i);

struct CollinearTriple {
  Index a, b, c;
};

/// Some collinear triple or duplicated pair (c == b), if any. O(n^2 log n).
std::optional<CollinearTriple> find_collinear_triple(const PointSet& ps);
bool is_general_position(const PointSet& ps);

bool within_coord_limit(Point p);

/// Throws PreconditionError unless ps has in-range coordinates, distinct
/// points in general position and (if colored) a balanced coloring. Skips the
/// general-position scan when ps.gp is already Verified or Assumed.
void require_valid(const PointSet& ps);

/// True when all color class sizes differ by at most one.
bool is_balanced(const PointSet& ps);

}  // namespace cm
