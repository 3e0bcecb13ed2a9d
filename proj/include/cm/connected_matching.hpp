#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cm/separator.hpp"
#include "cm/types.hpp"

namespace cm {

using Rational = boost::rational<long long>;

long long ceil_of(const Rational& r);

/// Guaranteed size of a connected matching across a segment with a points on
/// one side and b <= a on the other.
Rational m_bound(long long a, long long b);

enum class Theorem {
  None,       // no size guarantee claimed
  Uncolored,  // (5n + 1) / 27
  Deep,       // depth of the deepest point
  Colored1,   // (c - 3) n / (6c) - 1/2, c >= 4
  Colored2,   // (c - 1) n / (9c) - 1/3, c >= 2
};

std::string theorem_name(Theorem t);

/// Lower bound stated by `t` for n points and c colors. `depth` is only used
/// by Theorem::Deep.
Rational theorem_bound(Theorem t, long long n, long long c, long long depth = 0);

struct BoundReport {
  std::size_t n = 0;
  int c = 0;
  std::size_t achieved = 0;
  Rational guaranteed{0};
  Theorem theorem = Theorem::None;
  long long depth = 0;     // Theorem::Deep only
  bool applies = true;     // false when the input is below the theorem's range
};

struct MatchingResult {
  Matching matching;
  BoundReport report;
};

/// Connected matching containing uv, of size at least ceil(m(|A|, |B|)).
/// Requires |B| <= |A|, A and B strictly on opposite sides of uv's line and
/// every A-B segment crossing uv. O(1 + a log a).
Matching connected_matching_across_segment(Index u, Index v, const std::vector<Index>& A,
                                           const std::vector<Index>& B, const PointSet& ps);

/// Pairs hull vertex i with vertex i + floor(k/2); all chords cross.
Matching antipodal_connected_matching(const std::vector<Index>& convex_pts);

MatchingResult connected_matching_uncolored(const PointSet& ps, std::uint64_t seed = 0);

/// Connected matching of size at least the largest point depth. Depths are
/// only computed for points whose cheap upper bound can still beat the best
/// found, which is near O(n log n) on spread-out sets and O(n^2 log n) at worst.
MatchingResult deep_point_matching(const PointSet& ps);

/// Bichromatic matching between A and B. Each step takes the color class that
/// is most popular over both sides and pairs one of its points with the most
/// popular other class across. Reaches min(|A|, |B|) edges whenever that is
/// possible at all; otherwise throws InfeasibleError.
Matching greedy_polychromatic_matching(const std::vector<Index>& A, const std::vector<Index>& B,
                                       const PointSet& ps);

MatchingResult connected_matching_colored(const PointSet& ps, std::uint64_t seed = 0);

enum class Method { Auto, Uncolored, Deep, Colored };

std::string method_name(Method m);
/// Throws PreconditionError on unknown names.
Method parse_method(const std::string& name);

/// Runs one pipeline. Auto runs every pipeline that applies (the colored one
/// for colored sets, uncolored and deep otherwise) and keeps the largest.
MatchingResult solve(const PointSet& ps, Method method, std::uint64_t seed = 0);

}  // namespace cm
