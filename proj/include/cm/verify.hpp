#pragma once

#include <string>

#include "cm/connected_matching.hpp"
#include "cm/separator.hpp"
#include "cm/types.hpp"

namespace cm {

/// Separators up to this size get the all-pairs crossing check by default.
inline constexpr std::size_t kExhaustiveSeparatorLimit = 60;

/// Valid indices, no loops, pairwise-disjoint endpoints.
bool is_matching(const PointSet& ps, const Matching& m);

/// Intersection graph of the segments is connected (endpoint sharing counts
/// as intersecting). Empty and single-edge matchings are connected.
bool is_connected(const PointSet& ps, const Matching& m);

/// Every edge joins two colors. False for uncolored sets with edges.
bool is_polychromatic(const PointSet& ps, const Matching& m);

/// Empty if m is a connected matching (polychromatic when `colored`);
/// otherwise a one-line description naming the offending indices.
std::string describe_matching_problem(const PointSet& ps, const Matching& m, bool colored);

/// Both sides hold at least k points, path and sides partition P, the
/// polychromatic flag is truthful and, when `exhaustive`, every sideA-sideB
/// segment meets a path edge.
bool check_separator(const PointSet& ps, const Separator& s, std::size_t k, bool exhaustive);
bool check_separator(const PointSet& ps, const Separator& s, std::size_t k);

/// The guarantee matches the theorem's formula exactly and, when the report
/// claims it applies, achieved >= ceil(guarantee).
bool check_bound_report(const BoundReport& r);

}  // namespace cm
