#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cm/types.hpp"

namespace cm {

/// A triangle with m points strictly inside and one weight per vertex.
/// weights[i] bounds the triangle opposite vertex i, i.e. the one formed by
/// the split point and vertices i-1, i+1.
struct TriangleSplitRequest {
  std::array<Index, 3> vertices{};
  std::vector<Index> interior;
  std::array<long long, 3> weights{};
};

/// Points q of the interior such that, for every i, the triangle
/// (vertices[i-1], q, vertices[i+1]) holds at most weights[i] interior points.
/// Requires 0 <= w_i < m and w_0 + w_1 + w_2 > 2m - 3; returns at least
/// w_0 + w_1 + w_2 - 2m + 3 points, in the order they appear in `interior`.
/// Linear time: three selections by angle around each vertex.
std::vector<Index> split_triangle(const TriangleSplitRequest& req, const PointSet& ps);

/// An interior point splitting the triangle into three triangles with at most
/// ceil((2m - 2) / 3) interior points each.
Index balanced_split_point(Index p0, Index p1, Index p2, const std::vector<Index>& interior,
                            const PointSet& ps);

/// A path on 2 to 4 points of P between two extremal points, with the points
/// on either side of it. Path points belong to neither side. sideA is the
/// smaller side; both sides are sorted.
struct Separator {
  std::vector<Index> path;
  std::vector<Index> sideA;
  std::vector<Index> sideB;
  bool polychromatic = false;

  std::size_t edge_count() const { return path.empty() ? 0 : path.size() - 1; }
  Segment edge(std::size_t i) const { return {path[i], path[i + 1]}; }
};

/// ceil((n - 4) / 3)-separating path with one or two edges. Linear time.
Separator separating_path(const PointSet& ps, std::uint64_t seed = 0);

/// Colored pipelines require n >= this before their size bounds are claimed.
std::size_t colored_threshold(int num_colors);

/// Polychromatic separating path with one or two edges whose sides hold at
/// least (c-3)n/(3c) - 3 points each. Requires c >= 4. When `enforce_threshold`
/// is set, n below colored_threshold(c) is a PreconditionError; otherwise the
/// construction is attempted and throws ConstructionError if a step finds no
/// candidate of a suitable color.
Separator polychromatic_separating_path_c4(const PointSet& ps, bool enforce_threshold = true,
                                           std::uint64_t seed = 0);

/// Polychromatic path with at most three edges, possibly self-intersecting,
/// such that every segment between the two sides crosses it; each side holds
/// at least (c-1)n/(3c) - 4 points. Requires c >= 2.
Separator polychromatic_separator_3edges(const PointSet& ps, bool enforce_threshold = true,
                                         std::uint64_t seed = 0);

}  // namespace cm
