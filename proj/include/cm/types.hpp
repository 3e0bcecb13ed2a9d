#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cm {

using Index = std::size_t;
using Coord = std::int64_t;

/// Largest admissible absolute coordinate. Orientation determinants of points
/// within this bound fit comfortably in 128-bit intermediates.
inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }

/// Segment between two points of a PointSet, stored by index.
struct Segment {
  Index a = 0;
  Index b = 0;

  friend constexpr bool operator==(const Segment&, const Segment&) = default;
  friend constexpr auto operator<=>(const Segment&, const Segment&) = default;
};

/// Straight-line matching: segments with pairwise-disjoint endpoints.
struct Matching {
  std::vector<Segment> edges;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
};

enum class GeneralPosition : std::uint8_t {
  Unknown,   // not checked yet
  Verified,  // exhaustively checked
  Assumed,   // generator guarantees it with overwhelming probability
};

/// Indexed planar point set with an optional balanced coloring.
struct PointSet {
  std::vector<Point> points;
  std::vector<int> colors;  // empty when uncolored
  int num_colors = 0;       // 0 means uncolored
  GeneralPosition gp = GeneralPosition::Unknown;

  std::size_t size() const { return points.size(); }
  bool colored() const { return num_colors > 0; }
  const Point& operator[](Index i) const { return points[i]; }
  int color(Index i) const { return colored() ? colors[i] : 0; }
};

// Error taxonomy. Callers distinguish them by type; the CLI maps all of
// them to the usage/precondition exit code.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RankError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct NoIntersectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A constructive step whose existence argument needs "sufficiently large n"
/// found no candidate on this input.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cm
