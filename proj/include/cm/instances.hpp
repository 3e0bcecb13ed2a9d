#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cm/types.hpp"

namespace cm {

inline constexpr Coord kDefaultCoordMax = Coord{1} << 24;

/// Largest n the exhaustive oracle accepts.
inline constexpr std::size_t kOracleLimit = 14;

/// Random sets up to this size are checked for general position exactly;
/// larger ones are marked GeneralPosition::Assumed.
inline constexpr std::size_t kRandomVerifyLimit = 4096;

enum class Kind { Windmill3, Windmill4, Random, Convex, HexCenter };

std::string kind_name(Kind k);
/// Throws PreconditionError on unknown names.
Kind parse_kind(const std::string& name);

struct GenSpec {
  Kind kind = Kind::Random;
  std::size_t n = 0;
  int c = 0;  // 0 = uncolored
  std::uint64_t seed = 0;
  Coord coord_max = kDefaultCoordMax;
};

/// Three blades at 120 degrees, each a slightly bent arc. Segments split into
/// three non-crossing parts, so no connected matching exceeds ceil((n-1)/3).
/// Blade properties are checked exhaustively for n <= 60.
PointSet windmill_uncolored(std::size_t n, Coord coord_max = kDefaultCoordMax);

/// Four blades at 90 degrees, blades 0 and 2 colored 0, blades 1 and 3
/// colored 1; bichromatic segments of different blade pairs never cross.
PointSet windmill_bicolored(std::size_t n, Coord coord_max = kDefaultCoordMax);

/// Blade index of every point of a windmill of n points with `blades` blades.
std::vector<int> windmill_blades(std::size_t n, int blades);

PointSet random_general_position(std::size_t n, std::uint64_t seed,
                                 Coord coord_max = kDefaultCoordMax);

/// Copy of ps with a uniformly random balanced c-coloring.
PointSet random_balanced_coloring(const PointSet& ps, int c, std::uint64_t seed);

/// n points on a parabola, in shuffled order.
PointSet convex_position(std::size_t n, std::uint64_t seed, Coord coord_max = kDefaultCoordMax);

/// Regular (n-1)-gon plus a point near its center.
PointSet polygon_with_center(std::size_t n, std::uint64_t seed,
                             Coord coord_max = kDefaultCoordMax);

/// Dispatch on spec.kind; colors the result when spec.c > 0 (windmill4
/// requires c == 2 and carries its own coloring).
PointSet generate(const GenSpec& spec);

struct OracleResult {
  std::size_t size = 0;
  Matching matching;
};

/// Exact maximum connected matching (bichromatic edges only when colored) by
/// exhaustive search. Throws SizeLimitError above kOracleLimit points.
OracleResult oracle_max_connected_matching(const PointSet& ps);

}  // namespace cm
