#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cm/separator.hpp"
#include "cm/types.hpp"

namespace cm {

/// Points file: first line "n c" (c = 0 uncolored), then n lines "x y" or
/// "x y color". Lines starting with '#' are ignored. Throws PreconditionError
/// on malformed input.
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const PointSet& ps);

/// Matching file: one "i j" line per edge, then "# size=K".
Matching read_matching(std::istream& in);
Matching read_matching_file(const std::string& path);
void write_matching(std::ostream& out, const Matching& m);

/// Standalone SVG: points as circles filled by color class, matching edges as
/// lines, the separator path (if any) dashed. y grows upwards.
std::string render_svg(const PointSet& ps, const Matching* m, const Separator* sep);

}  // namespace cm
