#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "holesat/geometry.hpp"

namespace holesat {

// Text format: one point per line as two whitespace-separated integers.
// Lines whose first non-blank character is '#' are comments; blank lines
// are ignored.

std::vector<Point> parse_points(std::istream& in);
PointSet read_point_set(std::istream& in);
PointSet load_point_set(const std::filesystem::path& path);

void write_points(std::ostream& out, const PointSet& s, const std::string& comment = {});
void save_point_set(const std::filesystem::path& path, const PointSet& s,
                    const std::string& comment = {});

}  // namespace holesat
