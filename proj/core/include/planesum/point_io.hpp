#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "planesum/point.hpp"

namespace planesum {

/// Largest absolute coordinate accepted from text input.
inline constexpr Coord kInputCoordinateCap = Coord{1} << 20;

struct ParsedPointSet {
  PointSet points;
  std::vector<std::string> warnings;
};

/// Parses the .pts format: one point per line as two signed decimal
/// integers separated by whitespace. Lines whose first non-blank character is
/// '#' are comments; blank lines are ignored. Duplicates are dropped with a
/// warning. Throws ParseError.
ParsedPointSet parse_point_set(std::string_view text);

/// One "x y" line per point in canonical order.
std::string serialize_point_set(const PointSet& s);

/// Throws IoError or ParseError.
ParsedPointSet read_point_set_file(const std::filesystem::path& path);

/// Single-token form used inside report records: "x,y;x,y;...".
std::string to_compact(const PointSet& s);
/// Throws ParseError (line 1) on malformed input.
PointSet parse_compact(std::string_view text);

}  // namespace planesum
