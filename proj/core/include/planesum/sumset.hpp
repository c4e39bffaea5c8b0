#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planesum/point.hpp"

namespace planesum {

/// A sum point together with every pair (a, b) that produces it.
struct SumWitness {
  Point point;
  std::vector<std::pair<Point, Point>> reps;
};

/// A + B, deduplicated and lexicographically ordered. Throws
/// CoordinateOverflow if a sum leaves the coordinate range.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

struct UniqueRepresentation {
  bool unique = true;
  /// The lexicographically smallest sum point with two or more
  /// representations, when one exists.
  std::optional<SumWitness> witness;
};

UniqueRepresentation unique_representation(const PointSet& a, const PointSet& b);

/// Translate of s whose lexicographic minimum is the origin.
PointSet canonical_translate(const PointSet& s);

bool is_translate_of(const PointSet& x, const PointSet& y);

}  // namespace planesum
