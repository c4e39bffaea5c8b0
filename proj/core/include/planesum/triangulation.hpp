#pragma once

#include <cstdint>
#include <vector>

#include "planesum/geometry.hpp"
#include "planesum/point.hpp"

namespace planesum {

/// Nondegenerate counterclockwise triangle.
struct Triangle {
  Point a;
  Point b;
  Point c;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct Triangulation {
  std::vector<Triangle> triangles;
};

/// Triangle count of any triangulation of [s] that uses every point of s as
/// a vertex: b + 2i - 2.
std::int64_t tr_euler(const HullDecomposition& d);
std::int64_t tr_euler(const PointSet& s);

/// Builds one such triangulation explicitly by incremental insertion in
/// lexicographic order. Throws CollinearInput.
Triangulation triangulate_explicit(const PointSet& s);

/// Twice the area of [s] (shoelace). Throws CollinearInput.
Wide twice_hull_area(const PointSet& s);

/// Number of integer points in the closed convex hull of s.
Wide lattice_points_in_hull(const PointSet& s);

/// True if s contains every integer point of [s]. Throws CollinearInput.
bool is_lattice_saturated(const PointSet& s);

}  // namespace planesum
