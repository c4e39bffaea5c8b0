#pragma once

#include <optional>
#include <vector>

#include "planesum/point.hpp"

namespace planesum {

/// Sign of (q - p) x (r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(Point p, Point q, Point r);

/// True if p lies on the closed segment [a, b].
bool on_segment(Point a, Point b, Point p);

/// True if all points of s lie on one line (trivially so for |s| <= 2).
bool is_collinear(const PointSet& s);

/// Corners of [s] in counterclockwise order, starting at the lexicographic
/// minimum. A collinear set yields its two extreme points, a singleton itself.
std::vector<Point> convex_hull(const PointSet& s);

/// Split of a non-collinear set into the points on the boundary of its convex
/// hull and the points strictly inside.
struct HullDecomposition {
  std::vector<Point> hull_vertices;   ///< corners, CCW from the lexicographic minimum
  std::vector<Point> boundary_cycle;  ///< every boundary point of the set, CCW, same start
  PointSet boundary;
  PointSet interior;

  std::size_t b() const noexcept { return boundary.size(); }
  std::size_t i() const noexcept { return interior.size(); }
  std::size_t size() const noexcept { return b() + i(); }
  bool contains(Point p) const { return boundary.contains(p) || interior.contains(p); }
};

/// Throws CollinearInput when s is collinear (which includes |s| < 3).
HullDecomposition classify_points(const PointSet& s);

/// Outward normal of the directed hull edge from -> to (interior on the left).
Direction edge_normal(Point from, Point to);

/// Points of s maximizing u . x.
PointSet support_set(const PointSet& s, Direction u);

/// Closed counterclockwise range of exterior normals at a boundary point.
/// lo == hi for a point in the relative interior of a hull edge.
struct NormalCone {
  Point at;
  Direction lo;
  Direction hi;

  bool contains(Direction u) const;
  friend bool operator==(const NormalCone&, const NormalCone&) = default;
};

/// Empty optional for interior points; throws PointNotInSet if p is not in
/// the decomposed set.
std::optional<NormalCone> normal_cone(const HullDecomposition& d, Point p);

/// Cones of every boundary point, in boundary_cycle order.
std::vector<NormalCone> boundary_cones(const HullDecomposition& d);

/// Endpoints are inclusive.
bool cones_intersect(const NormalCone& c1, const NormalCone& c2);

/// True if v is parallel to some edge of the hull described by `hull`.
bool parallel_to_hull_edge(const std::vector<Point>& hull, Direction v);

/// First primitive direction, in a fixed enumeration order, that is parallel
/// to no hull edge of [a] or [b]. The order runs by max(|dx|,|dy|), then dx,
/// then |dy|, positive dy first, over one representative of each +-v pair:
/// (0,1), (1,0), (1,1), (1,-1), (1,2), (1,-2), (2,1), (2,-1), ...
Direction generic_direction(const PointSet& a, const PointSet& b);

/// The hull boundary split by its leftmost and rightmost vertices when the
/// sweep direction v points up. "Right" is w = (v.dy, -v.dx).
struct ArcDecomposition {
  Direction v;
  Point l;
  Point r;
  PointSet upp;
  PointSet low;
};

/// Throws DirectionNotGeneric if v is parallel to a hull edge.
ArcDecomposition arc_decomposition(const HullDecomposition& d, Direction v);
ArcDecomposition arc_decomposition(const PointSet& s, Direction v);

/// Equality condition for |C + D| = |C| + |D| - 1 on parallel lines: true
/// when either set is a singleton or both are arithmetic progressions with
/// the same difference vector. Throws NotCollinear.
bool is_ap_same_difference(const PointSet& c, const PointSet& d);

}  // namespace planesum
