#include "planesum/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "planesum/errors.hpp"

namespace planesum {

namespace {

using Edge = std::pair<Point, Point>;

Triangle ccw_triangle(Point a, Point b, Point c) {
  if (orientation(a, b, c) < 0) std::swap(b, c);
  return {a, b, c};
}

// Splits every triangle that contains p strictly inside or in the relative
// interior of one of its edges. Returns false when p lies outside them all.
bool insert_inside(std::vector<Triangle>& tris, Point p) {
  std::vector<Triangle> added;
  bool hit = false;
  for (auto it = tris.begin(); it != tris.end();) {
    const Triangle t = *it;
    const int o[3] = {orientation(t.a, t.b, p), orientation(t.b, t.c, p), orientation(t.c, t.a, p)};
    const int zeros = (o[0] == 0) + (o[1] == 0) + (o[2] == 0);
    const bool none_negative = o[0] >= 0 && o[1] >= 0 && o[2] >= 0;
    if (!none_negative || zeros > 1) {
      ++it;
      continue;
    }
    hit = true;
    it = tris.erase(it);
    if (zeros == 0) {
      added.push_back({t.a, t.b, p});
      added.push_back({t.b, t.c, p});
      added.push_back({t.c, t.a, p});
    } else {
      // p on edge (u, v) with opposite vertex w.
      const Point verts[3] = {t.a, t.b, t.c};
      const int k = o[0] == 0 ? 0 : (o[1] == 0 ? 1 : 2);
      const Point u = verts[k];
      const Point v = verts[(k + 1) % 3];
      const Point w = verts[(k + 2) % 3];
      added.push_back({u, p, w});
      added.push_back({p, v, w});
    }
  }
  tris.insert(tris.end(), added.begin(), added.end());
  return hit;
}

void insert_outside(std::vector<Triangle>& tris, Point p) {
  std::vector<Edge> edges;
  edges.reserve(3 * tris.size());
  for (const Triangle& t : tris) {
    edges.emplace_back(t.a, t.b);
    edges.emplace_back(t.b, t.c);
    edges.emplace_back(t.c, t.a);
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [u, v] : edges) {
    if (std::binary_search(sorted.begin(), sorted.end(), Edge{v, u})) continue;  // shared edge
    if (orientation(u, v, p) < 0) tris.push_back({v, u, p});
  }
}

}  // namespace

std::int64_t tr_euler(const HullDecomposition& d) {
  return static_cast<std::int64_t>(d.b()) + 2 * static_cast<std::int64_t>(d.i()) - 2;
}

std::int64_t tr_euler(const PointSet& s) { return tr_euler(classify_points(s)); }

Triangulation triangulate_explicit(const PointSet& s) {
  if (is_collinear(s)) throw CollinearInput();

  const auto pts = s.points();
  std::size_t third = 2;
  while (orientation(pts[0], pts[1], pts[third]) == 0) ++third;

  Triangulation out;
  out.triangles.push_back(ccw_triangle(pts[0], pts[1], pts[third]));
  for (std::size_t k = 2; k < pts.size(); ++k) {
    if (k == third) continue;
    if (!insert_inside(out.triangles, pts[k])) insert_outside(out.triangles, pts[k]);
  }
  return out;
}

Wide twice_hull_area(const PointSet& s) {
  if (is_collinear(s)) throw CollinearInput();
  const auto hull = convex_hull(s);
  Wide area = 0;
  for (std::size_t k = 0; k < hull.size(); ++k) area += cross(hull[k], hull[(k + 1) % hull.size()]);
  return area;
}

Wide lattice_points_in_hull(const PointSet& s) {
  if (s.size() <= 2) {
    if (s.size() < 2) return static_cast<Wide>(s.size());
    const Point e = s[1] - s[0];
    return Wide{std::gcd(e.x, e.y)} + 1;
  }
  if (is_collinear(s)) {
    const Point e = s[s.size() - 1] - s[0];
    return Wide{std::gcd(e.x, e.y)} + 1;
  }
  // Pick: 2A = 2I + B - 2, so I + B = (2A + B + 2) / 2.
  const auto hull = convex_hull(s);
  Wide on_boundary = 0;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const Point e = hull[(k + 1) % hull.size()] - hull[k];
    on_boundary += std::gcd(e.x, e.y);
  }
  return (twice_hull_area(s) + on_boundary + 2) / 2;
}

bool is_lattice_saturated(const PointSet& s) {
  if (is_collinear(s)) throw CollinearInput();
  return lattice_points_in_hull(s) == static_cast<Wide>(s.size());
}

}  // namespace planesum
