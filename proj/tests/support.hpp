#pragma once

// Independent oracles and seeded generators shared by the test suites. None
// of these call the library routine they are used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "planesum/point.hpp"
#include "planesum/triangulation.hpp"

namespace planesum::test {

inline std::int64_t orient(Point p, Point q, Point r) {
  const Wide c = Wide{q.x - p.x} * (r.y - p.y) - Wide{q.y - p.y} * (r.x - p.x);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

inline bool all_collinear(const std::vector<Point>& pts) {
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (orient(pts[0], pts[1], pts[i]) != 0) return false;
  }
  return true;
}

// p is on the hull boundary iff some line through p and another point of s
// has all of s in one closed half-plane.
inline bool brute_on_boundary(const PointSet& s, Point p) {
  for (const Point& q : s) {
    if (q == p) continue;
    bool left = true;
    bool right = true;
    for (const Point& r : s) {
      const auto o = orient(p, q, r);
      if (o < 0) left = false;
      if (o > 0) right = false;
    }
    if (left || right) return true;
  }
  return false;
}

// Gift wrapping: hull corners in counterclockwise order.
inline std::vector<Point> jarvis_hull(const PointSet& s) {
  std::vector<Point> hull;
  const Point start = *std::min_element(s.begin(), s.end());
  Point cur = start;
  do {
    hull.push_back(cur);
    Point next = cur == s[0] ? s[1] : s[0];
    for (const Point& r : s) {
      if (r == cur) continue;
      const auto o = orient(cur, next, r);
      const auto far = [&](Point a) { return Wide{a.x - cur.x} * (a.x - cur.x) + Wide{a.y - cur.y} * (a.y - cur.y); };
      if (o < 0 || (o == 0 && far(r) > far(next))) next = r;
    }
    cur = next;
  } while (cur != start);
  return hull;
}

inline Wide shoelace2(const std::vector<Point>& poly) {
  Wide a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point p = poly[i];
    const Point q = poly[(i + 1) % poly.size()];
    a += Wide{p.x} * q.y - Wide{q.x} * p.y;
  }
  return a < 0 ? -a : a;
}

inline bool in_closed_convex(const std::vector<Point>& ccw, Point p) {
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    if (orient(ccw[i], ccw[(i + 1) % ccw.size()], p) < 0) return false;
  }
  return true;
}

// Integer points of the closed hull by scanning the bounding box.
inline std::vector<Point> brute_lattice_points(const PointSet& s) {
  const auto hull = jarvis_hull(s);
  Coord x0 = s[0].x, x1 = s[0].x, y0 = s[0].y, y1 = s[0].y;
  for (const Point& p : s) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  std::vector<Point> out;
  for (Coord x = x0; x <= x1; ++x) {
    for (Coord y = y0; y <= y1; ++y) {
      if (in_closed_convex(hull, {x, y})) out.push_back({x, y});
    }
  }
  return out;
}

inline Wide tri2(const Triangle& t) {
  return Wide{t.b.x - t.a.x} * (t.c.y - t.a.y) - Wide{t.b.y - t.a.y} * (t.c.x - t.a.x);
}

// Closed-side test for separating axis: all of `other` on or right of a->b.
inline bool separates(Point a, Point b, const Triangle& other) {
  return orient(a, b, other.a) <= 0 && orient(a, b, other.b) <= 0 && orient(a, b, other.c) <= 0;
}

inline bool interiors_disjoint(const Triangle& s, const Triangle& t) {
  const Point sv[3] = {s.a, s.b, s.c};
  const Point tv[3] = {t.a, t.b, t.c};
  for (int i = 0; i < 3; ++i) {
    if (separates(sv[i], sv[(i + 1) % 3], t)) return true;
    if (separates(tv[i], tv[(i + 1) % 3], s)) return true;
  }
  return false;
}

// Nonempty string on failure naming the first violated property.
inline std::string triangulation_violation(const PointSet& s, const Triangulation& tri) {
  std::set<Point> used;
  Wide area = 0;
  for (const Triangle& t : tri.triangles) {
    if (tri2(t) <= 0) return "triangle not counterclockwise";
    for (Point v : {t.a, t.b, t.c}) {
      if (!s.contains(v)) return "vertex outside the set";
      used.insert(v);
    }
    area += tri2(t);
    for (const Point& p : s) {
      if (p == t.a || p == t.b || p == t.c) continue;
      if (orient(t.a, t.b, p) >= 0 && orient(t.b, t.c, p) >= 0 && orient(t.c, t.a, p) >= 0) {
        return "set point inside or on a triangle";
      }
    }
  }
  if (used.size() != s.size()) return "set point unused";
  if (area != shoelace2(jarvis_hull(s))) return "areas do not add up to the hull";
  for (std::size_t i = 0; i < tri.triangles.size(); ++i) {
    for (std::size_t j = i + 1; j < tri.triangles.size(); ++j) {
      if (!interiors_disjoint(tri.triangles[i], tri.triangles[j])) return "overlapping triangles";
    }
  }
  return {};
}

// Random subset of the w x h grid with at least 3 non-collinear points.
inline PointSet random_grid_set(std::mt19937_64& rng, int w, int h, std::size_t max_pts = 0) {
  std::vector<Point> cells;
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) cells.push_back({x, y});
  }
  if (max_pts == 0 || max_pts > cells.size()) max_pts = cells.size();
  for (;;) {
    std::shuffle(cells.begin(), cells.end(), rng);
    const std::size_t k = 3 + rng() % (max_pts - 2);
    std::vector<Point> pick(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(k));
    if (!all_collinear(pick)) return PointSet(pick);
  }
}

// Random convex lattice polygon vertices: hull of a few random points in a box.
inline PointSet random_polygon(std::mt19937_64& rng, int box) {
  for (;;) {
    std::vector<Point> pts;
    const int n = 3 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      pts.push_back({static_cast<Coord>(rng() % (box + 1)), static_cast<Coord>(rng() % (box + 1))});
    }
    const PointSet s(pts);
    if (s.size() >= 3 && !all_collinear({s.begin(), s.end()})) {
      const auto hull = jarvis_hull(s);
      return PointSet(hull);
    }
  }
}

}  // namespace planesum::test
