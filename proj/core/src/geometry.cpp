#include "planesum/geometry.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <tuple>

#include "planesum/errors.hpp"

namespace planesum {

namespace {

int sign(Wide v) { return (v > 0) - (v < 0); }

Wide cross3(Point p, Point q, Point r) { return cross(q - p, r - p); }

// Monotone chain over sorted input. Keeps collinear points on the boundary
// when keep_collinear is set; the input must then be non-collinear.
std::vector<Point> monotone_chain(std::span<const Point> pts, bool keep_collinear) {
  const std::size_t n = pts.size();
  if (n < 2) return {pts.begin(), pts.end()};
  auto must_pop = [keep_collinear](Wide c) { return keep_collinear ? c < 0 : c <= 0; };

  std::vector<Point> h;
  h.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    while (h.size() >= 2 && must_pop(cross3(h[h.size() - 2], h.back(), pts[i]))) h.pop_back();
    h.push_back(pts[i]);
  }
  const std::size_t lower = h.size() + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (h.size() >= lower && must_pop(cross3(h[h.size() - 2], h.back(), pts[i]))) h.pop_back();
    h.push_back(pts[i]);
  }
  h.pop_back();
  return h;
}

}  // namespace

int orientation(Point p, Point q, Point r) { return sign(cross3(p, q, r)); }

bool on_segment(Point a, Point b, Point p) {
  if (cross3(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool is_collinear(const PointSet& s) {
  if (s.size() <= 2) return true;
  const Point a = s[0];
  const Point b = s[s.size() - 1];
  return std::all_of(s.begin(), s.end(), [&](Point p) { return cross3(a, b, p) == 0; });
}

std::vector<Point> convex_hull(const PointSet& s) {
  if (s.size() <= 2) return {s.begin(), s.end()};
  return monotone_chain(s.points(), false);
}

HullDecomposition classify_points(const PointSet& s) {
  if (is_collinear(s)) throw CollinearInput();

  HullDecomposition d;
  d.boundary_cycle = monotone_chain(s.points(), true);
  const std::size_t m = d.boundary_cycle.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Point prev = d.boundary_cycle[(k + m - 1) % m];
    const Point next = d.boundary_cycle[(k + 1) % m];
    if (cross3(prev, d.boundary_cycle[k], next) != 0) d.hull_vertices.push_back(d.boundary_cycle[k]);
  }

  std::vector<Point> boundary = d.boundary_cycle;
  std::sort(boundary.begin(), boundary.end());
  std::vector<Point> interior;
  interior.reserve(s.size() - boundary.size());
  std::set_difference(s.begin(), s.end(), boundary.begin(), boundary.end(), std::back_inserter(interior));
  d.boundary = PointSet::from_sorted_unique(std::move(boundary));
  d.interior = PointSet::from_sorted_unique(std::move(interior));
  return d;
}

Direction edge_normal(Point from, Point to) {
  const Point e = to - from;
  return {e.y, -e.x};
}

PointSet support_set(const PointSet& s, Direction u) {
  std::vector<Point> out;
  Wide best = 0;
  for (const Point& p : s) {
    const Wide h = dot(u.vec(), p);
    if (out.empty() || h > best) {
      out.clear();
      best = h;
      out.push_back(p);
    } else if (h == best) {
      out.push_back(p);
    }
  }
  return PointSet::from_sorted_unique(std::move(out));
}

bool NormalCone::contains(Direction u) const {
  if (lo == hi) return u == lo;
  // The cone spans less than a half-turn at a corner of a convex polygon.
  return cross(lo.vec(), u.vec()) >= 0 && cross(u.vec(), hi.vec()) >= 0;
}

std::optional<NormalCone> normal_cone(const HullDecomposition& d, Point p) {
  if (d.interior.contains(p)) return std::nullopt;
  if (!d.boundary.contains(p)) throw PointNotInSet("point is not in the decomposed set");
  const auto& cyc = d.boundary_cycle;
  const std::size_t m = cyc.size();
  const std::size_t k = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), p) - cyc.begin());
  return NormalCone{p, edge_normal(cyc[(k + m - 1) % m], p), edge_normal(p, cyc[(k + 1) % m])};
}

std::vector<NormalCone> boundary_cones(const HullDecomposition& d) {
  const auto& cyc = d.boundary_cycle;
  const std::size_t m = cyc.size();
  std::vector<NormalCone> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.push_back({cyc[k], edge_normal(cyc[(k + m - 1) % m], cyc[k]), edge_normal(cyc[k], cyc[(k + 1) % m])});
  }
  return out;
}

bool cones_intersect(const NormalCone& c1, const NormalCone& c2) {
  // Two arcs of the circle meet iff one of them contains the start of the other.
  return c1.contains(c2.lo) || c2.contains(c1.lo);
}

bool parallel_to_hull_edge(const std::vector<Point>& hull, Direction v) {
  const std::size_t m = hull.size();
  if (m < 2) return false;
  for (std::size_t k = 0; k < m; ++k) {
    if (cross(hull[(k + 1) % m] - hull[k], v.vec()) == 0) return true;
  }
  return false;
}

Direction generic_direction(const PointSet& a, const PointSet& b) {
  const auto hull_a = convex_hull(a);
  const auto hull_b = convex_hull(b);
  for (Coord m = 1;; ++m) {
    std::vector<std::tuple<Coord, Coord, int>> ring;  // (dx, |dy|, 0 for +dy / 1 for -dy)
    for (Coord dx = 0; dx <= m; ++dx) {
      const Coord top = dx < m ? m : 0;
      for (Coord ady = top; ady <= m; ++ady) {
        if (std::gcd(dx, ady) != 1) continue;
        ring.emplace_back(dx, ady, 0);
        if (dx != 0 && ady != 0) ring.emplace_back(dx, ady, 1);
      }
    }
    std::sort(ring.begin(), ring.end());
    for (const auto& [dx, ady, neg] : ring) {
      const Direction v{dx, neg ? -ady : ady};
      if (!parallel_to_hull_edge(hull_a, v) && !parallel_to_hull_edge(hull_b, v)) return v;
    }
  }
}

ArcDecomposition arc_decomposition(const HullDecomposition& d, Direction v) {
  if (parallel_to_hull_edge(d.hull_vertices, v)) {
    throw DirectionNotGeneric("sweep direction is parallel to a hull edge");
  }
  const Point w{v.dy(), -v.dx()};
  const auto by_w = [&](Point p, Point q) { return dot(w, p) < dot(w, q); };
  const Point l = *std::min_element(d.hull_vertices.begin(), d.hull_vertices.end(), by_w);
  const Point r = *std::max_element(d.hull_vertices.begin(), d.hull_vertices.end(), by_w);

  std::vector<Point> upp;
  std::vector<Point> low;
  for (const NormalCone& c : boundary_cones(d)) {
    if (c.at == l || c.at == r) continue;
    const Wide s_lo = dot(c.lo.vec(), v.vec());
    const Wide s_hi = dot(c.hi.vec(), v.vec());
    if (s_lo > 0 && s_hi > 0) {
      upp.push_back(c.at);
    } else if (s_lo < 0 && s_hi < 0) {
      low.push_back(c.at);
    }
  }
  return {v, l, r, PointSet(std::move(upp)), PointSet(std::move(low))};
}

ArcDecomposition arc_decomposition(const PointSet& s, Direction v) { return arc_decomposition(classify_points(s), v); }

bool is_ap_same_difference(const PointSet& c, const PointSet& d) {
  if (!is_collinear(c) || !is_collinear(d)) throw NotCollinear("arithmetic-progression test needs collinear sets");
  if (c.empty() || d.empty()) throw PreconditionViolated("arithmetic-progression test needs nonempty sets");
  if (c.size() == 1 || d.size() == 1) return true;

  // Lexicographic order is the order along the line.
  const auto step = [](const PointSet& s) -> std::optional<Point> {
    const Point diff = s[1] - s[0];
    for (std::size_t k = 2; k < s.size(); ++k) {
      if (s[k] - s[k - 1] != diff) return std::nullopt;
    }
    return diff;
  };
  const auto sc = step(c);
  const auto sd = step(d);
  return sc && sd && *sc == *sd;
}

}  // namespace planesum
