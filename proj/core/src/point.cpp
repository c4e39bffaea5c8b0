#include "planesum/point.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "planesum/errors.hpp"

namespace planesum {

namespace {

void check_range(Point p) {
  if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
    throw CoordinateOverflow("coordinate out of range: (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Point p) { return os << '(' << p.x << ',' << p.y << ')'; }

Direction::Direction(Coord dx, Coord dy) {
  if (dx == 0 && dy == 0) {
    throw std::invalid_argument("direction must be nonzero");
  }
  const Coord g = std::gcd(dx, dy);
  dx_ = dx / g;
  dy_ = dy / g;
}

std::ostream& operator<<(std::ostream& os, Direction d) { return os << '(' << d.dx() << ',' << d.dy() << ')'; }

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_) check_range(p);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet::PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

PointSet PointSet::from_sorted_unique(std::vector<Point> points) {
  PointSet s;
  s.points_ = std::move(points);
  return s;
}

bool PointSet::contains(Point p) const { return std::binary_search(points_.begin(), points_.end(), p); }

PointSet PointSet::translated(Point t) const {
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const Point& p : points_) {
    const Wide x = Wide{p.x} + t.x;
    const Wide y = Wide{p.y} + t.y;
    if (x > kMaxCoordinate || x < -kMaxCoordinate || y > kMaxCoordinate || y < -kMaxCoordinate) {
      throw CoordinateOverflow("translated coordinate out of range");
    }
    out.push_back({static_cast<Coord>(x), static_cast<Coord>(y)});
  }
  // Translation preserves lexicographic order.
  return from_sorted_unique(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const PointSet& s) {
  os << '{';
  bool first = true;
  for (const Point& p : s) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  return os << '}';
}

}  // namespace planesum
