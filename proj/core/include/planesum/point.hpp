#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace planesum {

using Coord = std::int64_t;
/// Intermediate type for products of coordinates; wide enough for any cross
/// or dot product of two in-range vectors.
using Wide = __int128;

/// Largest absolute coordinate a PointSet accepts. Differences of two
/// in-range coordinates fit in 62 bits, so their products fit in 124.
inline constexpr Coord kMaxCoordinate = Coord{1} << 60;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
};

std::ostream& operator<<(std::ostream& os, Point p);

constexpr Wide cross(Point u, Point v) { return Wide{u.x} * v.y - Wide{u.y} * v.x; }
constexpr Wide dot(Point u, Point v) { return Wide{u.x} * v.x + Wide{u.y} * v.y; }

/// Primitive nonzero integer vector. Only the direction of a normal or sweep
/// vector matters, so every value is reduced by the gcd of its components.
class Direction {
 public:
  /// Throws std::invalid_argument for (0,0).
  Direction(Coord dx, Coord dy);

  Coord dx() const noexcept { return dx_; }
  Coord dy() const noexcept { return dy_; }
  Point vec() const noexcept { return {dx_, dy_}; }
  Direction operator-() const { return {-dx_, -dy_}; }

  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  Coord dx_;
  Coord dy_;
};

std::ostream& operator<<(std::ostream& os, Direction d);

/// Deduplicated point set kept in lexicographic order. The sorted order makes
/// equality comparison canonical.
class PointSet {
 public:
  PointSet() = default;
  /// Sorts and drops duplicates; throws CoordinateOverflow if a coordinate
  /// exceeds kMaxCoordinate in magnitude.
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points);

  /// Wraps points that are already sorted, unique and in range.
  static PointSet from_sorted_unique(std::vector<Point> points);

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const Point& front() const { return points_.front(); }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool contains(Point p) const;

  /// Returns the set shifted by t.
  PointSet translated(Point t) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet& a, const PointSet& b) { return a.points_ <=> b.points_; }

 private:
  std::vector<Point> points_;
};

std::ostream& operator<<(std::ostream& os, const PointSet& s);

}  // namespace planesum
