#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "planesum/errors.hpp"
#include "planesum/geometry.hpp"
#include "planesum/sumset.hpp"
#include "planesum/triangulation.hpp"
#include "support.hpp"

using namespace planesum;

namespace {

const PointSet kTri{{0, 0}, {1, 0}, {0, 1}};

std::map<Point, std::size_t> brute_sum_counts(const PointSet& a, const PointSet& b) {
  std::map<Point, std::size_t> m;
  for (const Point& p : a) {
    for (const Point& q : b) ++m[p + q];
  }
  return m;
}

}  // namespace

TEST_CASE("minkowski_sum of two triangles") {
  const PointSet s = minkowski_sum(kTri, kTri);
  CHECK(s == PointSet{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}});
  CHECK(minkowski_sum(kTri, PointSet{}).empty());
  CHECK_THROWS_AS(minkowski_sum(PointSet{{kMaxCoordinate, 0}}, PointSet{{1, 0}}), CoordinateOverflow);
}

TEST_CASE("property: minkowski_sum and unique_representation match brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const PointSet a = test::random_grid_set(rng, 5, 4);
    const PointSet b = test::random_grid_set(rng, 4, 5);
    const auto counts = brute_sum_counts(a, b);
    std::vector<Point> keys;
    std::optional<Point> first_repeat;
    for (const auto& [p, n] : counts) {
      keys.push_back(p);
      if (n > 1 && !first_repeat) first_repeat = p;
    }
    CHECK(minkowski_sum(a, b) == PointSet(keys));
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    const auto u = unique_representation(a, b);
    CHECK(u.unique == !first_repeat.has_value());
    if (first_repeat) {
      REQUIRE(u.witness);
      CHECK(u.witness->point == *first_repeat);
      CHECK(u.witness->reps.size() == counts.at(*first_repeat));
      for (const auto& [x, y] : u.witness->reps) CHECK(x + y == *first_repeat);
    }
  }
}

TEST_CASE("unique_representation witness for the doubled triangle") {
  const auto u = unique_representation(kTri, kTri);
  CHECK_FALSE(u.unique);
  REQUIRE(u.witness);
  CHECK(u.witness->point == Point{0, 1});
  CHECK(u.witness->reps.size() == 2);
  const PointSet far{{0, 0}, {100, 0}, {0, 100}};
  CHECK(unique_representation(kTri, far).unique);
}

TEST_CASE("canonical translates") {
  const PointSet s{{3, 5}, {4, 4}, {3, 7}};
  const PointSet c = canonical_translate(s);
  CHECK(c.front() == Point{0, 0});
  CHECK(c == PointSet{{0, 0}, {1, -1}, {0, 2}});
  CHECK(is_translate_of(s, c));
  CHECK(is_translate_of(c, s.translated({-9, 2})));
  CHECK_FALSE(is_translate_of(s, PointSet{{0, 0}, {1, 1}, {0, 2}}));
  CHECK_FALSE(is_translate_of(s, kTri.translated({1, 1})));
}

TEST_CASE("tr_euler counts") {
  CHECK(tr_euler(kTri) == 1);
  CHECK(tr_euler(minkowski_sum(kTri, kTri)) == 4);
  std::vector<Point> g;
  for (Coord x = 0; x < 3; ++x) {
    for (Coord y = 0; y < 3; ++y) g.push_back({x, y});
  }
  CHECK(tr_euler(PointSet(g)) == 8);
  CHECK_THROWS_AS(tr_euler(PointSet{{0, 0}, {1, 1}, {2, 2}}), CollinearInput);
}

TEST_CASE("explicit triangulation of small configurations") {
  const PointSet square{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}};
  const auto t = triangulate_explicit(square);
  CHECK(t.triangles.size() == 4);
  CHECK(test::triangulation_violation(square, t).empty());

  // Points collinear with a hull edge and a fan from an outside point.
  const PointSet line_then_apex{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 5}, {9, 1}};
  const auto u = triangulate_explicit(line_then_apex);
  CHECK(test::triangulation_violation(line_then_apex, u).empty());
  CHECK(static_cast<std::int64_t>(u.triangles.size()) == tr_euler(line_then_apex));
  CHECK_THROWS_AS(triangulate_explicit(PointSet{{0, 0}, {1, 1}}), CollinearInput);
}

TEST_CASE("property: explicit triangulation is valid and has b + 2i - 2 triangles") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const PointSet s = test::random_grid_set(rng, 7, 7);
    const auto t = triangulate_explicit(s);
    INFO("set " << s);
    CHECK(test::triangulation_violation(s, t).empty());
    std::size_t b = 0;
    for (const Point& p : s) b += test::brute_on_boundary(s, p) ? 1 : 0;
    const auto expected = static_cast<std::int64_t>(b + 2 * (s.size() - b)) - 2;
    CHECK(static_cast<std::int64_t>(t.triangles.size()) == expected);
    CHECK(tr_euler(s) == expected);
  }
}

TEST_CASE("triangulation of far-apart coordinates stays exact") {
  const Coord m = Coord{1} << 40;
  const PointSet s{{-m, -m}, {m, -m}, {0, m}, {1, 0}, {m - 1, -m + 1}};
  const auto t = triangulate_explicit(s);
  CHECK(test::triangulation_violation(s, t).empty());
}

TEST_CASE("hull area and lattice points") {
  CHECK(twice_hull_area(kTri) == 1);
  CHECK(twice_hull_area(PointSet{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}) == 8);
  CHECK(lattice_points_in_hull(PointSet{{0, 0}, {2, 0}, {0, 2}, {2, 2}}) == 9);
  CHECK(lattice_points_in_hull(PointSet{{0, 0}, {4, 2}}) == 3);
  CHECK(is_lattice_saturated(kTri));
  CHECK_FALSE(is_lattice_saturated(PointSet{{0, 0}, {2, 0}, {0, 2}}));
  CHECK_THROWS_AS(twice_hull_area(PointSet{{0, 0}, {1, 1}, {2, 2}}), CollinearInput);
}

TEST_CASE("property: Pick count and saturation match bounding-box scans") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet poly = test::random_polygon(rng, 9);
    const auto pts = test::brute_lattice_points(poly);
    CHECK(lattice_points_in_hull(poly) == static_cast<Wide>(pts.size()));
    const PointSet full(pts);
    CHECK(is_lattice_saturated(full));
    CHECK(is_lattice_saturated(poly) == (poly.size() == pts.size()));
    // A saturated set triangulates into unimodular triangles.
    CHECK(Wide{tr_euler(full)} == twice_hull_area(full));
    CHECK(twice_hull_area(poly) == test::shoelace2(test::jarvis_hull(poly)));
  }
}

TEST_CASE("staircase triangle {x + y <= 3}") {
  std::vector<Point> pts;
  for (Coord x = 0; x <= 3; ++x) {
    for (Coord y = 0; x + y <= 3; ++y) pts.push_back({x, y});
  }
  const PointSet s(pts);
  CHECK(tr_euler(s) == 9);
  const auto t = triangulate_explicit(s);
  CHECK(t.triangles.size() == 9);
  CHECK(test::triangulation_violation(s, t).empty());
}
