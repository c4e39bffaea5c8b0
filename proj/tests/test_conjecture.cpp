#include <doctest.h>

#include <cmath>
#include <random>

#include "planesum/conjecture.hpp"
#include "planesum/errors.hpp"
#include "planesum/triangulation.hpp"
#include "support.hpp"

using namespace planesum;

namespace {

const PointSet kTri{{0, 0}, {1, 0}, {0, 1}};
const PointSet kTriDouble{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}};

std::int64_t brute_tr(const PointSet& s) {
  std::int64_t b = 0;
  for (const Point& p : s) b += test::brute_on_boundary(s, p) ? 1 : 0;
  return b + 2 * (static_cast<std::int64_t>(s.size()) - b) - 2;
}

PointSet brute_sum(const PointSet& a, const PointSet& b) {
  std::vector<Point> v;
  for (const Point& p : a) {
    for (const Point& q : b) v.push_back(p + q);
  }
  return PointSet(v);
}

// Sign of sqrt(ab) - sqrt(a) - sqrt(b) through long double, with exact ties
// settled by integer square roots.
Verdict float_oracle(std::int64_t ab, std::int64_t a, std::int64_t b) {
  const long double f = std::sqrt(static_cast<long double>(ab)) - std::sqrt(static_cast<long double>(a)) -
                        std::sqrt(static_cast<long double>(b));
  if (f > 1e-9L) return Verdict::StrictHolds;
  if (f < -1e-9L) return Verdict::Fails;
  // Near-tie: equality needs a*b to be a perfect square and ab = a + b + 2 sqrt(ab).
  const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(a) * b)));
  if (r * r == a * b && ab == a + b + 2 * r) return Verdict::Equality;
  return ab > a + b + 2 * r ? Verdict::StrictHolds : Verdict::Fails;
}

}  // namespace

TEST_CASE("sqrt_triple_compare exact cases") {
  CHECK(sqrt_triple_compare(9, 1, 4) == Verdict::Equality);
  CHECK(sqrt_triple_compare(10, 1, 4) == Verdict::StrictHolds);
  CHECK(sqrt_triple_compare(8, 1, 4) == Verdict::Fails);
  CHECK(sqrt_triple_compare(1, 1, 1) == Verdict::Fails);
  const std::int64_t big = std::int64_t{1} << 61;
  CHECK(sqrt_triple_compare(big, big / 4, big / 4) == Verdict::Equality);
  CHECK(sqrt_triple_compare(big, big / 4, big / 4 + 1) == Verdict::Fails);
  CHECK_THROWS_AS(sqrt_triple_compare(0, 1, 1), PreconditionViolated);
  CHECK_THROWS_AS(sqrt_triple_compare(big + 1, 1, 1), PreconditionViolated);
}

TEST_CASE("property: sqrt_triple_compare agrees with the floating oracle up to 10^6") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200000; ++trial) {
    const auto a = static_cast<std::int64_t>(1 + rng() % 1000000);
    const auto b = static_cast<std::int64_t>(1 + rng() % 1000000);
    const auto ab = static_cast<std::int64_t>(1 + rng() % 1000000);
    REQUIRE(sqrt_triple_compare(ab, a, b) == float_oracle(ab, a, b));
  }
  for (std::int64_t p = 1; p <= 30; ++p) {
    for (std::int64_t q = 1; q <= 30; ++q) {
      for (std::int64_t k : {1, 2, 3, 7}) {
        const std::int64_t ab = (p + q) * (p + q) * k;
        CHECK(sqrt_triple_compare(ab, p * p * k, q * q * k) == Verdict::Equality);
        CHECK(sqrt_triple_compare(ab - 1, p * p * k, q * q * k) == Verdict::Fails);
        CHECK(sqrt_triple_compare(ab + 1, p * p * k, q * q * k) == Verdict::StrictHolds);
      }
    }
  }
}

TEST_CASE("the triangle and its double") {
  const auto r = check_pair(kTri, kTriDouble);
  CHECK(r.tr_a == 1);
  CHECK(r.tr_b == 4);
  CHECK(r.tr_ab == 9);
  CHECK(r.main == Verdict::Equality);
  REQUIRE(r.boundary_form_holds);
  CHECK_FALSE(*r.boundary_form_holds);
  REQUIRE(r.extremal);
  CHECK(*r.extremal);
  CHECK(r.pair_case == PairCase::BoundaryOnly);
  CHECK(is_extremal_pair(kTri, kTriDouble));
  CHECK(is_extremal_pair(kTriDouble.translated({5, -3}), kTri));
  CHECK_FALSE(is_extremal_pair(kTri, kTri));
  CHECK(check_thm51(kTri, kTriDouble));

  const StructureReport s = check_section5_structure(kTri, kTriDouble, generic_direction(kTri, kTriDouble));
  CHECK(s.ok());
  CHECK_FALSE(s.boundary_form_holds);
  REQUIRE(s.prop54);
  CHECK(*s.prop54 == ArcConfig{false, true});
}

TEST_CASE("worked interior instance") {
  const PointSet a{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}};
  const auto r = check_pair(a, a);
  CHECK(r.i_ab == 5);
  CHECK(r.b_ab == 8);
  CHECK(2 * r.i_ab + r.b_ab == 18);
  CHECK(4 * r.i_a + 4 * r.i_b + 2 * r.b_a + 2 * r.b_b - 6 == 18);
  CHECK(r.ib_holds);
  CHECK(r.pair_case == PairCase::OneInteriorEach);
  const Thm41Result t = check_thm41(a, a);
  CHECK(t.holds());
  REQUIRE(t.ib_form);
  CHECK(*t.ib_form);
  CHECK_THROWS_AS(check_thm41(kTri, a), PreconditionViolated);

  const PointSet b{{0, 0}, {4, 0}, {0, 4}, {4, 4}, {1, 1}, {2, 2}};
  const Thm41Result u = check_thm41(a, b);
  CHECK(u.bound_a);
  CHECK(u.bound_b);
  CHECK_FALSE(u.ib_form.has_value());
}

TEST_CASE("extremal configuration along the (1,2) sweep") {
  const Direction v(1, 2);
  const StructureReport s = check_section5_structure(kTri, kTriDouble, v);
  CHECK_FALSE(s.boundary_form_holds);
  REQUIRE(s.prop54);
  const PointSet& x = s.prop54->swapped ? kTriDouble : kTri;
  const PointSet& y = s.prop54->swapped ? kTri : kTriDouble;
  const Direction dir = s.prop54->flipped ? -v : v;
  const auto ax = arc_decomposition(x, dir);
  const auto ay = arc_decomposition(y, dir);
  CHECK(ax.low.empty());
  CHECK(ay.upp.size() == ax.upp.size() + ay.low.size() + 1);
}

TEST_CASE("boundary-count inequality on a triangle pair") {
  const PointSet b{{0, 0}, {3, 0}, {1, 2}};
  const auto l = check_lemma22(kTri, b);
  CHECK(l.holds);
  CHECK(l.consistent());
}

TEST_CASE("property: reports agree with brute-force counts") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const PointSet a = test::random_grid_set(rng, 4, 4);
    const PointSet b = test::random_grid_set(rng, 4, 4);
    const auto r = check_pair(a, b);
    const PointSet sum = brute_sum(a, b);
    CHECK(r.tr_a == brute_tr(a));
    CHECK(r.tr_b == brute_tr(b));
    CHECK(r.tr_ab == brute_tr(sum));
    CHECK(r.main == float_oracle(r.tr_ab, r.tr_a, r.tr_b));
    CHECK(r.strong_holds == (r.tr_ab >= 2 * (r.tr_a + r.tr_b)));
    CHECK(check_freiman(a, b, sum).holds);
    CHECK(check_freiman(a, b, sum).consistent());
    CHECK(check_lemma21(a, b).holds);
    const auto l22 = check_lemma22(a, b);
    CHECK(l22.holds);
    CHECK(l22.consistent());
  }
}

TEST_CASE("Freiman equality on progressions") {
  const PointSet ap{{0, 0}, {1, 2}, {2, 4}};
  const PointSet ap2{{5, 5}, {6, 7}};
  const auto f = check_freiman(ap, ap2, minkowski_sum(ap, ap2));
  CHECK(f.holds);
  CHECK(f.equality);
  CHECK(f.ap_condition);
  const auto g = check_freiman(kTri, kTri, minkowski_sum(kTri, kTri));
  CHECK_FALSE(g.equality);
  CHECK_FALSE(g.ap_condition);
}

TEST_CASE("boundary-cone check has no mismatch on a square pair") {
  const PointSet sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const auto l = check_lemma21(sq, kTri);
  CHECK(l.holds);
  CHECK(l.pairs == 12);
  CHECK_FALSE(l.mismatch.has_value());
}

TEST_CASE("unique representation bound") {
  const PointSet far = PointSet{{0, 0}, {10, 0}, {0, 10}, {10, 10}};
  CHECK(check_thm31_bound(kTri, far));
  CHECK(check_pair(kTri, far).pair_case == PairCase::UniqueRepresentation);
  CHECK_THROWS_AS(check_thm31_bound(kTri, kTri), PreconditionViolated);
}

TEST_CASE("property: separated sets satisfy the unique-representation bound") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet a = test::random_grid_set(rng, 4, 4);
    const PointSet b0 = test::random_grid_set(rng, 3, 3);
    std::vector<Point> scaled;
    for (const Point& p : b0) scaled.push_back({p.x * 40, p.y * 40});
    const PointSet bs(scaled);
    CHECK(unique_representation(a, bs).unique);
    CHECK(check_thm31_bound(a, bs));
    CHECK(check_thm31_bound(bs, a));
  }
}

TEST_CASE("lattice points of dilates") {
  const PointSet tri{{0, 0}, {2, 0}, {0, 1}};
  for (std::int64_t k = 1; k <= 4; ++k) {
    const PointSet d = lattice_points_of_dilate(tri, k);
    const PointSet big{{0, 0}, {2 * k, 0}, {0, k}};
    CHECK(d == PointSet(test::brute_lattice_points(big)));
  }
  CHECK_THROWS_AS(lattice_points_of_dilate(PointSet{{0, 0}, {1, 1}, {2, 2}}, 2), DegeneratePolygon);
  CHECK_THROWS_AS(lattice_points_of_dilate(PointSet{{0, 0}, {2, 0}, {0, 2}, {1, 1}}, 2), DegeneratePolygon);
}

TEST_CASE("equality family") {
  for (const PointSet& poly : {kTri, PointSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, PointSet{{0, 0}, {2, 0}, {0, 1}}}) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      for (std::int64_t m = 1; m <= 3; ++m) {
        const FamilyResult f = equality_family(poly, k, m);
        CHECK(f.report.main == Verdict::Equality);
        CHECK(f.report.tr_a == k * k * static_cast<std::int64_t>(twice_hull_area(poly)));
      }
    }
  }
}

TEST_CASE("arc-structure preconditions") {
  const PointSet withInterior{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}};
  CHECK_THROWS_AS(check_section5_structure(withInterior, kTri, Direction(1, 2)), PreconditionViolated);
  CHECK_THROWS_AS(check_section5_structure(kTri, kTri, Direction(1, 0)), DirectionNotGeneric);
  CHECK_THROWS_AS(check_thm51(withInterior, kTri), PreconditionViolated);
}

TEST_CASE("enum names round-trip") {
  for (Verdict v : {Verdict::StrictHolds, Verdict::Equality, Verdict::Fails}) {
    CHECK(parse_verdict(to_string(v)) == v);
  }
  for (PairCase c : {PairCase::UniqueRepresentation, PairCase::OneInteriorEach, PairCase::BoundaryOnly,
                     PairCase::General}) {
    CHECK(parse_pair_case(to_string(c)) == c);
  }
  CHECK_FALSE(parse_verdict("maybe").has_value());
}
