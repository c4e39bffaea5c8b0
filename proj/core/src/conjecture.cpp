#include "planesum/conjecture.hpp"

#include <algorithm>
#include <array>

#include "planesum/errors.hpp"
#include "planesum/triangulation.hpp"

namespace planesum {

namespace {

using Int = std::int64_t;

Int as_int(std::size_t n) { return static_cast<Int>(n); }

bool boundary_only(const HullDecomposition& d) { return d.i() == 0; }

bool boundary_form(std::size_t i_ab, std::size_t b_a, std::size_t b_b) {
  return 2 * as_int(i_ab) >= as_int(b_a) + as_int(b_b) - 6;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictHolds:
      return "StrictHolds";
    case Verdict::Equality:
      return "Equality";
    case Verdict::Fails:
      return "Fails";
  }
  return "?";
}

std::string_view to_string(PairCase c) {
  switch (c) {
    case PairCase::UniqueRepresentation:
      return "UniqueRepresentation";
    case PairCase::OneInteriorEach:
      return "OneInteriorEach";
    case PairCase::BoundaryOnly:
      return "BoundaryOnly";
    case PairCase::General:
      return "General";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
  for (Verdict v : {Verdict::StrictHolds, Verdict::Equality, Verdict::Fails}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

std::optional<PairCase> parse_pair_case(std::string_view s) {
  for (PairCase c : {PairCase::UniqueRepresentation, PairCase::OneInteriorEach, PairCase::BoundaryOnly,
                     PairCase::General}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

Verdict sqrt_triple_compare(Int t_ab, Int t_a, Int t_b) {
  constexpr Int kMax = Int{1} << 61;
  for (Int t : {t_ab, t_a, t_b}) {
    if (t < 1 || t > kMax) throw PreconditionViolated("triangle counts must lie in [1, 2^61]");
  }
  const Wide d = Wide{t_ab} - t_a - t_b;
  if (d < 0) return Verdict::Fails;
  const Wide lhs = d * d;
  const Wide rhs = 4 * Wide{t_a} * t_b;
  if (lhs == rhs) return Verdict::Equality;
  return lhs > rhs ? Verdict::StrictHolds : Verdict::Fails;
}

PairAnalysis::PairAnalysis(const PointSet& a, const HullDecomposition& da, const PointSet& b,
                           const HullDecomposition& db)
    : a_(&a), da_(&da), b_(&b), db_(&db), sum_(minkowski_sum(a, b)), dsum_(classify_points(sum_)) {}

PairAnalysis::PairAnalysis(const PairAnalysis& base, bool)
    : a_(base.b_), da_(base.db_), b_(base.a_), db_(base.da_), sum_(base.sum_), dsum_(base.dsum_) {}

PairAnalysis PairAnalysis::swapped() const { return PairAnalysis(*this, true); }

bool is_extremal_pair(const PointSet& a, const PointSet& b) {
  if (a.size() == 3 && b.size() == 6 && is_translate_of(b, minkowski_sum(a, a))) return true;
  if (b.size() == 3 && a.size() == 6 && is_translate_of(a, minkowski_sum(b, b))) return true;
  return false;
}

ConjectureReport check_pair(const PairAnalysis& p) {
  ConjectureReport r;
  r.b_a = p.da().b();
  r.i_a = p.da().i();
  r.b_b = p.db().b();
  r.i_b = p.db().i();
  r.b_ab = p.dsum().b();
  r.i_ab = p.dsum().i();
  r.tr_a = tr_euler(p.da());
  r.tr_b = tr_euler(p.db());
  r.tr_ab = tr_euler(p.dsum());
  r.main = sqrt_triple_compare(r.tr_ab, r.tr_a, r.tr_b);
  r.strong_holds = r.tr_ab >= 2 * (r.tr_a + r.tr_b);
  r.ib_holds = 2 * as_int(r.i_ab) + as_int(r.b_ab) >=
               4 * as_int(r.i_a) + 4 * as_int(r.i_b) + 2 * as_int(r.b_a) + 2 * as_int(r.b_b) - 6;

  const bool both_boundary = r.i_a == 0 && r.i_b == 0;
  if (both_boundary) {
    r.boundary_form_holds = boundary_form(r.i_ab, r.b_a, r.b_b);
    r.extremal = is_extremal_pair(p.a(), p.b());
  }

  if (p.sum().size() == p.a().size() * p.b().size()) {
    r.pair_case = PairCase::UniqueRepresentation;
  } else if (r.i_a == 1 && r.i_b == 1) {
    r.pair_case = PairCase::OneInteriorEach;
  } else if (both_boundary) {
    r.pair_case = PairCase::BoundaryOnly;
  } else {
    r.pair_case = PairCase::General;
  }
  return r;
}

ConjectureReport check_pair(const PointSet& a, const PointSet& b) {
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  return check_pair(PairAnalysis(a, da, b, db));
}

FreimanResult check_freiman(const PointSet& a, const PointSet& b, const PointSet& sum) {
  if (a.empty() || b.empty()) throw PreconditionViolated("Freiman bound needs nonempty sets");
  FreimanResult r;
  const Int lower = as_int(a.size()) + as_int(b.size()) - 1;
  r.holds = as_int(sum.size()) >= lower;
  r.equality = as_int(sum.size()) == lower;
  if (a.size() == 1 || b.size() == 1) {
    r.ap_condition = true;
  } else {
    r.ap_condition = is_collinear(a) && is_collinear(b) && is_ap_same_difference(a, b);
  }
  return r;
}

Lemma21Result check_lemma21(const PairAnalysis& p) {
  const auto cones_a = boundary_cones(p.da());
  const auto cones_b = boundary_cones(p.db());
  const auto cone_of = [](const std::vector<NormalCone>& cones, Point x) -> const NormalCone* {
    for (const NormalCone& c : cones) {
      if (c.at == x) return &c;
    }
    return nullptr;
  };

  Lemma21Result r;
  for (const Point& x : p.a()) {
    const NormalCone* ca = cone_of(cones_a, x);
    for (const Point& y : p.b()) {
      const NormalCone* cb = cone_of(cones_b, y);
      const bool predicted = ca && cb && cones_intersect(*ca, *cb);
      const bool actual = p.dsum().boundary.contains(x + y);
      ++r.pairs;
      if (actual) ++r.boundary_pairs;
      if (predicted != actual && r.holds) {
        r.holds = false;
        r.mismatch = {x, y};
      }
    }
  }
  return r;
}

Lemma21Result check_lemma21(const PointSet& a, const PointSet& b) {
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  return check_lemma21(PairAnalysis(a, da, b, db));
}

Lemma22Result check_lemma22(const PairAnalysis& p) {
  Lemma22Result r;
  const std::size_t lower = p.da().b() + p.db().b();
  r.holds = p.dsum().b() >= lower;
  r.equality = p.dsum().b() == lower;

  const auto& hull = p.dsum().hull_vertices;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const Direction u = edge_normal(hull[k], hull[(k + 1) % hull.size()]);
    const PointSet au = support_set(p.a(), u);
    const PointSet bu = support_set(p.b(), u);
    if (au.size() >= 2 && bu.size() >= 2 && !is_ap_same_difference(au, bu)) {
      r.ap_condition = false;
      break;
    }
  }
  return r;
}

Lemma22Result check_lemma22(const PointSet& a, const PointSet& b) {
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  return check_lemma22(PairAnalysis(a, da, b, db));
}

bool check_thm31_bound(const PairAnalysis& p) {
  if (p.sum().size() != p.a().size() * p.b().size()) {
    throw PreconditionViolated("representation of A + B is not unique");
  }
  Int tr_big = tr_euler(p.da());
  Int tr_small = tr_euler(p.db());
  Int size_small = as_int(p.b().size());
  if (tr_small > tr_big) {
    std::swap(tr_big, tr_small);
    size_small = as_int(p.a().size());
  }
  const Int tr_ab = tr_euler(p.dsum());
  return tr_ab >= size_small * tr_big + tr_small && sqrt_triple_compare(tr_ab, tr_big, tr_small) != Verdict::Fails;
}

bool check_thm31_bound(const PointSet& a, const PointSet& b) {
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  return check_thm31_bound(PairAnalysis(a, da, b, db));
}

Thm41Result check_thm41(const PairAnalysis& p) {
  const std::size_t i_a = p.da().i();
  const std::size_t i_b = p.db().i();
  if (i_a == 0 || i_b == 0) throw PreconditionViolated("both sets need an interior point");
  const Int i_ab = as_int(p.dsum().i());

  Thm41Result r;
  r.bound_a = i_ab >= as_int(i_a) + as_int(p.b().size()) - 1;
  r.bound_b = i_ab >= as_int(i_b) + as_int(p.a().size()) - 1;
  if (i_a == 1 && i_b == 1) {
    r.ib_form = 2 * i_ab + as_int(p.dsum().b()) >=
                4 * as_int(i_a) + 4 * as_int(i_b) + 2 * as_int(p.da().b()) + 2 * as_int(p.db().b()) - 6;
  }
  return r;
}

Thm41Result check_thm41(const PointSet& a, const PointSet& b) {
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  return check_thm41(PairAnalysis(a, da, b, db));
}

StructureReport check_section5_structure(const PairAnalysis& p, Direction v) {
  if (!boundary_only(p.da()) || !boundary_only(p.db())) {
    throw PreconditionViolated("arc structure checks need boundary-only sets");
  }
  const std::array<ArcDecomposition, 2> arcs_a{arc_decomposition(p.da(), v), arc_decomposition(p.da(), -v)};
  const std::array<ArcDecomposition, 2> arcs_b{arc_decomposition(p.db(), v), arc_decomposition(p.db(), -v)};
  const Int i_ab = as_int(p.dsum().i());
  const Int b_a = as_int(p.da().b());
  const Int b_b = as_int(p.db().b());

  StructureReport r;
  r.v = v;
  r.boundary_form_holds = boundary_form(p.dsum().i(), p.da().b(), p.db().b());
  const ArcDecomposition& a0 = arcs_a[0];
  const ArcDecomposition& b0 = arcs_b[0];
  r.all_arcs_nonempty = !a0.upp.empty() && !a0.low.empty() && !b0.upp.empty() && !b0.low.empty();
  r.lemma52_ok = !r.all_arcs_nonempty || r.boundary_form_holds;

  const auto segment_contains_all = [](const ArcDecomposition& arc, const PointSet& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](Point q) { return on_segment(arc.l, arc.r, q); });
  };
  const auto chords_parallel = [](const ArcDecomposition& x, const ArcDecomposition& y) {
    return cross(x.r - x.l, y.r - y.l) == 0;
  };

  for (const bool swap : {false, true}) {
    for (const bool flip : {false, true}) {
      const ArcDecomposition& x = (swap ? arcs_b : arcs_a)[flip];
      const ArcDecomposition& y = (swap ? arcs_a : arcs_b)[flip];
      const Int b_x = swap ? b_b : b_a;
      const Int b_y = swap ? b_a : b_b;
      if (!x.low.empty()) continue;

      ++r.lemma53_cases;
      const Int bound = as_int(y.upp.size()) - 2;
      if (i_ab < bound) {
        r.lemma53_ok = false;
      } else if (i_ab == bound) {
        ++r.lemma53_equalities;
        if (!segment_contains_all(y, y.low) || !chords_parallel(x, y)) r.lemma53_ok = false;
      }

      if (r.boundary_form_holds || r.prop54) continue;
      const bool low_on_chord = segment_contains_all(y, y.low);
      const bool counts = (y.low.empty() && b_y == b_x) ||
                          (as_int(y.upp.size()) == as_int(x.upp.size()) + as_int(y.low.size()) + 1 && b_y > b_x);
      if (low_on_chord && chords_parallel(x, y) && counts) r.prop54 = ArcConfig{swap, flip};
    }
  }
  r.prop54_ok = r.boundary_form_holds || r.prop54.has_value();
  return r;
}

StructureReport check_section5_structure(const PointSet& a, const PointSet& b, Direction v) {
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  return check_section5_structure(PairAnalysis(a, da, b, db), v);
}

bool check_thm51(const PairAnalysis& p) {
  if (!boundary_only(p.da()) || !boundary_only(p.db())) {
    throw PreconditionViolated("extremal classification needs boundary-only sets");
  }
  if (boundary_form(p.dsum().i(), p.da().b(), p.db().b())) return true;
  return is_extremal_pair(p.a(), p.b());
}

bool check_thm51(const PointSet& a, const PointSet& b) {
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  return check_thm51(PairAnalysis(a, da, b, db));
}

PointSet lattice_points_of_dilate(const PointSet& polygon, Int k) {
  if (k < 1) throw PreconditionViolated("dilation factor must be positive");
  if (is_collinear(polygon)) throw DegeneratePolygon("polygon vertices are collinear");
  const auto hull = convex_hull(polygon);
  if (hull.size() != polygon.size()) throw DegeneratePolygon("polygon vertices are not in convex position");

  std::vector<Point> scaled;
  for (const Point& v : hull) {
    const Wide x = Wide{v.x} * k;
    const Wide y = Wide{v.y} * k;
    if (x > kMaxCoordinate || x < -kMaxCoordinate || y > kMaxCoordinate || y < -kMaxCoordinate) {
      throw CoordinateOverflow("dilated polygon out of range");
    }
    scaled.push_back({static_cast<Coord>(x), static_cast<Coord>(y)});
  }
  const auto [xmin, xmax] = std::minmax_element(scaled.begin(), scaled.end(), [](Point p, Point q) { return p.x < q.x; });
  const auto [ymin, ymax] = std::minmax_element(scaled.begin(), scaled.end(), [](Point p, Point q) { return p.y < q.y; });
  constexpr Wide kMaxCells = Wide{1} << 24;
  if ((Wide{xmax->x} - xmin->x + 1) * (Wide{ymax->y} - ymin->y + 1) > kMaxCells) {
    throw CapExceeded("dilated polygon has too many candidate lattice points");
  }

  std::vector<Point> out;
  for (Coord x = xmin->x; x <= xmax->x; ++x) {
    for (Coord y = ymin->y; y <= ymax->y; ++y) {
      const Point q{x, y};
      bool inside = true;
      for (std::size_t e = 0; e < scaled.size() && inside; ++e) {
        inside = orientation(scaled[e], scaled[(e + 1) % scaled.size()], q) >= 0;
      }
      if (inside) out.push_back(q);
    }
  }
  return PointSet(std::move(out));
}

FamilyResult equality_family(const PointSet& polygon, Int k, Int m) {
  FamilyResult r;
  r.a = lattice_points_of_dilate(polygon, k);
  r.b = lattice_points_of_dilate(polygon, m);
  r.report = check_pair(r.a, r.b);
  return r;
}

}  // namespace planesum
