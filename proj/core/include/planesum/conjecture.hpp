#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "planesum/geometry.hpp"
#include "planesum/point.hpp"
#include "planesum/sumset.hpp"

namespace planesum {

enum class Verdict { StrictHolds, Equality, Fails };

/// Which proved special case a pair falls into. When several apply the first
/// one in declaration order wins.
enum class PairCase { UniqueRepresentation, OneInteriorEach, BoundaryOnly, General };

std::string_view to_string(Verdict v);
std::string_view to_string(PairCase c);
std::optional<Verdict> parse_verdict(std::string_view s);
std::optional<PairCase> parse_pair_case(std::string_view s);

/// Decides sqrt(t_ab) >= sqrt(t_a) + sqrt(t_b) exactly. Squaring twice turns it
/// into d >= 0 and d^2 >= 4 t_a t_b with d = t_ab - t_a - t_b. Inputs must be
/// in [1, 2^61]; throws PreconditionViolated otherwise.
Verdict sqrt_triple_compare(std::int64_t t_ab, std::int64_t t_a, std::int64_t t_b);

/// A pair of non-collinear sets together with their sumset and the three hull
/// decompositions. Holds references to a, b and their decompositions, which
/// must outlive it.
class PairAnalysis {
 public:
  PairAnalysis(const PointSet& a, const HullDecomposition& da, const PointSet& b, const HullDecomposition& db);

  const PointSet& a() const noexcept { return *a_; }
  const PointSet& b() const noexcept { return *b_; }
  const HullDecomposition& da() const noexcept { return *da_; }
  const HullDecomposition& db() const noexcept { return *db_; }
  const PointSet& sum() const noexcept { return sum_; }
  const HullDecomposition& dsum() const noexcept { return dsum_; }

  /// Same analysis with the roles of A and B exchanged.
  PairAnalysis swapped() const;

 private:
  PairAnalysis(const PairAnalysis& base, bool swap);

  const PointSet* a_;
  const HullDecomposition* da_;
  const PointSet* b_;
  const HullDecomposition* db_;
  PointSet sum_;
  HullDecomposition dsum_;
};

struct ConjectureReport {
  std::int64_t tr_a = 0;
  std::int64_t tr_b = 0;
  std::int64_t tr_ab = 0;
  std::size_t b_a = 0, i_a = 0;
  std::size_t b_b = 0, i_b = 0;
  std::size_t b_ab = 0, i_ab = 0;
  Verdict main = Verdict::Fails;
  bool strong_holds = false;  ///< tr(A+B) >= 2 (tr A + tr B)
  bool ib_holds = false;      ///< 2 i_AB + b_AB >= 4 i_A + 4 i_B + 2 b_A + 2 b_B - 6
  /// 2 i_AB >= b_A + b_B - 6, only evaluated when both sets are boundary-only.
  std::optional<bool> boundary_form_holds;
  PairCase pair_case = PairCase::General;
  /// Boundary-only pairs only: one set is a triangle T and the other a translate of T + T.
  std::optional<bool> extremal;
};

ConjectureReport check_pair(const PairAnalysis& p);
/// Throws CollinearInput.
ConjectureReport check_pair(const PointSet& a, const PointSet& b);

/// |A + B| >= |A| + |B| - 1, with equality exactly for singletons or
/// arithmetic progressions of one common difference.
struct FreimanResult {
  bool holds = false;
  bool equality = false;
  bool ap_condition = false;
  bool consistent() const { return equality == ap_condition; }
};

FreimanResult check_freiman(const PointSet& a, const PointSet& b, const PointSet& sum);

/// a + b is on the boundary of [A + B] exactly when the normal cones at a and
/// at b share a direction; interior points have no cone.
struct Lemma21Result {
  bool holds = true;
  std::size_t pairs = 0;
  std::size_t boundary_pairs = 0;
  std::optional<std::pair<Point, Point>> mismatch;
};

Lemma21Result check_lemma21(const PairAnalysis& p);
Lemma21Result check_lemma21(const PointSet& a, const PointSet& b);

/// b_{A+B} >= b_A + b_B. Equality should occur exactly when, for every edge
/// normal u of [A + B] with |A_u|, |B_u| >= 2, A_u and B_u are arithmetic
/// progressions of the same difference.
struct Lemma22Result {
  bool holds = false;
  bool equality = false;
  bool ap_condition = true;
  bool consistent() const { return equality == ap_condition; }
};

Lemma22Result check_lemma22(const PairAnalysis& p);
Lemma22Result check_lemma22(const PointSet& a, const PointSet& b);

/// For pairs with unique representation: tr(A+B) >= |B| tr(A) + tr(B) with
/// the larger-tr set in the role of A, and the main verdict is not Fails.
/// Throws PreconditionViolated if some sum point has two representations.
bool check_thm31_bound(const PairAnalysis& p);
bool check_thm31_bound(const PointSet& a, const PointSet& b);

struct Thm41Result {
  bool bound_a = false;  ///< i_{A+B} >= i_A + |B| - 1
  bool bound_b = false;  ///< i_{A+B} >= i_B + |A| - 1
  /// Set when i_A = i_B = 1; the i/b form of the strong inequality.
  std::optional<bool> ib_form;
  bool holds() const { return bound_a && bound_b && ib_form.value_or(true); }
};

/// Requires i_A >= 1 and i_B >= 1; throws PreconditionViolated otherwise.
Thm41Result check_thm41(const PairAnalysis& p);
Thm41Result check_thm41(const PointSet& a, const PointSet& b);

/// Orientation of one arc configuration: roles of A and B exchanged, and/or
/// the sweep direction reversed.
struct ArcConfig {
  bool swapped = false;
  bool flipped = false;
  friend bool operator==(const ArcConfig&, const ArcConfig&) = default;
};

struct StructureReport {
  Direction v{0, 1};
  bool all_arcs_nonempty = false;
  bool boundary_form_holds = false;
  /// All four arcs nonempty implies the boundary form.
  bool lemma52_ok = true;
  /// Configurations with an empty lower arc for the first set, and how many
  /// of them meet i_{A+B} >= |B_upp| - 2 with equality.
  std::size_t lemma53_cases = 0;
  std::size_t lemma53_equalities = 0;
  bool lemma53_ok = true;
  /// First configuration in the order (A,B,v), (A,B,-v), (B,A,v), (B,A,-v)
  /// that satisfies the four structural conclusions; searched only when the
  /// boundary form fails.
  std::optional<ArcConfig> prop54;
  bool prop54_ok = true;

  bool ok() const { return lemma52_ok && lemma53_ok && prop54_ok; }
};

/// Requires both sets boundary-only (PreconditionViolated) and v parallel to
/// no hull edge of either (DirectionNotGeneric).
StructureReport check_section5_structure(const PairAnalysis& p, Direction v);
StructureReport check_section5_structure(const PointSet& a, const PointSet& b, Direction v);

/// Boundary-only pairs violating 2 i_AB >= b_A + b_B - 6 must be a triangle
/// and a translate of its double. Requires both sets boundary-only.
bool check_thm51(const PairAnalysis& p);
bool check_thm51(const PointSet& a, const PointSet& b);

/// |A| = 3 and B a translate of A + A, or the same with roles exchanged.
bool is_extremal_pair(const PointSet& a, const PointSet& b);

/// Integer points of the closed polygon k * P for a convex lattice polygon P
/// given by its vertices. Throws DegeneratePolygon.
PointSet lattice_points_of_dilate(const PointSet& polygon, std::int64_t k);

struct FamilyResult {
  PointSet a;
  PointSet b;
  ConjectureReport report;
};

/// A = Z^2 cap kP, B = Z^2 cap mP. The vertices must be in convex position.
FamilyResult equality_family(const PointSet& polygon, std::int64_t k, std::int64_t m);

}  // namespace planesum
