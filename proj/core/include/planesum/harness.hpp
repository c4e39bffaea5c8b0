#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planesum/conjecture.hpp"
#include "planesum/point.hpp"

namespace planesum {

/// Largest grid (in cells) that exhaustive enumeration accepts.
inline constexpr int kExhaustiveCellCap = 25;
/// Largest grid that random sampling accepts; one 64-bit draw per subset.
inline constexpr int kRandomCellCap = 64;

/// All non-collinear subsets of the w x h grid {0..w-1} x {0..h-1} with
/// min_pts..max_pts points, one per translation class, each returned as its
/// canonical translate. Ordered by to_compact() text. Throws CapExceeded when
/// w * h exceeds kExhaustiveCellCap.
std::vector<PointSet> enumerate_point_sets(int grid_w, int grid_h, std::size_t min_pts, std::size_t max_pts);

/// `count` non-collinear subsets of the grid drawn uniformly (by rejection)
/// from a 64-bit Mersenne Twister seeded with `seed`, returned as canonical
/// translates in draw order.
std::vector<PointSet> sample_point_sets(int grid_w, int grid_h, std::size_t min_pts, std::size_t max_pts,
                                        std::uint64_t seed, std::size_t count);

/// Image of s under one of the eight symmetries of Z^2 that fix the origin,
/// indexed 0..7 (0 is the identity).
PointSet lattice_symmetry(const PointSet& s, int g);

enum class PairFilter { BoundaryOnly, InteriorBoth, UniqueRep };
enum class CheckKind { Main, Forms, Freiman, Lemma21, Lemma22, Thm31, Thm41, Section5, Thm51 };
enum class CheckOutcome { Pass, Fail, NotApplicable };

std::string_view to_string(PairFilter f);
std::string_view to_string(CheckKind c);
std::string_view to_string(CheckOutcome o);
std::optional<PairFilter> parse_filter(std::string_view s);
std::optional<CheckKind> parse_check(std::string_view s);
const std::vector<CheckKind>& all_checks();

struct RandomMode {
  std::uint64_t seed = 0;
  /// Number of pairs; each pair draws two point sets.
  std::size_t count = 0;
};

struct SearchConfig {
  int grid_w = 3;
  int grid_h = 3;
  std::size_t min_pts = 3;
  std::size_t max_pts = 0;  ///< 0 means grid_w * grid_h
  std::optional<RandomMode> random;  ///< empty for exhaustive mode
  std::vector<PairFilter> filters;
  std::vector<CheckKind> checks{CheckKind::Main};
  std::size_t workers = 1;
  /// Keep one pair per orbit of the eight lattice symmetries acting on both
  /// sets at once. Exhaustive mode on square grids only.
  bool dihedral = false;
  std::filesystem::path report_path;
  /// Empty disables checkpointing. An existing checkpoint is resumed.
  std::filesystem::path checkpoint_path;
  std::size_t checkpoint_interval = 512;
  /// Stop after this many pairs have been evaluated in this run, leaving the
  /// checkpoint behind; used to exercise resume.
  std::optional<std::size_t> pair_budget;

  std::size_t effective_max_pts() const;
  /// Throws PreconditionViolated or CapExceeded.
  void validate() const;
  /// Stable digest of every field that affects the record stream, plus the
  /// worker count (which fixes the shard layout).
  std::uint64_t hash() const;
};

/// One evaluated pair. wall_seconds is kept in memory only so that report
/// files stay byte-identical across runs.
struct SearchRecord {
  PointSet a;
  PointSet b;
  ConjectureReport report;
  std::vector<std::pair<CheckKind, CheckOutcome>> checks;
  double wall_seconds = 0.0;
};

/// Evaluates the given checks on an analyzed pair. The record holds copies
/// of the two sets.
SearchRecord evaluate_pair(const PairAnalysis& p, const std::vector<CheckKind>& checks);

/// Flat key=value line (no trailing newline). Keys in order: a, b, tr_a,
/// tr_b, tr_ab, b_a, i_a, b_b, i_b, b_ab, i_ab, main, strong, ib,
/// boundary_form, case, extremal, then check.<name> per selected check.
std::string format_record(const SearchRecord& r);

/// Key/value pairs of a report line in file order. Throws ParseError.
std::vector<std::pair<std::string, std::string>> parse_record_line(std::string_view line, std::size_t line_no = 1);

struct SearchSummary {
  std::size_t point_sets = 0;
  std::size_t pairs = 0;
  std::size_t strict = 0;
  std::size_t equality = 0;
  std::size_t fails = 0;
  std::map<std::string, std::size_t> check_failures;
  std::map<std::string, std::size_t> cases;
  std::size_t boundary_form_fails = 0;
  std::size_t extremal = 0;
  /// Report lines whose main verdict is Fails or with any failed check.
  std::vector<std::string> failing_records;
  bool completed = true;
  double elapsed_seconds = 0.0;

  bool clean() const { return fails == 0 && failing_records.empty(); }
  void add_line(std::string_view line, std::size_t line_no = 1);
  /// Adds the counts of another summary; failing records stay sorted.
  void merge(const SearchSummary& other);
};

/// Aggregates an existing report file. Throws IoError or ParseError.
SearchSummary summarize_report(const std::filesystem::path& path);

/// Runs the configured search. Records are sharded across workers by a hash
/// of the pair id and merged in sorted line order into report_path (when
/// set). Throws IoError, ResumeMismatch, PreconditionViolated, CapExceeded.
SearchSummary run_search(const SearchConfig& cfg);

std::string format_summary(const SearchSummary& s);

}  // namespace planesum
