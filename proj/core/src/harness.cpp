#include "planesum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <queue>
#include <random>
#include <sstream>
#include <thread>

#include "planesum/errors.hpp"
#include "planesum/geometry.hpp"
#include "planesum/point_io.hpp"

namespace planesum {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvOffset) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

PointSet set_from_mask(std::uint64_t mask, int grid_w) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    const int cell = std::countr_zero(mask);
    mask &= mask - 1;
    pts.push_back({cell % grid_w, cell / grid_w});
  }
  return PointSet(std::move(pts));
}

void sort_by_compact(std::vector<PointSet>& sets) {
  std::vector<std::pair<std::string, PointSet>> keyed;
  keyed.reserve(sets.size());
  for (auto& s : sets) keyed.emplace_back(to_compact(s), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  sets.clear();
  for (auto& [key, s] : keyed) sets.push_back(std::move(s));
}

void check_sizes(int grid_w, int grid_h, std::size_t min_pts, std::size_t max_pts) {
  if (grid_w < 1 || grid_h < 1) throw PreconditionViolated("grid dimensions must be positive");
  if (min_pts < 3) throw PreconditionViolated("min_pts must be at least 3");
  if (max_pts < min_pts) throw PreconditionViolated("max_pts must be at least min_pts");
  if (min_pts > static_cast<std::size_t>(grid_w) * static_cast<std::size_t>(grid_h)) {
    throw PreconditionViolated("min_pts exceeds the number of grid cells");
  }
}

std::string join_names(const auto& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ',';
    out += to_string(item);
  }
  return out;
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<PointSet> enumerate_point_sets(int grid_w, int grid_h, std::size_t min_pts, std::size_t max_pts) {
  if (grid_w >= 1 && grid_h >= 1 && grid_w * grid_h > kExhaustiveCellCap) {
    throw CapExceeded("exhaustive enumeration is capped at " + std::to_string(kExhaustiveCellCap) + " grid cells");
  }
  check_sizes(grid_w, grid_h, min_pts, max_pts);
  const int cells = grid_w * grid_h;

  // A translation class fits the grid in exactly one position with a point in
  // column 0 and a point in row 0.
  std::uint64_t column0 = 0;
  std::uint64_t row0 = 0;
  for (int y = 0; y < grid_h; ++y) column0 |= std::uint64_t{1} << (y * grid_w);
  for (int x = 0; x < grid_w; ++x) row0 |= std::uint64_t{1} << x;

  std::vector<PointSet> out;
  const std::uint64_t limit = std::uint64_t{1} << cells;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const auto n = static_cast<std::size_t>(std::popcount(mask));
    if (n < min_pts || n > max_pts || (mask & column0) == 0 || (mask & row0) == 0) continue;
    PointSet s = set_from_mask(mask, grid_w);
    if (is_collinear(s)) continue;
    out.push_back(canonical_translate(s));
  }
  sort_by_compact(out);
  return out;
}

std::vector<PointSet> sample_point_sets(int grid_w, int grid_h, std::size_t min_pts, std::size_t max_pts,
                                        std::uint64_t seed, std::size_t count) {
  if (grid_w >= 1 && grid_h >= 1 && grid_w * grid_h > kRandomCellCap) {
    throw CapExceeded("random sampling is capped at " + std::to_string(kRandomCellCap) + " grid cells");
  }
  check_sizes(grid_w, grid_h, min_pts, max_pts);
  const auto cells = static_cast<std::size_t>(grid_w * grid_h);
  max_pts = std::min(max_pts, cells);

  // Subset size k is drawn with weight C(cells, k), then a uniform k-subset,
  // which together give the uniform distribution on admissible subsets.
  std::vector<unsigned __int128> cumulative;
  unsigned __int128 total = 0;
  for (std::size_t k = min_pts; k <= max_pts; ++k) {
    unsigned __int128 binom = 1;
    for (std::size_t j = 0; j < k; ++j) binom = binom * (cells - j) / (j + 1);
    total += binom;
    cumulative.push_back(total);
  }

  std::mt19937_64 gen(seed);
  std::vector<PointSet> out;
  out.reserve(count);
  std::vector<int> cell_ids(cells);
  while (out.size() < count) {
    const unsigned __int128 draw = ((static_cast<unsigned __int128>(gen()) << 64) | gen()) % total;
    const auto k = min_pts + static_cast<std::size_t>(
                                 std::upper_bound(cumulative.begin(), cumulative.end(), draw) - cumulative.begin());
    for (std::size_t c = 0; c < cells; ++c) cell_ids[c] = static_cast<int>(c);
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t pick = j + static_cast<std::size_t>(gen() % (cells - j));
      std::swap(cell_ids[j], cell_ids[pick]);
      mask |= std::uint64_t{1} << cell_ids[j];
    }
    PointSet s = set_from_mask(mask, grid_w);
    if (is_collinear(s)) continue;
    out.push_back(canonical_translate(s));
  }
  return out;
}

PointSet lattice_symmetry(const PointSet& s, int g) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (const Point& p : s) {
    Point q = (g & 4) != 0 ? Point{p.y, p.x} : p;
    if ((g & 1) != 0) q.x = -q.x;
    if ((g & 2) != 0) q.y = -q.y;
    out.push_back(q);
  }
  return PointSet(std::move(out));
}

std::string_view to_string(PairFilter f) {
  switch (f) {
    case PairFilter::BoundaryOnly:
      return "boundary-only";
    case PairFilter::InteriorBoth:
      return "interior-both";
    case PairFilter::UniqueRep:
      return "unique-rep";
  }
  return "?";
}

std::string_view to_string(CheckKind c) {
  switch (c) {
    case CheckKind::Main:
      return "main";
    case CheckKind::Forms:
      return "forms";
    case CheckKind::Freiman:
      return "freiman";
    case CheckKind::Lemma21:
      return "lemma21";
    case CheckKind::Lemma22:
      return "lemma22";
    case CheckKind::Thm31:
      return "thm31";
    case CheckKind::Thm41:
      return "thm41";
    case CheckKind::Section5:
      return "section5";
    case CheckKind::Thm51:
      return "thm51";
  }
  return "?";
}

std::string_view to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass:
      return "pass";
    case CheckOutcome::Fail:
      return "fail";
    case CheckOutcome::NotApplicable:
      return "na";
  }
  return "?";
}

std::optional<PairFilter> parse_filter(std::string_view s) {
  for (PairFilter f : {PairFilter::BoundaryOnly, PairFilter::InteriorBoth, PairFilter::UniqueRep}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

const std::vector<CheckKind>& all_checks() {
  static const std::vector<CheckKind> kAll{CheckKind::Main,    CheckKind::Forms,   CheckKind::Freiman,
                                           CheckKind::Lemma21, CheckKind::Lemma22, CheckKind::Thm31,
                                           CheckKind::Thm41,   CheckKind::Section5, CheckKind::Thm51};
  return kAll;
}

std::optional<CheckKind> parse_check(std::string_view s) {
  for (CheckKind c : all_checks()) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::size_t SearchConfig::effective_max_pts() const {
  const auto cells = static_cast<std::size_t>(std::max(grid_w, 0)) * static_cast<std::size_t>(std::max(grid_h, 0));
  return max_pts == 0 ? cells : std::min(max_pts, cells);
}

void SearchConfig::validate() const {
  const int cells = grid_w * grid_h;
  if (grid_w >= 1 && grid_h >= 1) {
    if (!random && cells > kExhaustiveCellCap) {
      throw CapExceeded("exhaustive mode is capped at " + std::to_string(kExhaustiveCellCap) + " grid cells");
    }
    if (random && cells > kRandomCellCap) {
      throw CapExceeded("random mode is capped at " + std::to_string(kRandomCellCap) + " grid cells");
    }
  }
  check_sizes(grid_w, grid_h, min_pts, effective_max_pts());
  if (workers < 1) throw PreconditionViolated("workers must be at least 1");
  if (checks.empty()) throw PreconditionViolated("at least one check must be selected");
  if (dihedral && (random || grid_w != grid_h)) {
    throw PreconditionViolated("symmetry reduction needs exhaustive mode on a square grid");
  }
  if (!checkpoint_path.empty() && report_path.empty()) {
    throw PreconditionViolated("checkpointing needs a report path");
  }
}

std::uint64_t SearchConfig::hash() const {
  std::ostringstream os;
  os << "grid=" << grid_w << 'x' << grid_h << ";pts=" << min_pts << ".." << effective_max_pts();
  if (random) {
    os << ";random=" << random->seed << ':' << random->count;
  } else {
    os << ";exhaustive";
  }
  os << ";filters=" << join_names(sorted_unique(filters)) << ";checks=" << join_names(sorted_unique(checks))
     << ";workers=" << workers << ";dihedral=" << dihedral;
  return fnv1a(os.str());
}

SearchRecord evaluate_pair(const PairAnalysis& p, const std::vector<CheckKind>& checks) {
  const auto start = std::chrono::steady_clock::now();
  SearchRecord rec;
  rec.a = p.a();
  rec.b = p.b();
  rec.report = check_pair(p);
  const ConjectureReport& r = rec.report;
  const bool both_boundary = r.i_a == 0 && r.i_b == 0;
  const auto outcome = [](bool ok) { return ok ? CheckOutcome::Pass : CheckOutcome::Fail; };

  for (CheckKind c : checks) {
    CheckOutcome o = CheckOutcome::NotApplicable;
    switch (c) {
      case CheckKind::Main:
        o = outcome(r.main != Verdict::Fails);
        break;
      case CheckKind::Forms:
        o = outcome(r.strong_holds == r.ib_holds && (!r.strong_holds || r.main != Verdict::Fails) &&
                    (!r.boundary_form_holds.value_or(false) || (r.ib_holds && r.main != Verdict::Fails)));
        break;
      case CheckKind::Freiman: {
        const FreimanResult f = check_freiman(p.a(), p.b(), p.sum());
        o = outcome(f.holds && f.consistent());
        break;
      }
      case CheckKind::Lemma21:
        o = outcome(check_lemma21(p).holds);
        break;
      case CheckKind::Lemma22: {
        const Lemma22Result l = check_lemma22(p);
        o = outcome(l.holds && l.consistent());
        break;
      }
      case CheckKind::Thm31:
        if (r.pair_case == PairCase::UniqueRepresentation) o = outcome(check_thm31_bound(p));
        break;
      case CheckKind::Thm41:
        if (r.i_a >= 1 && r.i_b >= 1) o = outcome(check_thm41(p).holds());
        break;
      case CheckKind::Section5:
        if (both_boundary) o = outcome(check_section5_structure(p, generic_direction(p.a(), p.b())).ok());
        break;
      case CheckKind::Thm51:
        if (both_boundary) o = outcome(check_thm51(p));
        break;
    }
    rec.checks.emplace_back(c, o);
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string format_record(const SearchRecord& rec) {
  const ConjectureReport& r = rec.report;
  const auto tri = [](const std::optional<bool>& v, std::string_view yes, std::string_view no) {
    return std::string(v ? (*v ? yes : no) : "na");
  };
  std::ostringstream os;
  os << "a=" << to_compact(rec.a) << " b=" << to_compact(rec.b) << " tr_a=" << r.tr_a << " tr_b=" << r.tr_b
     << " tr_ab=" << r.tr_ab << " b_a=" << r.b_a << " i_a=" << r.i_a << " b_b=" << r.b_b << " i_b=" << r.i_b
     << " b_ab=" << r.b_ab << " i_ab=" << r.i_ab << " main=" << to_string(r.main)
     << " strong=" << (r.strong_holds ? "true" : "false") << " ib=" << (r.ib_holds ? "true" : "false")
     << " boundary_form=" << tri(r.boundary_form_holds, "holds", "fails") << " case=" << to_string(r.pair_case)
     << " extremal=" << tri(r.extremal, "true", "false");
  for (const auto& [kind, outcome] : rec.checks) os << " check." << to_string(kind) << '=' << to_string(outcome);
  return os.str();
}

std::vector<std::pair<std::string, std::string>> parse_record_line(std::string_view line, std::size_t line_no) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) break;
    const std::size_t end = std::min(line.find(' ', pos), line.size());
    const std::string_view field = line.substr(pos, end - pos);
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError(line_no, pos + 1, "expected key=value");
    out.emplace_back(std::string(field.substr(0, eq)), std::string(field.substr(eq + 1)));
    pos = end;
  }
  if (out.empty()) throw ParseError(line_no, 1, "empty record");
  return out;
}

void SearchSummary::add_line(std::string_view line, std::size_t line_no) {
  const auto fields = parse_record_line(line, line_no);
  ++pairs;
  bool failing = false;
  bool has_main = false;
  for (const auto& [key, value] : fields) {
    if (key == "main") {
      const auto v = parse_verdict(value);
      if (!v) throw ParseError(line_no, 1, "unknown verdict '" + value + "'");
      has_main = true;
      if (*v == Verdict::StrictHolds) ++strict;
      if (*v == Verdict::Equality) ++equality;
      if (*v == Verdict::Fails) {
        ++fails;
        failing = true;
      }
    } else if (key == "case") {
      ++cases[value];
    } else if (key == "boundary_form" && value == "fails") {
      ++boundary_form_fails;
    } else if (key == "extremal" && value == "true") {
      ++extremal;
    } else if (key.starts_with("check.") && value == "fail") {
      ++check_failures[key.substr(6)];
      failing = true;
    }
  }
  if (!has_main) throw ParseError(line_no, 1, "record has no main verdict");
  if (failing) failing_records.emplace_back(line);
}

void SearchSummary::merge(const SearchSummary& other) {
  pairs += other.pairs;
  strict += other.strict;
  equality += other.equality;
  fails += other.fails;
  boundary_form_fails += other.boundary_form_fails;
  extremal += other.extremal;
  for (const auto& [k, n] : other.check_failures) check_failures[k] += n;
  for (const auto& [k, n] : other.cases) cases[k] += n;
  failing_records.insert(failing_records.end(), other.failing_records.begin(), other.failing_records.end());
  std::sort(failing_records.begin(), failing_records.end());
}

SearchSummary summarize_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  SearchSummary s;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    s.add_line(line, line_no);
  }
  return s;
}

std::string format_summary(const SearchSummary& s) {
  std::ostringstream os;
  os << "pairs=" << s.pairs << ", strict=" << s.strict << ", equality=" << s.equality << ", fails=" << s.fails
     << '\n';
  if (s.point_sets != 0) os << "point_sets=" << s.point_sets << '\n';
  for (const auto& [name, n] : s.cases) os << "case." << name << '=' << n << '\n';
  os << "boundary_form_fails=" << s.boundary_form_fails << ", extremal=" << s.extremal << '\n';
  std::size_t check_fail_total = 0;
  for (const auto& [name, n] : s.check_failures) {
    os << "check_failures." << name << '=' << n << '\n';
    check_fail_total += n;
  }
  os << "check_failures=" << check_fail_total << '\n';
  for (const auto& line : s.failing_records) os << "FAIL " << line << '\n';
  if (!s.completed) os << "status=interrupted (resume with the same checkpoint)\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// run_search

namespace {

struct Checkpoint {
  std::uint64_t config_hash = 0;
  std::vector<std::size_t> visited;  // shard pairs consumed, including filtered ones
  std::vector<std::size_t> records;  // lines written to the shard's part file
};

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string format_checkpoint(const Checkpoint& cp) {
  std::ostringstream os;
  os << "planesum-checkpoint 1\nconfig " << std::hex << cp.config_hash << std::dec << "\nshards "
     << cp.visited.size() << '\n';
  for (std::size_t k = 0; k < cp.visited.size(); ++k) {
    os << "shard " << k << ' ' << cp.visited[k] << ' ' << cp.records[k] << '\n';
  }
  return os.str();
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open checkpoint " + path.string());
  Checkpoint cp;
  std::string magic;
  std::string key;
  int version = 0;
  std::size_t shards = 0;
  if (!(in >> magic >> version) || magic != "planesum-checkpoint" || version != 1) {
    throw IoError("not a checkpoint file: " + path.string());
  }
  if (!(in >> key >> std::hex >> cp.config_hash >> std::dec) || key != "config") {
    throw IoError("corrupt checkpoint: " + path.string());
  }
  if (!(in >> key >> shards) || key != "shards") throw IoError("corrupt checkpoint: " + path.string());
  cp.visited.assign(shards, 0);
  cp.records.assign(shards, 0);
  for (std::size_t k = 0; k < shards; ++k) {
    std::size_t index = 0;
    if (!(in >> key >> index >> cp.visited[k] >> cp.records[k]) || key != "shard" || index != k) {
      throw IoError("corrupt checkpoint: " + path.string());
    }
  }
  return cp;
}

std::filesystem::path part_path(const std::filesystem::path& report, std::size_t shard) {
  std::filesystem::path p = report;
  p += ".part" + std::to_string(shard);
  return p;
}

// Keeps the first n lines of a part file (anything after the last checkpoint
// may be partial).
void truncate_part(const std::filesystem::path& path, std::size_t n) {
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    std::string line;
    while (lines.size() < n && std::getline(in, line)) lines.push_back(line);
  }
  if (lines.size() < n) throw IoError("part file shorter than its checkpoint: " + path.string());
  std::string content;
  for (const auto& l : lines) content += l + '\n';
  write_atomically(path, content);
}

// Enumerates the pair sequence: all i <= j in exhaustive mode, the drawn
// pairs in random mode. Both are in sorted record order.
class PairSource {
 public:
  PairSource(const SearchConfig& cfg, std::vector<PointSet>& sets) {
    if (!cfg.random) {
      sets = enumerate_point_sets(cfg.grid_w, cfg.grid_h, cfg.min_pts, cfg.effective_max_pts());
      // Set-level filters prune the pair sequence before it is formed.
      const auto wants = [&](PairFilter f) {
        return std::find(cfg.filters.begin(), cfg.filters.end(), f) != cfg.filters.end();
      };
      const bool boundary_only = wants(PairFilter::BoundaryOnly);
      const bool interior_both = wants(PairFilter::InteriorBoth);
      if (boundary_only || interior_both) {
        std::erase_if(sets, [&](const PointSet& s) {
          const std::size_t i = classify_points(s).i();
          return (boundary_only && i != 0) || (interior_both && i == 0);
        });
      }
    } else {
      const std::vector<PointSet> drawn = sample_point_sets(cfg.grid_w, cfg.grid_h, cfg.min_pts,
                                                            cfg.effective_max_pts(), cfg.random->seed,
                                                            2 * cfg.random->count);
      sets = drawn;
      sort_by_compact(sets);
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
      std::vector<std::string> keys;
      for (const auto& s : sets) keys.push_back(to_compact(s));
      const auto index_of = [&](const PointSet& s) {
        return static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), to_compact(s)) - keys.begin());
      };
      for (std::size_t k = 0; k < cfg.random->count; ++k) {
        std::uint32_t x = index_of(drawn[2 * k]);
        std::uint32_t y = index_of(drawn[2 * k + 1]);
        if (y < x) std::swap(x, y);
        explicit_pairs_.emplace_back(x, y);
      }
      std::sort(explicit_pairs_.begin(), explicit_pairs_.end());
      random_ = true;
    }
    n_ = sets.size();
  }

  template <typename F>
  void for_each(F&& f) const {
    if (random_) {
      for (const auto& [x, y] : explicit_pairs_) {
        if (!f(x, y)) return;
      }
      return;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = x; y < n_; ++y) {
        if (!f(x, y)) return;
      }
    }
  }

 private:
  bool random_ = false;
  std::size_t n_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> explicit_pairs_;
};

bool is_orbit_representative(const PointSet& a, const PointSet& b, const std::string& key_a, const std::string& key_b) {
  const std::pair<std::string, std::string> self{key_a, key_b};
  for (int g = 1; g < 8; ++g) {
    std::string ga = to_compact(canonical_translate(lattice_symmetry(a, g)));
    std::string gb = to_compact(canonical_translate(lattice_symmetry(b, g)));
    if (gb < ga) std::swap(ga, gb);
    if (std::pair{ga, gb} < self) return false;
  }
  return true;
}

}  // namespace

SearchSummary run_search(const SearchConfig& cfg_in) {
  SearchConfig cfg = cfg_in;
  cfg.filters = sorted_unique(cfg.filters);
  cfg.checks = sorted_unique(cfg.checks);
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::size_t workers = cfg.workers;
  const std::uint64_t config_hash = cfg.hash();
  const bool to_files = !cfg.report_path.empty();
  const bool checkpointing = !cfg.checkpoint_path.empty();

  Checkpoint cp{config_hash, std::vector<std::size_t>(workers, 0), std::vector<std::size_t>(workers, 0)};
  if (checkpointing && std::filesystem::exists(cfg.checkpoint_path)) {
    const Checkpoint saved = read_checkpoint(cfg.checkpoint_path);
    if (saved.config_hash != config_hash || saved.visited.size() != workers) {
      throw ResumeMismatch("checkpoint " + cfg.checkpoint_path.string() + " was written for a different configuration");
    }
    cp = saved;
    for (std::size_t k = 0; k < workers; ++k) truncate_part(part_path(cfg.report_path, k), cp.records[k]);
  } else if (to_files) {
    for (std::size_t k = 0; k < workers; ++k) std::filesystem::remove(part_path(cfg.report_path, k));
  }

  std::vector<PointSet> sets;
  const PairSource source(cfg, sets);
  std::vector<HullDecomposition> decomps;
  std::vector<std::string> keys;
  std::vector<std::uint64_t> key_hash;
  decomps.reserve(sets.size());
  for (const auto& s : sets) {
    decomps.push_back(classify_points(s));
    keys.push_back(to_compact(s));
    key_hash.push_back(fnv1a("|", fnv1a(keys.back())));
  }
  const auto has = [&](PairFilter f) { return std::find(cfg.filters.begin(), cfg.filters.end(), f) != cfg.filters.end(); };

  std::mutex cp_mutex;
  std::atomic<std::size_t> evaluated{0};
  std::atomic<bool> stop{false};
  std::vector<SearchSummary> shard_summaries(workers);
  std::exception_ptr failure;

  const auto save_checkpoint = [&](std::size_t shard, std::size_t visited, std::size_t records) {
    if (!checkpointing) return;
    std::lock_guard lock(cp_mutex);
    cp.visited[shard] = visited;
    cp.records[shard] = records;
    write_atomically(cfg.checkpoint_path, format_checkpoint(cp));
  };

  const auto work = [&](std::size_t shard) {
    try {
      std::ofstream part;
      if (to_files) {
        part.open(part_path(cfg.report_path, shard), std::ios::binary | std::ios::app);
        if (!part) throw IoError("cannot open part file for shard " + std::to_string(shard));
      }
      std::size_t visited = 0;
      std::size_t records = cp.records[shard];
      const std::size_t skip = cp.visited[shard];
      std::size_t since_checkpoint = 0;

      source.for_each([&](std::size_t x, std::size_t y) {
        if (stop.load(std::memory_order_relaxed)) return false;
        if (fnv1a(keys[y], key_hash[x]) % workers != shard) return true;
        if (visited++ < skip) return true;

        const PointSet& a = sets[x];
        const PointSet& b = sets[y];
        bool keep = true;
        if (has(PairFilter::BoundaryOnly)) keep = keep && decomps[x].i() == 0 && decomps[y].i() == 0;
        if (has(PairFilter::InteriorBoth)) keep = keep && decomps[x].i() >= 1 && decomps[y].i() >= 1;
        if (keep && cfg.dihedral) keep = is_orbit_representative(a, b, keys[x], keys[y]);
        if (keep) {
          const PairAnalysis analysis(a, decomps[x], b, decomps[y]);
          if (has(PairFilter::UniqueRep)) keep = analysis.sum().size() == a.size() * b.size();
          if (keep) {
            const std::string line = format_record(evaluate_pair(analysis, cfg.checks));
            if (to_files) {
              part << line << '\n';
            } else {
              shard_summaries[shard].add_line(line);
            }
            ++records;
            if (cfg.pair_budget && evaluated.fetch_add(1) + 1 >= *cfg.pair_budget) stop = true;
          }
        }
        if (++since_checkpoint >= cfg.checkpoint_interval) {
          since_checkpoint = 0;
          if (to_files) part.flush();
          save_checkpoint(shard, visited, records);
        }
        return true;
      });
      if (to_files) {
        part.flush();
        if (!part) throw IoError("write failed for shard " + std::to_string(shard));
      }
      save_checkpoint(shard, std::max(visited, skip), records);
    } catch (...) {
      std::lock_guard lock(cp_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t k = 0; k < workers; ++k) threads.emplace_back(work, k);
  }
  if (failure) std::rethrow_exception(failure);

  SearchSummary summary;
  summary.point_sets = sets.size();
  if (stop) {
    summary.completed = false;
    summary.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return summary;
  }

  if (!to_files) {
    for (const SearchSummary& part : shard_summaries) summary.merge(part);
    summary.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return summary;
  }

  // Every shard is already in sorted line order; merge them.
  using Head = std::pair<std::string, std::size_t>;
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heap;
  std::vector<std::ifstream> parts;
  for (std::size_t k = 0; k < workers; ++k) parts.emplace_back(part_path(cfg.report_path, k));
  const auto advance = [&](std::size_t k) {
    std::string line;
    if (std::getline(parts[k], line)) heap.emplace(std::move(line), k);
  };
  for (std::size_t k = 0; k < workers; ++k) advance(k);

  std::filesystem::path report_tmp = cfg.report_path;
  report_tmp += ".tmp";
  std::ofstream report(report_tmp, std::ios::binary | std::ios::trunc);
  if (!report) throw IoError("cannot write " + report_tmp.string());
  std::size_t line_no = 0;
  while (!heap.empty()) {
    auto [line, k] = heap.top();
    heap.pop();
    summary.add_line(line, ++line_no);
    report << line << '\n';
    advance(k);
  }
  report.close();
  if (!report) throw IoError("write failed: " + report_tmp.string());
  parts.clear();
  std::filesystem::rename(report_tmp, cfg.report_path);
  for (std::size_t k = 0; k < workers; ++k) std::filesystem::remove(part_path(cfg.report_path, k));
  if (checkpointing) std::filesystem::remove(cfg.checkpoint_path);
  summary.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

}  // namespace planesum
