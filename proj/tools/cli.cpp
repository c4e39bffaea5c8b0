#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

#include "planesum/conjecture.hpp"
#include "planesum/errors.hpp"
#include "planesum/harness.hpp"
#include "planesum/point_io.hpp"
#include "planesum/triangulation.hpp"

namespace planesum::cli {

namespace {

PointSet load(const std::string& path, std::ostream& err) {
  ParsedPointSet parsed = read_point_set_file(path);
  for (const auto& w : parsed.warnings) err << path << ": warning: " << w << '\n';
  return std::move(parsed.points);
}

std::string tri(const std::optional<bool>& v, const char* yes, const char* no) { return v ? (*v ? yes : no) : "na"; }

void print_report(std::ostream& out, const ConjectureReport& r) {
  out << "tr_a=" << r.tr_a << " tr_b=" << r.tr_b << " tr_ab=" << r.tr_ab << '\n'
      << "b_a=" << r.b_a << " i_a=" << r.i_a << " b_b=" << r.b_b << " i_b=" << r.i_b << " b_ab=" << r.b_ab
      << " i_ab=" << r.i_ab << '\n'
      << "main=" << to_string(r.main) << '\n'
      << "strong=" << (r.strong_holds ? "holds" : "fails") << '\n'
      << "ib=" << (r.ib_holds ? "holds" : "fails") << '\n'
      << "boundary_form=" << tri(r.boundary_form_holds, "holds", "fails") << '\n'
      << "case=" << to_string(r.pair_case) << '\n'
      << "extremal=" << tri(r.extremal, "true", "false") << '\n';
}

// Parses "WxH".
bool parse_grid(const std::string& text, int& w, int& h) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) return false;
  try {
    std::size_t used = 0;
    w = std::stoi(text.substr(0, x), &used);
    if (used != x) return false;
    h = std::stoi(text.substr(x + 1), &used);
    return used == text.size() - x - 1;
  } catch (const std::exception&) {
    return false;
  }
}

int run_check(const std::string& a_path, const std::string& b_path, std::ostream& out, std::ostream& err) {
  const PointSet a = load(a_path, err);
  const PointSet b = load(b_path, err);
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  const PairAnalysis p(a, da, b, db);
  const ConjectureReport r = check_pair(p);
  print_report(out, r);
  const Lemma21Result l21 = check_lemma21(p);
  const Lemma22Result l22 = check_lemma22(p);
  out << "lemma21=" << (l21.holds ? "holds" : "FAILS") << '\n'
      << "lemma22=" << (l22.holds && l22.consistent() ? "holds" : "FAILS") << (l22.equality ? " (equality)" : "")
      << '\n';
  if (r.main == Verdict::Fails) out << "COUNTEREXAMPLE: main inequality fails\n";
  return r.main != Verdict::Fails && l21.holds && l22.holds && l22.consistent() ? kExitOk : kExitCheckFailed;
}

int run_oracle(const std::string& path, std::ostream& out, std::ostream& err) {
  const PointSet s = load(path, err);
  const auto euler = tr_euler(classify_points(s));
  const auto explicit_count = static_cast<std::int64_t>(triangulate_explicit(s).triangles.size());
  const bool ok = euler == explicit_count;
  out << "euler=" << euler << " explicit=" << explicit_count << (ok ? " OK" : " MISMATCH") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int run_classify(const std::string& a_path, const std::string& b_path, std::ostream& out, std::ostream& err) {
  const PointSet a = load(a_path, err);
  const PointSet b = load(b_path, err);
  const auto da = classify_points(a);
  const auto db = classify_points(b);
  const PairAnalysis p(a, da, b, db);
  const ConjectureReport r = check_pair(p);
  out << "case=" << to_string(r.pair_case) << '\n'
      << "boundary_form=" << tri(r.boundary_form_holds, "holds", "fails") << '\n'
      << "extremal=" << tri(r.extremal, "true", "false") << '\n';
  bool ok = true;
  if (r.boundary_form_holds) {
    const bool thm51 = check_thm51(p);
    const StructureReport s = check_section5_structure(p, generic_direction(a, b));
    out << "thm51=" << (thm51 ? "holds" : "FAILS") << '\n'
        << "arc_structure=" << (s.ok() ? "holds" : "FAILS") << " v=" << s.v << '\n';
    if (s.prop54) {
      out << "extremal_configuration=" << (s.prop54->swapped ? "(B,A," : "(A,B,") << (s.prop54->flipped ? "-v)" : "v)")
          << '\n';
    }
    ok = thm51 && s.ok();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_family(const std::string& polygon_path, std::int64_t k, std::int64_t m, std::ostream& out,
               std::ostream& err) {
  const PointSet polygon = load(polygon_path, err);
  const FamilyResult f = equality_family(polygon, k, m);
  out << "|A|=" << f.a.size() << " |B|=" << f.b.size() << '\n';
  print_report(out, f.report);
  return f.report.main == Verdict::Equality ? kExitOk : kExitCheckFailed;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of the planar triangulation-number sumset inequality", "planesum"};
  app.require_subcommand(1);

  std::string a_path;
  std::string b_path;
  auto* check = app.add_subcommand("check", "Evaluate every inequality form on a pair of point sets");
  check->add_option("A", a_path, "first point set (.pts)")->required();
  check->add_option("B", b_path, "second point set (.pts)")->required();

  std::string oracle_path;
  auto* oracle = app.add_subcommand("oracle", "Compare b + 2i - 2 with an explicit triangulation");
  oracle->add_option("S", oracle_path, "point set (.pts)")->required();

  auto* classify = app.add_subcommand("classify", "Report the special case and extremal status of a pair");
  classify->add_option("A", a_path, "first point set (.pts)")->required();
  classify->add_option("B", b_path, "second point set (.pts)")->required();

  std::string grid = "3x3";
  std::size_t min_pts = 3;
  std::size_t max_pts = 0;
  std::vector<std::string> check_names;
  std::vector<std::string> filter_names;
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;
  std::size_t workers = 1;
  std::string report_path;
  std::string checkpoint_path;
  bool dihedral = false;
  std::optional<std::size_t> budget;
  auto* search = app.add_subcommand("search", "Exhaustive or random search over grid point sets");
  search->add_option("--grid", grid, "grid size WxH")->required();
  search->add_option("--min", min_pts, "minimum points per set")->capture_default_str();
  search->add_option("--max", max_pts, "maximum points per set (default: all cells)");
  search->add_option("--check", check_names, "checks to run: main, forms, freiman, lemma21, lemma22, thm31, thm41, "
                                             "section5, thm51, all")
      ->delimiter(',');
  search->add_option("--filter", filter_names, "pair filters: boundary-only, interior-both, unique-rep")
      ->delimiter(',');
  search->add_option("--seed", seed, "random mode: generator seed");
  search->add_option("--count", count, "random mode: number of pairs");
  search->add_option("--workers", workers, "worker threads (PLANESUM_WORKERS overrides)")->capture_default_str();
  search->add_option("--report", report_path, "line-delimited report output");
  search->add_option("--checkpoint", checkpoint_path, "checkpoint file; resumed when present");
  search->add_flag("--dihedral", dihedral, "reduce pairs by the eight lattice symmetries");
  search->add_option("--budget", budget, "stop after this many evaluated pairs")->group("");

  std::string polygon_path;
  std::int64_t fam_k = 1;
  std::int64_t fam_m = 1;
  auto* family = app.add_subcommand("family", "Check the lattice-polygon dilate family kP, mP");
  family->add_option("--polygon", polygon_path, "polygon vertices (.pts)")->required();
  family->add_option("--k", fam_k, "first dilation factor")->required()->check(CLI::PositiveNumber);
  family->add_option("--m", fam_m, "second dilation factor")->required()->check(CLI::PositiveNumber);

  std::string summarize_path;
  auto* report = app.add_subcommand("report", "Report file utilities");
  report->require_subcommand(1);
  auto* summarize = report->add_subcommand("summarize", "Aggregate a report file");
  summarize->add_option("file", summarize_path, "report file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(a_path, b_path, out, err);
    if (oracle->parsed()) return run_oracle(oracle_path, out, err);
    if (classify->parsed()) return run_classify(a_path, b_path, out, err);
    if (family->parsed()) return run_family(polygon_path, fam_k, fam_m, out, err);
    if (summarize->parsed()) {
      const SearchSummary s = summarize_report(summarize_path);
      out << format_summary(s);
      return s.clean() ? kExitOk : kExitCheckFailed;
    }
    if (search->parsed()) {
      SearchConfig cfg;
      if (!parse_grid(grid, cfg.grid_w, cfg.grid_h)) {
        err << "invalid --grid '" << grid << "', expected WxH\n";
        return kExitUsage;
      }
      cfg.min_pts = min_pts;
      cfg.max_pts = max_pts;
      cfg.checks.clear();
      for (const auto& name : check_names) {
        if (name == "all") {
          cfg.checks = all_checks();
          continue;
        }
        const auto c = parse_check(name);
        if (!c) {
          err << "unknown check '" << name << "'\n";
          return kExitUsage;
        }
        cfg.checks.push_back(*c);
      }
      if (cfg.checks.empty()) cfg.checks.push_back(CheckKind::Main);
      for (const auto& name : filter_names) {
        const auto f = parse_filter(name);
        if (!f) {
          err << "unknown filter '" << name << "'\n";
          return kExitUsage;
        }
        cfg.filters.push_back(*f);
      }
      if (seed.has_value() != (count != 0)) {
        err << "random mode needs both --seed and --count\n";
        return kExitUsage;
      }
      if (seed) cfg.random = RandomMode{*seed, count};
      cfg.workers = workers;
      if (const char* env = std::getenv("PLANESUM_WORKERS"); env != nullptr && *env != '\0') {
        try {
          cfg.workers = static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
          err << "invalid PLANESUM_WORKERS '" << env << "'\n";
          return kExitUsage;
        }
      }
      cfg.dihedral = dihedral;
      cfg.report_path = report_path;
      cfg.checkpoint_path = checkpoint_path;
      cfg.pair_budget = budget;
      const SearchSummary s = run_search(cfg);
      out << format_summary(s);
      return s.clean() ? kExitOk : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace planesum::cli
