// Command-line front end: gen, match, verify, oracle, svg, bench.
// Exit codes: 0 ok, 1 verification failure, 2 usage or precondition error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cm/bench.hpp"
#include "cm/connected_matching.hpp"
#include "cm/geom.hpp"
#include "cm/instances.hpp"
#include "cm/io.hpp"
#include "cm/separator.hpp"
#include "cm/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::uint64_t default_seed() {
  const char* env = std::getenv("CM_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw cm::PreconditionError(std::string("CM_SEED is not an unsigned integer: ") + env);
  }
}

// Writes to `path`, or to stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw cm::PreconditionError("cannot write " + path);
  out << text;
}

// The exact general-position check costs O(n^2 log n); `assume_gp` skips it.
cm::PointSet load_points(const std::string& path, bool assume_gp = false) {
  cm::PointSet ps = cm::read_points_file(path);
  if (assume_gp) ps.gp = cm::GeneralPosition::Assumed;
  cm::require_valid(ps);
  ps.gp = cm::GeneralPosition::Verified;
  return ps;
}

std::string report_lines(const cm::BoundReport& r) {
  std::ostringstream s;
  s << "# theorem=" << cm::theorem_name(r.theorem) << " n=" << r.n << " c=" << r.c
    << " size=" << r.achieved << " bound=" << r.guaranteed.numerator() << '/'
    << r.guaranteed.denominator() << " ceil=" << cm::ceil_of(r.guaranteed)
    << " guaranteed=" << (r.applies ? "yes" : "no");
  if (r.theorem == cm::Theorem::Deep) s << " depth=" << r.depth;
  s << '\n';
  return s.str();
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw cm::PreconditionError("bad size in --n-list: '" + item + "'");
    }
  }
  if (out.empty()) throw cm::PreconditionError("--n-list is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected matchings of planar point sets"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  bool seed_given = false;
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed",
        [&](const std::uint64_t& v) {
          seed = v;
          seed_given = true;
        },
        "Random seed (default: $CM_SEED or 0)");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a point set");
  std::string kind = "random";
  std::size_t n = 0;
  int colors = 0;
  cm::Coord coord_max = cm::kDefaultCoordMax;
  std::string out_path;
  gen->add_option("--kind", kind, "windmill3 | windmill4 | random | convex | hexcenter");
  gen->add_option("--n", n, "Number of points")->required();
  gen->add_option("--c", colors, "Number of colors (0 = uncolored)");
  gen->add_option("--coord-max", coord_max, "Largest absolute coordinate");
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");
  add_seed(gen);

  // match
  auto* match = app.add_subcommand("match", "Compute a connected matching");
  std::string points_path, method = "auto";
  bool force_colored = false;
  bool assume_gp = false;
  match->add_option("points", points_path, "Points file")->required();
  match->add_flag("--assume-gp", assume_gp,
                  "Skip the exact check for collinear triples (results are undefined if one exists)");
  match->add_option("--method", method, "auto | uncolored | deep | colored");
  match->add_flag("--colored", force_colored, "Use the colored pipeline");
  match->add_option("-o,--output", out_path, "Matching file (default stdout)");
  add_seed(match);

  // verify
  auto* verify = app.add_subcommand("verify", "Check a matching file against a points file");
  std::string matching_path;
  bool require_poly = false;
  verify->add_option("points", points_path, "Points file")->required();
  verify->add_option("matching", matching_path, "Matching file")->required();
  verify->add_flag("--colored", require_poly,
                   "Require bichromatic edges (implied by a colored points file)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact maximum connected matching, n <= 14");
  oracle->add_option("points", points_path, "Points file")->required();
  oracle->add_option("-o,--output", out_path, "Matching file (default stdout)");

  // svg
  auto* svg = app.add_subcommand("svg", "Draw points, a matching and a separating path");
  bool draw_separator = false;
  svg->add_option("points", points_path, "Points file")->required();
  svg->add_option("--matching", matching_path, "Matching file to draw");
  svg->add_flag("--separator", draw_separator, "Also draw a separating path");
  svg->add_option("-o,--output", out_path, "SVG file (default stdout)");
  add_seed(svg);

  // bench
  auto* bench = app.add_subcommand("bench", "Time a pipeline on random sets");
  std::string n_list = "1000,2000,4000";
  std::size_t seed_count = 3;
  int repeats = 3;
  bench->add_option("--n-list", n_list, "Comma-separated sizes");
  bench->add_option("--seeds", seed_count, "Number of seeds per size");
  bench->add_option("--method", method, "auto | uncolored | deep | colored");
  bench->add_option("--c", colors, "Number of colors (0 = uncolored)");
  bench->add_option("--repeats", repeats, "Timing runs per instance (best is kept)");
  add_seed(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!seed_given) seed = default_seed();

    if (gen->parsed()) {
      cm::GenSpec spec{cm::parse_kind(kind), n, colors, seed, coord_max};
      std::ostringstream s;
      cm::write_points(s, cm::generate(spec));
      emit(out_path, s.str());
      return kOk;
    }

    if (match->parsed()) {
      const cm::PointSet ps = load_points(points_path, assume_gp);
      const cm::Method m = force_colored ? cm::Method::Colored : cm::parse_method(method);
      const cm::MatchingResult res = cm::solve(ps, m, seed);
      std::ostringstream s;
      cm::write_matching(s, res.matching);
      emit(out_path, s.str());
      std::cout << report_lines(res.report);
      const auto problem = cm::describe_matching_problem(ps, res.matching, ps.colored());
      if (!problem.empty()) {
        std::cerr << "error: " << problem << '\n';
        return kFailed;
      }
      if (!cm::check_bound_report(res.report)) {
        std::cerr << "error: size below the guaranteed bound\n";
        return kFailed;
      }
      return kOk;
    }

    if (verify->parsed()) {
      const cm::PointSet ps = load_points(points_path);
      const cm::Matching m = cm::read_matching_file(matching_path);
      const auto problem = cm::describe_matching_problem(ps, m, require_poly || ps.colored());
      const bool ok = problem.empty();
      std::cout << "size=" << m.size() << " connected=" << (ok ? "true" : "false") << '\n';
      if (!ok) {
        std::cout << "error: " << problem << '\n';
        return kFailed;
      }
      return kOk;
    }

    if (oracle->parsed()) {
      const cm::PointSet ps = load_points(points_path);
      const auto res = cm::oracle_max_connected_matching(ps);
      std::ostringstream s;
      cm::write_matching(s, res.matching);
      emit(out_path, s.str());
      if (!out_path.empty() && out_path != "-") std::cout << "size=" << res.size << '\n';
      return kOk;
    }

    if (svg->parsed()) {
      const cm::PointSet ps = load_points(points_path);
      std::optional<cm::Matching> m;
      if (!matching_path.empty()) {
        m = cm::read_matching_file(matching_path);
        if (!cm::is_matching(ps, *m)) throw cm::PreconditionError("matching file is not a matching");
      }
      std::optional<cm::Separator> sep;
      if (draw_separator) sep = cm::separating_path(ps, seed);
      emit(out_path, cm::render_svg(ps, m ? &*m : nullptr, sep ? &*sep : nullptr));
      return kOk;
    }

    if (bench->parsed()) {
      const auto sizes = parse_sizes(n_list);
      std::vector<std::uint64_t> seeds;
      for (std::size_t i = 0; i < seed_count; ++i) seeds.push_back(seed + i);
      const auto rows = cm::run_bench(sizes, seeds, cm::parse_method(method), colors, repeats);
      std::cout << std::setw(8) << "n" << std::setw(12) << "mean_size" << std::setw(12) << "bound"
                << std::setw(14) << "mean_time_s" << std::setw(8) << "ratio" << '\n';
      bool ok = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        std::cout << std::setw(8) << r.n << std::setw(12) << std::fixed << std::setprecision(2)
                  << r.mean_size << std::setw(12) << r.mean_bound << std::setw(14)
                  << std::setprecision(6) << r.mean_seconds << std::setw(8)
                  << std::setprecision(2);
        if (i > 0 && rows[i - 1].mean_seconds > 0) {
          std::cout << r.mean_seconds / rows[i - 1].mean_seconds;
        } else {
          std::cout << "-";
        }
        std::cout << '\n';
        ok = ok && r.all_meet_bound;
      }
      return ok ? kOk : kFailed;
    }
  } catch (const cm::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // PreconditionError
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {  // RankError
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
