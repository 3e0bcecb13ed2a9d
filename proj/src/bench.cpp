#include "cm/bench.hpp"

#include <algorithm>
#include <chrono>

#include "cm/instances.hpp"
#include "cm/verify.hpp"

namespace cm {

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& ns,
                                const std::vector<std::uint64_t>& seeds, Method method, int c,
                                int repeats) {
  if (seeds.empty()) throw PreconditionError("bench needs at least one seed");
  std::vector<BenchRow> rows;
  for (std::size_t n : ns) {
    BenchRow row;
    row.n = n;
    for (std::uint64_t seed : seeds) {
      PointSet ps = random_general_position(n, seed, kCoordLimit);
      if (c > 0) ps = random_balanced_coloring(ps, c, seed);
      double best = 0;
      MatchingResult res;
      for (int rep = 0; rep < std::max(repeats, 1); ++rep) {
        const auto start = std::chrono::steady_clock::now();
        res = solve(ps, method, seed);
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        if (rep == 0 || took.count() < best) best = took.count();
      }
      row.mean_seconds += best;
      row.mean_size += static_cast<double>(res.matching.size());
      row.mean_bound += boost::rational_cast<double>(res.report.guaranteed);
      row.all_meet_bound = row.all_meet_bound && check_bound_report(res.report);
    }
    const auto k = static_cast<double>(seeds.size());
    row.mean_seconds /= k;
    row.mean_size /= k;
    row.mean_bound /= k;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cm
