#pragma once

#include <cstdint>
#include <vector>

#include "cm/connected_matching.hpp"

namespace cm {

struct BenchRow {
  std::size_t n = 0;
  double mean_size = 0;
  double mean_bound = 0;    // mean of the reported guarantees
  double mean_seconds = 0;  // pipeline only, instance generation excluded
  bool all_meet_bound = true;
};

/// Runs `method` on random general-position sets (balanced c-colored when
/// c > 0) for every n and seed. Each timing is the best of `repeats` runs.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& ns,
                                const std::vector<std::uint64_t>& seeds, Method method,
                                int c = 0, int repeats = 1);

}  // namespace cm
