#pragma once

#include "parity_sched/core.hpp"

namespace parity {

/// Exact optimum of an instance, valid in both the scheduling and the
/// partition view: 2 * optimal_makespan == S(K) + min_difference.
struct OptimalResult {
  Time optimal_makespan = 0; // C_O
  Time min_difference = 0;   // d_min
  Partition witness;
};

inline constexpr std::size_t kBruteForceMaxJobs = 24;
inline constexpr std::uint64_t kDefaultTableCap = 100'000'000;

/// Enumerates all 2^(n-1) bipartitions with job 1 pinned to side 1. Ties
/// on the difference go to the lexicographically smallest side-1 index list.
/// Throws TooLarge when n > max_jobs.
OptimalResult optimal_bruteforce(const JobSet &jobs,
                                 std::size_t max_jobs = kBruteForceMaxJobs);

/// Subset-sum reachability over [0, floor(S/2)]. Throws SumCapExceeded when
/// the table (floor(S/2) + 1 cells) would exceed table_cap.
OptimalResult optimal_dp(const JobSet &jobs,
                         std::uint64_t table_cap = kDefaultTableCap);

/// Checks that the minimum-makespan split and the minimum-difference split
/// have identical sum pairs, and that 2 * C_O == S + d_min.
bool equivalence_check(const JobSet &jobs,
                       std::uint64_t table_cap = kDefaultTableCap);

} // namespace parity
