#pragma once

#include <optional>

#include "parity_sched/core.hpp"
#include "parity_sched/exact.hpp"

namespace parity {

/// Jobs whose time is at least the sum of every later job. Indices are
/// one-based and ascending; job n-1 is always included. The possible last
/// job (plj) is the smallest dominant index, i.e. the longest dominant job.
/// A single-job set reports {1} with plj = 1.
struct DominanceInfo {
  std::vector<std::size_t> dominant_indices;
  std::size_t plj = 1;
};

DominanceInfo dominant_indices(const JobSet &jobs);

/// 7/6, the worst case of LPT on two machines.
Ratio graham_bound();

/// (2k + 1) / (2k) where k is the job count of the critical machine.
Ratio coffman_sethi_bound(std::uint64_t k);

/// A bound of the form 1 + (24h^2 + 12h + 7) / (48h^3) with h = ceil(index/2),
/// together with its value capped at 7/6.
struct ClosedFormBound {
  std::size_t half_index = 0;
  Ratio raw;
  Ratio capped;
};

/// Last-job bound: index = L, h = M. Throws InvalidL for L == 0.
ClosedFormBound theorem3_bound(std::size_t last_job_index);

/// A priori bound: index = plj, h = ceil(plj/2). Throws InvalidPlj for 0.
ClosedFormBound theorem4_bound(std::size_t plj);

/// 1 + 1/n + delta/n, the large-N estimate of C_G / C_O for a set whose
/// possible last job is n and delta = t_n / t_1. Throws InvalidDelta unless
/// 0 < delta <= 1.
Ratio asymptotic_estimate(std::uint64_t n_plj, const Ratio &delta);

struct BoundInputs {
  std::size_t last_job_index = 0;     // L
  std::size_t m_value = 0;            // M = ceil(L/2)
  std::size_t critical_job_count = 0; // k
  std::size_t plj = 0;
  std::size_t p_ceil = 0;             // ceil(plj/2)
};

struct BoundReport {
  Time makespan = 0; // C_G
  std::optional<Time> optimal_makespan;
  std::optional<Ratio> ratio_actual;

  Ratio graham;
  Ratio coffman_sethi;
  Ratio coffman_sethi_capped;
  Ratio theorem3_raw;
  Ratio theorem3_capped;
  Ratio theorem4_raw;
  Ratio theorem4_capped;
  BoundInputs inputs;
  DominanceInfo dominance;

  // Only meaningful when an oracle ran.
  bool capped_bounds_hold = true;
  bool raw3_violated = false;
  bool raw4_violated = false;
  bool lemma1_holds = true; // L >= plj, checked regardless of oracle
};

/// Runs LPT and the dominance sweep (plus the DP oracle when with_oracle)
/// and evaluates every bound. Validity of the capped bounds is checked by
/// exact cross-multiplication; failures of the uncapped closed forms are only flagged.
BoundReport full_report(const JobSet &jobs, bool with_oracle,
                        std::uint64_t table_cap = kDefaultTableCap);

} // namespace parity
