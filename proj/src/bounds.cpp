#include "parity_sched/bounds.hpp"

#include <algorithm>

#include "parity_sched/lpt.hpp"

namespace parity {

namespace {

// Largest h for which 48h^3 stays below 2^64.
constexpr std::size_t kMaxHalfIndex = std::size_t{1} << 19;

// (P + 1)/P - 1/(2P) with P = 24h^3 / (7 + 12h + 24h^2) collapses to
// 1 + 1/(2P) = (48h^3 + 24h^2 + 12h + 7) / (48h^3).
ClosedFormBound closed_form(std::size_t index, ErrorCode invalid,
                            const char *name) {
  if (index == 0)
    throw Error(invalid, std::string(name) + " must be at least 1");
  const std::size_t h = ceil_half(index);
  if (h > kMaxHalfIndex)
    throw Error(ErrorCode::Overflow,
                std::string(name) + " too large for exact bound evaluation");
  const u128 hh = h;
  const u128 den = 48 * hh * hh * hh;
  const u128 num = den + 24 * hh * hh + 12 * hh + 7;
  ClosedFormBound b;
  b.half_index = h;
  b.raw = Ratio::from_wide(num, den);
  b.capped = min(b.raw, graham_bound());
  return b;
}

} // namespace

DominanceInfo dominant_indices(const JobSet &jobs) {
  const std::size_t n = jobs.size();
  DominanceInfo info;
  if (n == 1) {
    info.dominant_indices = {1};
    info.plj = 1;
    return info;
  }
  // Suffix sums stay below S(K), which fits in 64 bits.
  Time suffix = jobs.t(n);
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (i == n - 1 || jobs.t(i) >= suffix)
      info.dominant_indices.push_back(i);
    suffix += jobs.t(i);
  }
  std::reverse(info.dominant_indices.begin(), info.dominant_indices.end());
  info.plj = info.dominant_indices.front();
  return info;
}

Ratio graham_bound() { return Ratio(7, 6); }

Ratio coffman_sethi_bound(std::uint64_t k) {
  if (k == 0)
    throw Error(ErrorCode::InvalidK, "k must be at least 1");
  if (k > (std::uint64_t{1} << 62))
    throw Error(ErrorCode::Overflow, "k too large");
  return Ratio(2 * k + 1, 2 * k);
}

ClosedFormBound theorem3_bound(std::size_t last_job_index) {
  return closed_form(last_job_index, ErrorCode::InvalidL, "L");
}

ClosedFormBound theorem4_bound(std::size_t plj) {
  return closed_form(plj, ErrorCode::InvalidPlj, "plj");
}

Ratio asymptotic_estimate(std::uint64_t n_plj, const Ratio &delta) {
  if (n_plj == 0)
    throw Error(ErrorCode::InvalidPlj, "n must be at least 1");
  if (delta.numerator() == 0 || delta.numerator() > delta.denominator())
    throw Error(ErrorCode::InvalidDelta,
                "delta must lie in (0, 1], got " + delta.to_string());
  const u128 n = n_plj;
  const u128 d = delta.denominator();
  return Ratio::from_wide(n * d + d + delta.numerator(), n * d);
}

BoundReport full_report(const JobSet &jobs, bool with_oracle,
                        std::uint64_t table_cap) {
  const TwoMachineSchedule schedule = lpt_schedule(jobs);
  BoundReport r;
  r.makespan = schedule.makespan;
  r.dominance = dominant_indices(jobs);

  r.inputs.last_job_index = schedule.last_job_index;
  r.inputs.m_value = schedule.m_value;
  r.inputs.critical_job_count = schedule.critical_job_count;
  r.inputs.plj = r.dominance.plj;
  r.inputs.p_ceil = ceil_half(r.dominance.plj);

  r.graham = graham_bound();
  r.coffman_sethi = coffman_sethi_bound(schedule.critical_job_count);
  r.coffman_sethi_capped = min(r.coffman_sethi, r.graham);
  const auto t3 = theorem3_bound(schedule.last_job_index);
  const auto t4 = theorem4_bound(r.dominance.plj);
  r.theorem3_raw = t3.raw;
  r.theorem3_capped = t3.capped;
  r.theorem4_raw = t4.raw;
  r.theorem4_capped = t4.capped;
  r.lemma1_holds = schedule.last_job_index >= r.dominance.plj;

  if (with_oracle) {
    const Time cg = schedule.makespan;
    const Time co = optimal_dp(jobs, table_cap).optimal_makespan;
    r.optimal_makespan = co;
    r.ratio_actual = Ratio(cg, co);
    r.capped_bounds_hold = ratio_at_most(cg, co, r.graham) &&
                           ratio_at_most(cg, co, r.coffman_sethi) &&
                           ratio_at_most(cg, co, r.theorem3_capped) &&
                           ratio_at_most(cg, co, r.theorem4_capped);
    r.raw3_violated = !ratio_at_most(cg, co, r.theorem3_raw);
    r.raw4_violated = !ratio_at_most(cg, co, r.theorem4_raw);
  }
  return r;
}

} // namespace parity
