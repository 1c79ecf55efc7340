#include "parity_sched/parity_sched.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "parity_sched/bounds.hpp"
#include "parity_sched/exact.hpp"
#include "parity_sched/lpt.hpp"
#include "parity_sched/sim.hpp"

struct ps_jobset {
  parity::JobSet value;
};
struct ps_schedule {
  parity::TwoMachineSchedule value;
};
struct ps_partition {
  parity::Partition value;
};
struct ps_optimum {
  parity::OptimalResult value;
};
struct ps_dominance {
  parity::DominanceInfo value;
};

namespace {

thread_local std::string last_error;

ps_status status_of(parity::ErrorCode code) {
  using parity::ErrorCode;
  switch (code) {
  case ErrorCode::EmptyInput: return PS_ERR_EMPTY_INPUT;
  case ErrorCode::NonPositiveTime: return PS_ERR_NON_POSITIVE_TIME;
  case ErrorCode::Overflow: return PS_ERR_OVERFLOW;
  case ErrorCode::MismatchedInstance: return PS_ERR_MISMATCHED_INSTANCE;
  case ErrorCode::TooLarge: return PS_ERR_TOO_LARGE;
  case ErrorCode::SumCapExceeded: return PS_ERR_SUM_CAP_EXCEEDED;
  case ErrorCode::InvalidK: return PS_ERR_INVALID_K;
  case ErrorCode::InvalidL: return PS_ERR_INVALID_L;
  case ErrorCode::InvalidPlj: return PS_ERR_INVALID_PLJ;
  case ErrorCode::InvalidDelta: return PS_ERR_INVALID_DELTA;
  case ErrorCode::InvalidConfig: return PS_ERR_INVALID_CONFIG;
  }
  return PS_ERR_INTERNAL;
}

ps_status fail(ps_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn> ps_status guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const parity::Error &e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(PS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(PS_ERR_INTERNAL, e.what());
  }
}

#define PS_REQUIRE(ptr)                                                        \
  do {                                                                         \
    if ((ptr) == nullptr)                                                      \
      return fail(PS_ERR_NULL_ARGUMENT, #ptr " is NULL");                      \
  } while (0)

ps_ratio to_c(const parity::Ratio &r) { return {r.numerator(), r.denominator()}; }

template <class T, class Src>
ps_status copy_out(const Src &src, T *dst, std::size_t capacity,
                   std::size_t *count) {
  if (count != nullptr)
    *count = src.size();
  if (capacity == 0)
    return PS_OK;
  PS_REQUIRE(dst);
  const std::size_t n = std::min(capacity, src.size());
  std::copy_n(src.begin(), n, dst);
  return PS_OK;
}

parity::sim::ExperimentConfig from_c(const ps_experiment_config &c) {
  parity::sim::ExperimentConfig cfg;
  cfg.job_count = c.job_count;
  cfg.trials = c.trials;
  cfg.time_min = c.time_min;
  cfg.time_max = c.time_max;
  cfg.seed = c.seed;
  cfg.threads = c.threads;
  return cfg;
}

std::uint64_t cap_or_default(std::uint64_t cap) {
  return cap == 0 ? parity::kDefaultTableCap : cap;
}

} // namespace

extern "C" {

const char *ps_version(void) { return PARITY_SCHED_VERSION; }

const char *ps_status_name(ps_status status) {
  switch (status) {
  case PS_OK: return "OK";
  case PS_ERR_NULL_ARGUMENT: return "NullArgument";
  case PS_ERR_EMPTY_INPUT: return "EmptyInput";
  case PS_ERR_NON_POSITIVE_TIME: return "NonPositiveTime";
  case PS_ERR_OVERFLOW: return "Overflow";
  case PS_ERR_MISMATCHED_INSTANCE: return "MismatchedInstance";
  case PS_ERR_TOO_LARGE: return "TooLarge";
  case PS_ERR_SUM_CAP_EXCEEDED: return "SumCapExceeded";
  case PS_ERR_INVALID_K: return "InvalidK";
  case PS_ERR_INVALID_L: return "InvalidL";
  case PS_ERR_INVALID_PLJ: return "InvalidPlj";
  case PS_ERR_INVALID_DELTA: return "InvalidDelta";
  case PS_ERR_INVALID_CONFIG: return "InvalidConfig";
  case PS_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
  case PS_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char *ps_last_error(void) { return last_error.c_str(); }

int ps_ratio_compare(ps_ratio a, ps_ratio b) {
  const auto lhs = static_cast<parity::u128>(a.num) * b.den;
  const auto rhs = static_cast<parity::u128>(b.num) * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

double ps_ratio_to_double(ps_ratio r) {
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

// ---- job sets

ps_status ps_jobset_create(const int64_t *values, size_t count, ps_jobset **out) {
  PS_REQUIRE(out);
  if (count > 0)
    PS_REQUIRE(values);
  return guarded([&] {
    auto jobs = parity::JobSet::from_values({values, count});
    *out = new ps_jobset{std::move(jobs)};
    return PS_OK;
  });
}

void ps_jobset_destroy(ps_jobset *jobs) { delete jobs; }

size_t ps_jobset_size(const ps_jobset *jobs) {
  return jobs ? jobs->value.size() : 0;
}

uint64_t ps_jobset_total_sum(const ps_jobset *jobs) {
  return jobs ? jobs->value.total_sum() : 0;
}

ps_status ps_jobset_times(const ps_jobset *jobs, uint64_t *times,
                          size_t capacity, size_t *count) {
  PS_REQUIRE(jobs);
  return copy_out(jobs->value.times(), times, capacity, count);
}

// ---- schedule

ps_status ps_lpt_schedule(const ps_jobset *jobs, ps_schedule **out) {
  PS_REQUIRE(jobs);
  PS_REQUIRE(out);
  return guarded([&] {
    *out = new ps_schedule{parity::lpt_schedule(jobs->value)};
    return PS_OK;
  });
}

void ps_schedule_destroy(ps_schedule *schedule) { delete schedule; }

ps_status ps_schedule_get_info(const ps_schedule *schedule,
                               ps_schedule_info *info) {
  PS_REQUIRE(schedule);
  PS_REQUIRE(info);
  const auto &s = schedule->value;
  *info = {s.job_count(), s.load1,          s.load2,
           s.makespan,    s.last_job_index, s.critical_job_count,
           s.m_value};
  return PS_OK;
}

ps_status ps_schedule_assignment(const ps_schedule *schedule, uint8_t *machines,
                                 size_t capacity, size_t *count) {
  PS_REQUIRE(schedule);
  std::vector<uint8_t> ids;
  ids.reserve(schedule->value.assignment.size());
  for (auto m : schedule->value.assignment)
    ids.push_back(static_cast<uint8_t>(m));
  return copy_out(ids, machines, capacity, count);
}

// ---- partition

ps_status ps_schedule_to_partition(const ps_schedule *schedule,
                                   const ps_jobset *jobs, ps_partition **out) {
  PS_REQUIRE(schedule);
  PS_REQUIRE(jobs);
  PS_REQUIRE(out);
  return guarded([&] {
    *out = new ps_partition{
        parity::schedule_to_partition(schedule->value, jobs->value)};
    return PS_OK;
  });
}

void ps_partition_destroy(ps_partition *partition) { delete partition; }

ps_status ps_partition_get_info(const ps_partition *partition,
                                ps_partition_info *info) {
  PS_REQUIRE(partition);
  PS_REQUIRE(info);
  const auto &p = partition->value;
  *info = {p.sum1, p.sum2, p.difference, p.side1.size(), p.side2.size()};
  return PS_OK;
}

ps_status ps_partition_side(const ps_partition *partition, int side,
                            size_t *indices, size_t capacity, size_t *count) {
  PS_REQUIRE(partition);
  if (side != 1 && side != 2)
    return fail(PS_ERR_MISMATCHED_INSTANCE, "side must be 1 or 2");
  const auto &p = partition->value;
  return copy_out(side == 1 ? p.side1 : p.side2, indices, capacity, count);
}

// ---- exact

ps_status ps_optimal_bruteforce(const ps_jobset *jobs, ps_optimum **out) {
  PS_REQUIRE(jobs);
  PS_REQUIRE(out);
  return guarded([&] {
    *out = new ps_optimum{parity::optimal_bruteforce(jobs->value)};
    return PS_OK;
  });
}

ps_status ps_optimal_dp(const ps_jobset *jobs, uint64_t table_cap,
                        ps_optimum **out) {
  PS_REQUIRE(jobs);
  PS_REQUIRE(out);
  return guarded([&] {
    *out = new ps_optimum{
        parity::optimal_dp(jobs->value, cap_or_default(table_cap))};
    return PS_OK;
  });
}

void ps_optimum_destroy(ps_optimum *optimum) { delete optimum; }

uint64_t ps_optimum_makespan(const ps_optimum *optimum) {
  return optimum ? optimum->value.optimal_makespan : 0;
}

uint64_t ps_optimum_min_difference(const ps_optimum *optimum) {
  return optimum ? optimum->value.min_difference : 0;
}

ps_status ps_optimum_witness(const ps_optimum *optimum, ps_partition **out) {
  PS_REQUIRE(optimum);
  PS_REQUIRE(out);
  return guarded([&] {
    *out = new ps_partition{optimum->value.witness};
    return PS_OK;
  });
}

ps_status ps_equivalence_check(const ps_jobset *jobs, uint64_t table_cap,
                               int *holds) {
  PS_REQUIRE(jobs);
  PS_REQUIRE(holds);
  return guarded([&] {
    *holds = parity::equivalence_check(jobs->value, cap_or_default(table_cap));
    return PS_OK;
  });
}

// ---- bounds

ps_status ps_dominance_compute(const ps_jobset *jobs, ps_dominance **out) {
  PS_REQUIRE(jobs);
  PS_REQUIRE(out);
  return guarded([&] {
    *out = new ps_dominance{parity::dominant_indices(jobs->value)};
    return PS_OK;
  });
}

void ps_dominance_destroy(ps_dominance *dominance) { delete dominance; }

size_t ps_dominance_plj(const ps_dominance *dominance) {
  return dominance ? dominance->value.plj : 0;
}

ps_status ps_dominance_indices(const ps_dominance *dominance, size_t *indices,
                               size_t capacity, size_t *count) {
  PS_REQUIRE(dominance);
  return copy_out(dominance->value.dominant_indices, indices, capacity, count);
}

ps_ratio ps_graham_bound(void) { return to_c(parity::graham_bound()); }

ps_status ps_coffman_sethi_bound(uint64_t k, ps_ratio *out) {
  PS_REQUIRE(out);
  return guarded([&] {
    *out = to_c(parity::coffman_sethi_bound(k));
    return PS_OK;
  });
}

ps_status ps_theorem3_bound(size_t last_job_index, ps_ratio *raw,
                            ps_ratio *capped) {
  return guarded([&] {
    const auto b = parity::theorem3_bound(last_job_index);
    if (raw)
      *raw = to_c(b.raw);
    if (capped)
      *capped = to_c(b.capped);
    return PS_OK;
  });
}

ps_status ps_theorem4_bound(size_t plj, ps_ratio *raw, ps_ratio *capped) {
  return guarded([&] {
    const auto b = parity::theorem4_bound(plj);
    if (raw)
      *raw = to_c(b.raw);
    if (capped)
      *capped = to_c(b.capped);
    return PS_OK;
  });
}

ps_status ps_asymptotic_estimate(uint64_t n_plj, ps_ratio delta, ps_ratio *out) {
  PS_REQUIRE(out);
  if (delta.den == 0)
    return fail(PS_ERR_INVALID_DELTA, "delta has a zero denominator");
  return guarded([&] {
    *out = to_c(parity::asymptotic_estimate(n_plj, parity::Ratio(delta.num, delta.den)));
    return PS_OK;
  });
}

ps_status ps_full_report(const ps_jobset *jobs, int with_oracle,
                         uint64_t table_cap, ps_bound_report *out) {
  PS_REQUIRE(jobs);
  PS_REQUIRE(out);
  return guarded([&] {
    const auto r = parity::full_report(jobs->value, with_oracle != 0,
                                       cap_or_default(table_cap));
    ps_bound_report c{};
    c.makespan = r.makespan;
    c.has_oracle = r.optimal_makespan.has_value();
    c.optimal_makespan = r.optimal_makespan.value_or(0);
    c.ratio_actual = r.ratio_actual ? to_c(*r.ratio_actual) : ps_ratio{0, 1};
    c.graham = to_c(r.graham);
    c.coffman_sethi = to_c(r.coffman_sethi);
    c.coffman_sethi_capped = to_c(r.coffman_sethi_capped);
    c.theorem3_raw = to_c(r.theorem3_raw);
    c.theorem3_capped = to_c(r.theorem3_capped);
    c.theorem4_raw = to_c(r.theorem4_raw);
    c.theorem4_capped = to_c(r.theorem4_capped);
    c.last_job_index = r.inputs.last_job_index;
    c.m_value = r.inputs.m_value;
    c.critical_job_count = r.inputs.critical_job_count;
    c.plj = r.inputs.plj;
    c.p_ceil = r.inputs.p_ceil;
    c.capped_bounds_hold = r.capped_bounds_hold;
    c.raw3_violated = r.raw3_violated;
    c.raw4_violated = r.raw4_violated;
    c.lemma1_holds = r.lemma1_holds;
    *out = c;
    return PS_OK;
  });
}

// ---- simulation

const char *ps_generator_id(void) { return parity::sim::kGeneratorId; }

void ps_experiment_config_default(ps_experiment_config *config) {
  if (config == nullptr)
    return;
  const parity::sim::ExperimentConfig d;
  *config = {d.job_count, d.trials, d.time_min, d.time_max, d.seed, d.threads};
}

ps_status ps_generate_instance(const ps_experiment_config *config,
                               uint64_t trial_index, ps_jobset **out) {
  PS_REQUIRE(config);
  PS_REQUIRE(out);
  return guarded([&] {
    *out = new ps_jobset{parity::sim::generate_instance(from_c(*config), trial_index)};
    return PS_OK;
  });
}

ps_status ps_run_trial(const ps_jobset *jobs, ps_trial_record *out) {
  PS_REQUIRE(jobs);
  PS_REQUIRE(out);
  return guarded([&] {
    const auto t = parity::sim::run_trial(jobs->value);
    *out = {to_c(t.ratio),    to_c(t.bm),          to_c(t.bp),
            to_c(t.bl),       t.raw3_violated,     t.raw4_violated,
            t.capped_bounds_hold, t.lemma1_holds};
    return PS_OK;
  });
}

ps_status ps_run_experiment(const ps_experiment_config *config,
                            ps_experiment_summary *out) {
  PS_REQUIRE(config);
  PS_REQUIRE(out);
  return guarded([&] {
    const auto s = parity::sim::run_experiment(from_c(*config));
    *out = {s.job_count, s.trials, s.seed, s.ac, s.mc, to_c(s.mc_exact),
            s.bm,        s.bp,     s.bl,   s.raw_violation_count,
            s.capped_violation_count};
    return PS_OK;
  });
}

const char *ps_csv_header(void) {
  static const std::string header = parity::sim::csv_header();
  return header.c_str();
}

ps_status ps_summary_render(const ps_experiment_summary *summary,
                            ps_summary_format format, char *buffer,
                            size_t capacity, size_t *needed) {
  PS_REQUIRE(summary);
  return guarded([&] {
    parity::sim::ExperimentSummary s;
    s.job_count = summary->job_count;
    s.trials = summary->trials;
    s.seed = summary->seed;
    s.ac = summary->ac;
    s.mc = summary->mc;
    s.mc_exact = parity::Ratio(summary->mc_exact.num, summary->mc_exact.den);
    s.bm = summary->bm;
    s.bp = summary->bp;
    s.bl = summary->bl;
    s.raw_violation_count = summary->raw_violation_count;
    s.capped_violation_count = summary->capped_violation_count;
    const std::string text = format == PS_FORMAT_STRUCTURED
                                 ? parity::sim::to_structured(s)
                                 : parity::sim::to_csv_row(s);
    if (needed != nullptr)
      *needed = text.size();
    if (buffer == nullptr || capacity <= text.size())
      return fail(PS_ERR_BUFFER_TOO_SMALL,
                  "render needs " + std::to_string(text.size() + 1) + " bytes");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return PS_OK;
  });
}

} // extern "C"
