#ifndef PARITY_SCHED_H
#define PARITY_SCHED_H

/*
 * C interface to the parity_sched library: LPT scheduling on two identical
 * machines, exact two-way partition optima, approximation-ratio bounds and
 * the seeded Monte Carlo harness.
 *
 * Conventions:
 *  - Every fallible call returns ps_status. On failure the out-parameters
 *    are left untouched and ps_last_error() describes the problem (the
 *    message is thread-local and valid until the next failing call on the
 *    same thread).
 *  - Objects behind opaque handles are immutable once created and may be
 *    shared across threads. Each *_create / producing call pairs with the
 *    matching *_destroy; destroying NULL is a no-op.
 *  - Job indices are zero-based in arrays and one-based where the value is a
 *    job number (last job L, possible last job, dominant indices).
 *  - Array getters copy up to `capacity` elements and always report the full
 *    element count through `count`. Pass capacity 0 to query the size.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARITY_SCHED_BUILDING)
#    define PS_API __declspec(dllexport)
#  else
#    define PS_API __declspec(dllimport)
#  endif
#else
#  define PS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
  PS_OK = 0,
  PS_ERR_NULL_ARGUMENT = 1,
  PS_ERR_EMPTY_INPUT = 2,
  PS_ERR_NON_POSITIVE_TIME = 3,
  PS_ERR_OVERFLOW = 4,
  PS_ERR_MISMATCHED_INSTANCE = 5,
  PS_ERR_TOO_LARGE = 6,
  PS_ERR_SUM_CAP_EXCEEDED = 7,
  PS_ERR_INVALID_K = 8,
  PS_ERR_INVALID_L = 9,
  PS_ERR_INVALID_PLJ = 10,
  PS_ERR_INVALID_DELTA = 11,
  PS_ERR_INVALID_CONFIG = 12,
  PS_ERR_BUFFER_TOO_SMALL = 13,
  PS_ERR_INTERNAL = 99
} ps_status;

typedef struct ps_ratio {
  uint64_t num;
  uint64_t den;
} ps_ratio;

typedef struct ps_jobset ps_jobset;
typedef struct ps_schedule ps_schedule;
typedef struct ps_partition ps_partition;
typedef struct ps_optimum ps_optimum;
typedef struct ps_dominance ps_dominance;

/* ---- library ---------------------------------------------------------- */

PS_API const char *ps_version(void);
PS_API const char *ps_status_name(ps_status status);
PS_API const char *ps_last_error(void);

/* ---- ratios ----------------------------------------------------------- */

/* Returns -1, 0 or 1. Exact. */
PS_API int ps_ratio_compare(ps_ratio a, ps_ratio b);
PS_API double ps_ratio_to_double(ps_ratio r);

/* ---- job sets --------------------------------------------------------- */

/* Copies and sorts non-increasing. Errors: EMPTY_INPUT, NON_POSITIVE_TIME,
 * OVERFLOW (sum does not fit in 64 bits). */
PS_API ps_status ps_jobset_create(const int64_t *values, size_t count,
                                  ps_jobset **out);
PS_API void ps_jobset_destroy(ps_jobset *jobs);
PS_API size_t ps_jobset_size(const ps_jobset *jobs);
PS_API uint64_t ps_jobset_total_sum(const ps_jobset *jobs);
PS_API ps_status ps_jobset_times(const ps_jobset *jobs, uint64_t *times,
                                 size_t capacity, size_t *count);

/* ---- LPT schedule ----------------------------------------------------- */

typedef struct ps_schedule_info {
  size_t job_count;
  uint64_t load1;
  uint64_t load2;
  uint64_t makespan;
  size_t last_job_index;     /* L, one-based */
  size_t critical_job_count; /* k */
  size_t m_value;            /* ceil(L / 2) */
} ps_schedule_info;

PS_API ps_status ps_lpt_schedule(const ps_jobset *jobs, ps_schedule **out);
PS_API void ps_schedule_destroy(ps_schedule *schedule);
PS_API ps_status ps_schedule_get_info(const ps_schedule *schedule,
                                      ps_schedule_info *info);
/* machines[i] is 1 or 2 for job i (zero-based, sorted order). */
PS_API ps_status ps_schedule_assignment(const ps_schedule *schedule,
                                        uint8_t *machines, size_t capacity,
                                        size_t *count);

/* ---- partitions ------------------------------------------------------- */

typedef struct ps_partition_info {
  uint64_t sum1;
  uint64_t sum2;
  uint64_t difference;
  size_t side1_size;
  size_t side2_size;
} ps_partition_info;

/* Error: MISMATCHED_INSTANCE when the schedule has a different job count. */
PS_API ps_status ps_schedule_to_partition(const ps_schedule *schedule,
                                          const ps_jobset *jobs,
                                          ps_partition **out);
PS_API void ps_partition_destroy(ps_partition *partition);
PS_API ps_status ps_partition_get_info(const ps_partition *partition,
                                       ps_partition_info *info);
/* side is 1 or 2; indices are zero-based into the sorted job set. */
PS_API ps_status ps_partition_side(const ps_partition *partition, int side,
                                   size_t *indices, size_t capacity,
                                   size_t *count);

/* ---- exact optimum ---------------------------------------------------- */

/* Default subset-sum table cap (cells). */
#define PS_DEFAULT_TABLE_CAP 100000000ULL

/* Exhaustive; error TOO_LARGE above 24 jobs. */
PS_API ps_status ps_optimal_bruteforce(const ps_jobset *jobs, ps_optimum **out);
/* Subset-sum DP; error SUM_CAP_EXCEEDED when floor(S/2)+1 > table_cap.
 * table_cap 0 selects PS_DEFAULT_TABLE_CAP. */
PS_API ps_status ps_optimal_dp(const ps_jobset *jobs, uint64_t table_cap,
                               ps_optimum **out);
PS_API void ps_optimum_destroy(ps_optimum *optimum);
PS_API uint64_t ps_optimum_makespan(const ps_optimum *optimum);
PS_API uint64_t ps_optimum_min_difference(const ps_optimum *optimum);
/* New partition handle; release with ps_partition_destroy. */
PS_API ps_status ps_optimum_witness(const ps_optimum *optimum,
                                    ps_partition **out);

/* *holds = 1 iff the minimum-makespan and minimum-difference splits agree
 * and 2 * C_O == S + d_min. */
PS_API ps_status ps_equivalence_check(const ps_jobset *jobs, uint64_t table_cap,
                                      int *holds);

/* ---- dominance and bounds -------------------------------------------- */

PS_API ps_status ps_dominance_compute(const ps_jobset *jobs, ps_dominance **out);
PS_API void ps_dominance_destroy(ps_dominance *dominance);
PS_API size_t ps_dominance_plj(const ps_dominance *dominance);
PS_API ps_status ps_dominance_indices(const ps_dominance *dominance,
                                      size_t *indices, size_t capacity,
                                      size_t *count);

PS_API ps_ratio ps_graham_bound(void);
PS_API ps_status ps_coffman_sethi_bound(uint64_t k, ps_ratio *out);
/* raw and/or capped may be NULL. */
PS_API ps_status ps_theorem3_bound(size_t last_job_index, ps_ratio *raw,
                                   ps_ratio *capped);
PS_API ps_status ps_theorem4_bound(size_t plj, ps_ratio *raw, ps_ratio *capped);
PS_API ps_status ps_asymptotic_estimate(uint64_t n_plj, ps_ratio delta,
                                        ps_ratio *out);

typedef struct ps_bound_report {
  uint64_t makespan;          /* C_G */
  int has_oracle;
  uint64_t optimal_makespan;  /* C_O, valid when has_oracle */
  ps_ratio ratio_actual;      /* C_G : C_O, valid when has_oracle */
  ps_ratio graham;
  ps_ratio coffman_sethi;
  ps_ratio coffman_sethi_capped;
  ps_ratio theorem3_raw;
  ps_ratio theorem3_capped;
  ps_ratio theorem4_raw;
  ps_ratio theorem4_capped;
  size_t last_job_index;      /* L */
  size_t m_value;             /* M */
  size_t critical_job_count;  /* k */
  size_t plj;
  size_t p_ceil;              /* ceil(plj / 2) */
  int capped_bounds_hold;
  int raw3_violated;
  int raw4_violated;
  int lemma1_holds;
} ps_bound_report;

PS_API ps_status ps_full_report(const ps_jobset *jobs, int with_oracle,
                                uint64_t table_cap, ps_bound_report *out);

/* ---- simulation ------------------------------------------------------- */

typedef struct ps_experiment_config {
  size_t job_count;
  size_t trials;
  uint64_t time_min;
  uint64_t time_max;
  uint64_t seed;
  size_t threads; /* 0 = hardware concurrency */
} ps_experiment_config;

typedef struct ps_trial_record {
  ps_ratio ratio;
  ps_ratio bm;
  ps_ratio bp;
  ps_ratio bl;
  int raw3_violated;
  int raw4_violated;
  int capped_bounds_hold;
  int lemma1_holds;
} ps_trial_record;

typedef struct ps_experiment_summary {
  size_t job_count;
  size_t trials;
  uint64_t seed;
  double ac;
  double mc;
  ps_ratio mc_exact;
  double bm;
  double bp;
  double bl;
  size_t raw_violation_count;
  size_t capped_violation_count;
} ps_experiment_summary;

typedef enum ps_summary_format {
  PS_FORMAT_CSV = 0,
  PS_FORMAT_STRUCTURED = 1
} ps_summary_format;

PS_API const char *ps_generator_id(void);
PS_API void ps_experiment_config_default(ps_experiment_config *config);
PS_API ps_status ps_generate_instance(const ps_experiment_config *config,
                                      uint64_t trial_index, ps_jobset **out);
PS_API ps_status ps_run_trial(const ps_jobset *jobs, ps_trial_record *out);
PS_API ps_status ps_run_experiment(const ps_experiment_config *config,
                                   ps_experiment_summary *out);
/* Header line for PS_FORMAT_CSV (no trailing newline). */
PS_API const char *ps_csv_header(void);
/* Writes a NUL-terminated rendering. *needed receives the length excluding
 * the terminator; BUFFER_TOO_SMALL when capacity <= *needed. */
PS_API ps_status ps_summary_render(const ps_experiment_summary *summary,
                                   ps_summary_format format, char *buffer,
                                   size_t capacity, size_t *needed);

#ifdef __cplusplus
}
#endif

#endif /* PARITY_SCHED_H */
