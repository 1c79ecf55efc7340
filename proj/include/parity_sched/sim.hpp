#pragma once

#include <string>

#include "parity_sched/bounds.hpp"

namespace parity::sim {

/// Identity of the instance generator. Any change to how instances are drawn
/// must bump this string so published numbers stay traceable.
inline constexpr const char *kGeneratorId = "mt19937_64+splitmix64-key+rejection/v1";
inline constexpr std::uint64_t kDefaultSeed = 1;

struct ExperimentConfig {
  std::size_t job_count = 15;
  std::size_t trials = 100;
  Time time_min = 1;
  Time time_max = 32000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t threads = 1; // 0 = hardware concurrency

  /// Throws InvalidConfig on job_count < 2, trials < 1, or a bad range.
  void validate() const;
};

struct TrialRecord {
  Ratio ratio; // C_G : C_O
  Ratio bm;    // capped last-job bound
  Ratio bp;    // capped possible-last-job bound
  Ratio bl;    // critical-machine job-count bound, capped at 7/6
  bool raw3_violated = false;
  bool raw4_violated = false;
  bool capped_bounds_hold = true;
  bool lemma1_holds = true;
};

struct ExperimentSummary {
  std::size_t job_count = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double ac = 0; // mean C_G / C_O
  double mc = 0; // max C_G / C_O
  Ratio mc_exact;
  double bm = 0;
  double bp = 0;
  double bl = 0;
  std::size_t raw_violation_count = 0;
  std::size_t capped_violation_count = 0;
};

/// Per-trial engine seed derived from (seed, trial_index) alone, so any
/// trial can be regenerated without replaying the others.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index);

/// job_count values uniform on [time_min, time_max], sorted.
JobSet generate_instance(const ExperimentConfig &config,
                         std::uint64_t trial_index);

TrialRecord run_trial(const JobSet &jobs);

/// Aggregates trials in trial-index order regardless of thread count.
ExperimentSummary run_experiment(const ExperimentConfig &config);

// Text forms of a summary.
std::string csv_header();
std::string to_csv_row(const ExperimentSummary &summary);
/// One JSON object per summary, fields named after ExperimentSummary.
std::string to_structured(const ExperimentSummary &summary);

/// printf("%#.6g"): six significant digits, trailing zeros kept.
std::string format_decimal(double value);

} // namespace parity::sim
