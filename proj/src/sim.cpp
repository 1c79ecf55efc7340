#include "parity_sched/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "json.hpp"

#include "parity_sched/lpt.hpp"

namespace parity::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased draw from [lo, hi]: reject the incomplete top block of 2^64.
Time uniform_in(std::mt19937_64 &engine, Time lo, Time hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0)
    return engine();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return lo + x % span;
}

// Neumaier compensated sum.
class CompensatedSum {
public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      carry_ += (sum_ - t) + v;
    else
      carry_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0;
  double carry_ = 0;
};

} // namespace

void ExperimentConfig::validate() const {
  if (job_count < 2)
    throw Error(ErrorCode::InvalidConfig, "job count must be at least 2");
  if (trials < 1)
    throw Error(ErrorCode::InvalidConfig, "trials must be at least 1");
  if (time_min < 1 || time_min > time_max)
    throw Error(ErrorCode::InvalidConfig,
                "time range must satisfy 1 <= min <= max");
  if (time_max > (Time{1} << 40))
    throw Error(ErrorCode::InvalidConfig, "time_max above 2^40");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index) {
  return splitmix64(seed ^ splitmix64(trial_index));
}

JobSet generate_instance(const ExperimentConfig &config,
                         std::uint64_t trial_index) {
  config.validate();
  std::mt19937_64 engine(trial_seed(config.seed, trial_index));
  std::vector<std::int64_t> values(config.job_count);
  for (auto &v : values)
    v = static_cast<std::int64_t>(
        uniform_in(engine, config.time_min, config.time_max));
  return JobSet::from_values(values);
}

TrialRecord run_trial(const JobSet &jobs) {
  const BoundReport report = full_report(jobs, true);
  TrialRecord t;
  t.ratio = *report.ratio_actual;
  t.bm = report.theorem3_capped;
  t.bp = report.theorem4_capped;
  t.bl = report.coffman_sethi_capped;
  t.raw3_violated = report.raw3_violated;
  t.raw4_violated = report.raw4_violated;
  t.capped_bounds_hold = report.capped_bounds_hold && t.ratio <= t.bl;
  t.lemma1_holds = report.lemma1_holds;
  return t;
}

ExperimentSummary run_experiment(const ExperimentConfig &config) {
  config.validate();
  std::vector<TrialRecord> records(config.trials);

  std::size_t workers = config.threads == 0 ? std::thread::hardware_concurrency()
                                            : config.threads;
  workers = std::max<std::size_t>(1, std::min(workers, config.trials));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) {
      try {
        records[i] = run_trial(generate_instance(config, i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work);
  }
  if (failure)
    std::rethrow_exception(failure);

  ExperimentSummary s;
  s.job_count = config.job_count;
  s.trials = config.trials;
  s.seed = config.seed;
  CompensatedSum ac, bm, bp, bl;
  Ratio mc(1, 1);
  for (const auto &r : records) {
    ac.add(r.ratio.to_double());
    bm.add(r.bm.to_double());
    bp.add(r.bp.to_double());
    bl.add(r.bl.to_double());
    mc = max(mc, r.ratio);
    s.raw_violation_count += r.raw3_violated + r.raw4_violated;
    s.capped_violation_count += !(r.capped_bounds_hold && r.lemma1_holds);
  }
  const double count = static_cast<double>(config.trials);
  s.ac = ac.value() / count;
  s.bm = bm.value() / count;
  s.bp = bp.value() / count;
  s.bl = bl.value() / count;
  s.mc_exact = mc;
  s.mc = mc.to_double();
  return s;
}

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", value);
  return buf;
}

std::string csv_header() {
  return "jobs,trials,seed,ac,mc,bm,bp,bl,raw_violations";
}

std::string to_csv_row(const ExperimentSummary &s) {
  return std::to_string(s.job_count) + "," + std::to_string(s.trials) + "," +
         std::to_string(s.seed) + "," + format_decimal(s.ac) + "," +
         format_decimal(s.mc) + "," + format_decimal(s.bm) + "," +
         format_decimal(s.bp) + "," + format_decimal(s.bl) + "," +
         std::to_string(s.raw_violation_count);
}

std::string to_structured(const ExperimentSummary &s) {
  nlohmann::ordered_json j;
  j["job_count"] = s.job_count;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["generator"] = kGeneratorId;
  j["ac"] = format_decimal(s.ac);
  j["mc"] = {{"exact", s.mc_exact.to_string()}, {"decimal", format_decimal(s.mc)}};
  j["bm"] = format_decimal(s.bm);
  j["bp"] = format_decimal(s.bp);
  j["bl"] = format_decimal(s.bl);
  j["raw_violation_count"] = s.raw_violation_count;
  j["capped_violation_count"] = s.capped_violation_count;
  return j.dump();
}

} // namespace parity::sim
