#include "app.hpp"

#include <cstdio>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jobs_input.hpp"
#include "parity_sched/parity_sched.h"

namespace parity::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBoundFailed = 3;

class LibraryError : public std::runtime_error {
public:
  explicit LibraryError(ps_status status)
      : std::runtime_error(std::string(ps_status_name(status)) + ": " +
                           ps_last_error()),
        status(status) {}
  ps_status status;
};

void check(ps_status status) {
  if (status != PS_OK)
    throw LibraryError(status);
}

template <auto Destroy> struct Deleter {
  template <class T> void operator()(T *p) const { Destroy(p); }
};
using JobSetPtr = std::unique_ptr<ps_jobset, Deleter<ps_jobset_destroy>>;
using SchedulePtr = std::unique_ptr<ps_schedule, Deleter<ps_schedule_destroy>>;
using PartitionPtr = std::unique_ptr<ps_partition, Deleter<ps_partition_destroy>>;
using OptimumPtr = std::unique_ptr<ps_optimum, Deleter<ps_optimum_destroy>>;
using DominancePtr = std::unique_ptr<ps_dominance, Deleter<ps_dominance_destroy>>;

template <class T, class Getter> std::vector<T> fetch(Getter &&get) {
  std::size_t count = 0;
  check(get(static_cast<T *>(nullptr), 0, &count));
  std::vector<T> items(count);
  if (count > 0)
    check(get(items.data(), items.size(), &count));
  return items;
}

JobSetPtr make_jobs(const std::vector<std::int64_t> &values) {
  ps_jobset *raw = nullptr;
  check(ps_jobset_create(values.data(), values.size(), &raw));
  return JobSetPtr(raw);
}

std::vector<std::uint64_t> times_of(const ps_jobset *jobs) {
  return fetch<std::uint64_t>([&](std::uint64_t *buf, std::size_t cap, std::size_t *n) {
    return ps_jobset_times(jobs, buf, cap, n);
  });
}

std::vector<std::size_t> side_of(const ps_partition *p, int side) {
  return fetch<std::size_t>([&](std::size_t *buf, std::size_t cap, std::size_t *n) {
    return ps_partition_side(p, side, buf, cap, n);
  });
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", v);
  return buf;
}

std::string exact(ps_ratio r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string ratio_text(ps_ratio r) {
  return exact(r) + " (" + decimal(ps_ratio_to_double(r)) + ")";
}

ordered_json ratio_json(ps_ratio r) {
  return {{"exact", exact(r)}, {"decimal", decimal(ps_ratio_to_double(r))}};
}

template <class Seq> std::string list_text(const Seq &items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i)
    s += (i ? "," : "") + std::to_string(items[i]);
  return s + "]";
}

std::vector<std::uint64_t> pick(const std::vector<std::uint64_t> &times,
                                const std::vector<std::size_t> &indices) {
  std::vector<std::uint64_t> out;
  for (auto i : indices)
    out.push_back(times[i]);
  return out;
}

class Style {
public:
  explicit Style(bool color) : color_(color) {}
  std::string label(const std::string &s) const {
    return color_ ? "\x1b[1m" + s + "\x1b[0m" : s;
  }
  std::string bad(const std::string &s) const {
    return color_ ? "\x1b[31m" + s + "\x1b[0m" : s;
  }

private:
  bool color_;
};

struct PartitionView {
  std::vector<std::size_t> side1, side2;
  ps_partition_info info{};
};

PartitionView view_of(const ps_partition *p) {
  PartitionView v;
  check(ps_partition_get_info(p, &v.info));
  v.side1 = side_of(p, 1);
  v.side2 = side_of(p, 2);
  return v;
}

ordered_json partition_json(const PartitionView &v,
                            const std::vector<std::uint64_t> &times) {
  return {{"side1", v.side1},
          {"side2", v.side2},
          {"side1_times", pick(times, v.side1)},
          {"side2_times", pick(times, v.side2)},
          {"sum1", v.info.sum1},
          {"sum2", v.info.sum2},
          {"difference", v.info.difference}};
}

std::string partition_text(const PartitionView &v,
                           const std::vector<std::uint64_t> &times) {
  return "side1=" + list_text(pick(times, v.side1)) +
         " side2=" + list_text(pick(times, v.side2)) + " sums=(" +
         std::to_string(v.info.sum1) + "," + std::to_string(v.info.sum2) +
         ") difference=" + std::to_string(v.info.difference);
}

// ---- commands

struct JobsOptions {
  std::vector<std::string> values;
  std::optional<std::string> file;
  std::string format = "text";
};

void add_jobs_options(CLI::App *cmd, JobsOptions &opts) {
  cmd->add_option("values", opts.values, "Processing times (integers)");
  cmd->add_option("-f,--file", opts.file,
                  "Read times from a file ('-' for stdin)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

int cmd_schedule(const JobsOptions &opts, Streams &io) {
  const auto jobs = make_jobs(read_jobs(opts.values, opts.file, io.in));
  const auto times = times_of(jobs.get());

  ps_schedule *raw = nullptr;
  check(ps_lpt_schedule(jobs.get(), &raw));
  const SchedulePtr schedule(raw);
  ps_schedule_info info{};
  check(ps_schedule_get_info(schedule.get(), &info));
  const auto machines = fetch<std::uint8_t>([&](std::uint8_t *b, std::size_t c, std::size_t *n) {
    return ps_schedule_assignment(schedule.get(), b, c, n);
  });

  ps_partition *praw = nullptr;
  check(ps_schedule_to_partition(schedule.get(), jobs.get(), &praw));
  const PartitionPtr partition(praw);
  const auto view = view_of(partition.get());

  const auto on1 = pick(times, view.side1);
  const auto on2 = pick(times, view.side2);
  if (opts.format == "structured") {
    ordered_json j;
    j["jobs"] = times;
    j["assignment"] = machines;
    j["machine1"] = on1;
    j["machine2"] = on2;
    j["load1"] = info.load1;
    j["load2"] = info.load2;
    j["makespan"] = info.makespan;
    j["last_job_index"] = info.last_job_index;
    j["critical_job_count"] = info.critical_job_count;
    j["m_value"] = info.m_value;
    j["partition"] = partition_json(view, times);
    io.out << j.dump() << "\n";
    return 0;
  }
  const Style st(io.color);
  io.out << st.label("machine1") << "=" << list_text(on1) << " load=" << info.load1 << "\n"
         << st.label("machine2") << "=" << list_text(on2) << " load=" << info.load2 << "\n"
         << st.label("makespan") << "=" << info.makespan
         << " L=" << info.last_job_index << " M=" << info.m_value
         << " k=" << info.critical_job_count << "\n"
         << "difference=" << view.info.difference << "\n";
  return 0;
}

int cmd_partition(const JobsOptions &opts, bool exact_flag, std::uint64_t cap,
                  Streams &io) {
  const auto jobs = make_jobs(read_jobs(opts.values, opts.file, io.in));
  const auto times = times_of(jobs.get());

  ps_schedule *sraw = nullptr;
  check(ps_lpt_schedule(jobs.get(), &sraw));
  const SchedulePtr schedule(sraw);
  ps_partition *praw = nullptr;
  check(ps_schedule_to_partition(schedule.get(), jobs.get(), &praw));
  const PartitionPtr lpt(praw);
  const auto lpt_view = view_of(lpt.get());

  std::optional<PartitionView> best_view;
  std::uint64_t c_o = 0, d_min = 0;
  int identity = 0;
  if (exact_flag) {
    ps_optimum *oraw = nullptr;
    const ps_status st = ps_optimal_dp(jobs.get(), cap, &oraw);
    if (st == PS_ERR_SUM_CAP_EXCEEDED)
      throw std::runtime_error(std::string(ps_last_error()) +
                               "; raise --table-cap or drop --exact");
    check(st);
    const OptimumPtr optimum(oraw);
    ps_partition *wraw = nullptr;
    check(ps_optimum_witness(optimum.get(), &wraw));
    const PartitionPtr witness(wraw);
    best_view = view_of(witness.get());
    c_o = ps_optimum_makespan(optimum.get());
    d_min = ps_optimum_min_difference(optimum.get());
    identity = 2 * c_o == ps_jobset_total_sum(jobs.get()) + d_min;
  }

  const std::uint64_t total = ps_jobset_total_sum(jobs.get());
  if (opts.format == "structured") {
    ordered_json j;
    j["jobs"] = times;
    j["total_sum"] = total;
    j["lpt"] = partition_json(lpt_view, times);
    if (best_view) {
      j["optimal"] = partition_json(*best_view, times);
      j["optimal_makespan"] = c_o;
      j["min_difference"] = d_min;
      j["identity_holds"] = identity != 0;
    }
    io.out << j.dump() << "\n";
    return identity || !exact_flag ? 0 : kExitBoundFailed;
  }
  const Style st(io.color);
  io.out << st.label("lpt") << ": " << partition_text(lpt_view, times) << "\n";
  if (best_view) {
    io.out << st.label("optimal") << ": " << partition_text(*best_view, times)
           << " makespan=" << c_o << "\n"
           << "identity: 2*" << c_o << " = " << total << " + " << d_min << " "
           << (identity ? "holds" : st.bad("FAILS")) << "\n";
  }
  return identity || !exact_flag ? 0 : kExitBoundFailed;
}

int cmd_plj(const JobsOptions &opts, Streams &io) {
  const auto jobs = make_jobs(read_jobs(opts.values, opts.file, io.in));
  ps_dominance *draw = nullptr;
  check(ps_dominance_compute(jobs.get(), &draw));
  const DominancePtr dom(draw);
  const auto indices = fetch<std::size_t>([&](std::size_t *b, std::size_t c, std::size_t *n) {
    return ps_dominance_indices(dom.get(), b, c, n);
  });
  const std::size_t plj = ps_dominance_plj(dom.get());
  if (opts.format == "structured") {
    ordered_json j;
    j["jobs"] = times_of(jobs.get());
    j["dominant_indices"] = indices;
    j["plj"] = plj;
    io.out << j.dump() << "\n";
    return 0;
  }
  io.out << "dominant=" << list_text(indices) << "\n"
         << Style(io.color).label("plj") << "=" << plj << "\n";
  return 0;
}

int cmd_bounds(const JobsOptions &opts, bool with_oracle, std::uint64_t cap,
               Streams &io) {
  const auto jobs = make_jobs(read_jobs(opts.values, opts.file, io.in));
  ps_bound_report r{};
  check(ps_full_report(jobs.get(), with_oracle, cap, &r));
  ps_dominance *draw = nullptr;
  check(ps_dominance_compute(jobs.get(), &draw));
  const DominancePtr dom(draw);
  const auto dominant = fetch<std::size_t>([&](std::size_t *b, std::size_t c, std::size_t *n) {
    return ps_dominance_indices(dom.get(), b, c, n);
  });
  const bool ok = r.lemma1_holds && (!r.has_oracle || r.capped_bounds_hold);

  if (opts.format == "structured") {
    ordered_json j;
    j["jobs"] = times_of(jobs.get());
    j["makespan"] = r.makespan;
    if (r.has_oracle) {
      j["optimal_makespan"] = r.optimal_makespan;
      j["ratio_actual"] = ratio_json(r.ratio_actual);
    }
    j["graham"] = ratio_json(r.graham);
    j["coffman_sethi"] = ratio_json(r.coffman_sethi);
    j["coffman_sethi_capped"] = ratio_json(r.coffman_sethi_capped);
    j["theorem3_raw"] = ratio_json(r.theorem3_raw);
    j["theorem3_capped"] = ratio_json(r.theorem3_capped);
    j["theorem4_raw"] = ratio_json(r.theorem4_raw);
    j["theorem4_capped"] = ratio_json(r.theorem4_capped);
    j["inputs"] = {{"last_job_index", r.last_job_index},
                   {"m_value", r.m_value},
                   {"critical_job_count", r.critical_job_count},
                   {"plj", r.plj},
                   {"p_ceil", r.p_ceil}};
    j["dominant_indices"] = dominant;
    if (r.has_oracle) {
      j["capped_bounds_hold"] = r.capped_bounds_hold != 0;
      j["raw3_violated"] = r.raw3_violated != 0;
      j["raw4_violated"] = r.raw4_violated != 0;
    }
    j["lemma1_holds"] = r.lemma1_holds != 0;
    io.out << j.dump() << "\n";
    return ok ? 0 : kExitBoundFailed;
  }

  const Style st(io.color);
  auto yes_no = [&](int v) { return v ? std::string("yes") : st.bad("no"); };
  io.out << "L=" << r.last_job_index << " M=" << r.m_value
         << " k=" << r.critical_job_count << " plj=" << r.plj
         << " P=" << r.p_ceil << "\n"
         << "dominant=" << list_text(dominant) << "\n"
         << st.label("graham") << "=" << ratio_text(r.graham) << "\n"
         << st.label("cs") << "=" << ratio_text(r.coffman_sethi)
         << " cs_capped=" << ratio_text(r.coffman_sethi_capped) << "\n"
         << st.label("thm3_raw") << "=" << ratio_text(r.theorem3_raw)
         << " thm3_capped=" << ratio_text(r.theorem3_capped) << "\n"
         << st.label("thm4_raw") << "=" << ratio_text(r.theorem4_raw)
         << " thm4_capped=" << ratio_text(r.theorem4_capped) << "\n";
  if (r.has_oracle) {
    io.out << st.label("ratio") << "=" << ratio_text(r.ratio_actual)
           << " C_G=" << r.makespan << " C_O=" << r.optimal_makespan << "\n"
           << "capped_bounds_hold=" << yes_no(r.capped_bounds_hold)
           << " raw3_violated=" << (r.raw3_violated ? "yes" : "no")
           << " raw4_violated=" << (r.raw4_violated ? "yes" : "no") << "\n";
  } else {
    io.out << "makespan=" << r.makespan << "\n";
  }
  io.out << "lemma1_holds=" << yes_no(r.lemma1_holds) << "\n";
  return ok ? 0 : kExitBoundFailed;
}

struct SimulateOptions {
  std::vector<std::size_t> jobs{15};
  std::size_t trials = 100;
  std::uint64_t min = 1;
  std::uint64_t max = 32000;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string format = "table";
};

std::string render(const ps_experiment_summary &s, ps_summary_format format) {
  std::size_t needed = 0;
  ps_summary_render(&s, format, nullptr, 0, &needed);
  std::string text(needed + 1, '\0');
  check(ps_summary_render(&s, format, text.data(), text.size(), &needed));
  text.resize(needed);
  return text;
}

int cmd_simulate(const SimulateOptions &opts, Streams &io) {
  std::vector<ps_experiment_summary> rows;
  for (auto n : opts.jobs) {
    ps_experiment_config cfg{};
    ps_experiment_config_default(&cfg);
    cfg.job_count = n;
    cfg.trials = opts.trials;
    cfg.time_min = opts.min;
    cfg.time_max = opts.max;
    cfg.seed = opts.seed;
    cfg.threads = opts.threads;
    ps_experiment_summary s{};
    check(ps_run_experiment(&cfg, &s));
    rows.push_back(s);
  }

  bool ok = true;
  for (const auto &s : rows)
    ok = ok && s.capped_violation_count == 0;

  if (opts.format == "csv") {
    io.out << ps_csv_header() << "\n";
    for (const auto &s : rows)
      io.out << render(s, PS_FORMAT_CSV) << "\n";
  } else if (opts.format == "structured") {
    for (const auto &s : rows)
      io.out << render(s, PS_FORMAT_STRUCTURED) << "\n";
  } else {
    const Style st(io.color);
    io.out << "# generator=" << ps_generator_id() << " seed=" << opts.seed
           << " range=[" << opts.min << "," << opts.max << "]\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %-7s %-9s %-9s %-9s %-9s %-9s %s",
                  "Jobs", "Trials", "AC", "MC", "BM", "BP", "BL", "RawViol");
    io.out << st.label(line) << "\n";
    for (const auto &s : rows) {
      std::snprintf(line, sizeof line, "%-6zu %-7zu %-9s %-9s %-9s %-9s %-9s %zu",
                    s.job_count, s.trials, decimal(s.ac).c_str(),
                    decimal(s.mc).c_str(), decimal(s.bm).c_str(),
                    decimal(s.bp).c_str(), decimal(s.bl).c_str(),
                    s.raw_violation_count);
      io.out << line << "\n";
    }
  }
  if (!ok)
    io.err << "error: a capped bound or L >= plj check failed\n";
  return ok ? 0 : kExitBoundFailed;
}

} // namespace

int run(int argc, const char *const *argv, Streams io) {
  CLI::App app{"Two-machine LPT scheduling, exact partitions and bound checks",
               "parity-sched"};
  app.set_version_flag("--version", std::string(ps_version()));
  app.require_subcommand(1);

  JobsOptions schedule_opts, partition_opts, plj_opts, bounds_opts;
  bool exact_flag = false, oracle_flag = false;
  std::uint64_t table_cap = PS_DEFAULT_TABLE_CAP;

  auto *schedule = app.add_subcommand("schedule", "Graham (LPT) schedule");
  add_jobs_options(schedule, schedule_opts);

  auto *partition = app.add_subcommand("partition", "Two-way partition view");
  add_jobs_options(partition, partition_opts);
  partition->add_flag("--exact", exact_flag, "Also compute the optimal partition");
  partition->add_option("--table-cap", table_cap, "Subset-sum table cap (cells)");

  auto *plj = app.add_subcommand("plj", "Dominant jobs and possible last job");
  add_jobs_options(plj, plj_opts);

  auto *bounds = app.add_subcommand("bounds", "Approximation-ratio bounds");
  add_jobs_options(bounds, bounds_opts);
  bounds->add_flag("--oracle", oracle_flag, "Compute C_O and check every bound");
  bounds->add_option("--table-cap", table_cap, "Subset-sum table cap (cells)");

  SimulateOptions sim_opts;
  sim_opts.seed = [] {
    ps_experiment_config d{};
    ps_experiment_config_default(&d);
    return d.seed;
  }();
  auto *simulate = app.add_subcommand("simulate", "Monte Carlo experiment");
  simulate->add_option("--jobs", sim_opts.jobs, "Job counts, e.g. 15,20,25")
      ->delimiter(',');
  simulate->add_option("--trials", sim_opts.trials, "Trials per job count");
  simulate->add_option("--min", sim_opts.min, "Smallest processing time");
  simulate->add_option("--max", sim_opts.max, "Largest processing time");
  simulate->add_option("--seed", sim_opts.seed, "Experiment seed");
  simulate->add_option("--threads", sim_opts.threads,
                       "Worker threads (0 = all cores)");
  simulate->add_option("--format", sim_opts.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    io.out << out.str();
    io.err << err.str();
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*schedule)
      return cmd_schedule(schedule_opts, io);
    if (*partition)
      return cmd_partition(partition_opts, exact_flag, table_cap, io);
    if (*plj)
      return cmd_plj(plj_opts, io);
    if (*bounds)
      return cmd_bounds(bounds_opts, oracle_flag, table_cap, io);
    if (*simulate)
      return cmd_simulate(sim_opts, io);
  } catch (const std::exception &e) {
    io.err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

} // namespace parity::cli
