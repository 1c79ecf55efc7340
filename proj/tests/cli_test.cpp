#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "jobs_input.hpp"
#include "json.hpp"

using parity::cli::ParseError;
using parity::cli::parse_jobs_text;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string &input = "",
               bool color = false) {
  args.insert(args.begin(), "parity-sched");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = parity::cli::run(static_cast<int>(argv.size()), argv.data(),
                                    {in, out, err, color});
  return {code, out.str(), err.str()};
}

bool contains(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(JobsText, SeparatorsAndComments) {
  EXPECT_EQ(parse_jobs_text("12, 5, 3, 2, 1"),
            (std::vector<std::int64_t>{12, 5, 3, 2, 1}));
  EXPECT_EQ(parse_jobs_text("# header\n9 7\n  # indented comment\n4,3,\t2\r\n"),
            (std::vector<std::int64_t>{9, 7, 4, 3, 2}));
  EXPECT_TRUE(parse_jobs_text("# only comments\n\n").empty());
  EXPECT_EQ(parse_jobs_text("+5 -3"), (std::vector<std::int64_t>{5, -3}));
}

TEST(JobsText, ErrorsNameTheToken) {
  try {
    parse_jobs_text("9 7 x4 3");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_TRUE(contains(e.what(), "'x4'"));
  }
  EXPECT_THROW(parse_jobs_text("1.5"), ParseError);
  EXPECT_THROW(parse_jobs_text("99999999999999999999"), ParseError);
  EXPECT_NO_THROW(parse_jobs_text("1099511627776")); // 2^40
  EXPECT_THROW(parse_jobs_text("1099511627777"), ParseError);
}

TEST(Cli, ScheduleWorkedExample) {
  const auto r = run_cli({"schedule", "9", "7", "4", "3", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "machine1=[9,3] load=12\n"));
  EXPECT_TRUE(contains(r.out, "machine2=[7,4,2] load=13\n"));
  EXPECT_TRUE(contains(r.out, "makespan=13 L=5 M=3 k=3"));
}

TEST(Cli, ScheduleSingleAndFile) {
  const auto one = run_cli({"schedule", "5"});
  EXPECT_TRUE(contains(one.out, "machine1=[5] load=5"));
  EXPECT_TRUE(contains(one.out, "makespan=5"));

  const auto path = std::filesystem::temp_directory_path() / "parity_cli_jobs.txt";
  std::ofstream(path) << "# worked example\n12, 5, 3, 2, 1\n";
  const auto file = run_cli({"schedule", "--file", path.string()});
  EXPECT_EQ(file.code, 0);
  EXPECT_TRUE(contains(file.out, "makespan=12"));
  std::filesystem::remove(path);

  const auto piped = run_cli({"schedule"}, "12 5\n3,2,1\n");
  EXPECT_TRUE(contains(piped.out, "makespan=12"));
  const auto dash = run_cli({"schedule", "-f", "-"}, "4 3 3 2");
  EXPECT_TRUE(contains(dash.out, "makespan=6"));
}

TEST(Cli, InputErrors) {
  const auto bad = run_cli({"schedule", "9", "x7"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.err, "'x7'"));

  const auto negative = run_cli({"schedule", "3", "-4"});
  EXPECT_EQ(negative.code, 1);
  EXPECT_TRUE(contains(negative.err, "NonPositiveTime"));

  const auto empty = run_cli({"schedule"}, "# nothing\n");
  EXPECT_EQ(empty.code, 1);
  EXPECT_TRUE(contains(empty.err, "no job values"));

  const auto missing = run_cli({"schedule", "--file", "/nonexistent/jobs"});
  EXPECT_EQ(missing.code, 1);

  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"schedule", "--format", "xml", "1"}).code, 2);
}

TEST(Cli, Partition) {
  const auto exact = run_cli({"partition", "--exact", "9", "7", "4", "3", "2"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_TRUE(contains(exact.out, "optimal: "));
  EXPECT_TRUE(contains(exact.out, "sums=(12,13) difference=1 makespan=13"));
  EXPECT_TRUE(contains(exact.out, "identity: 2*13 = 25 + 1 holds"));

  const auto pair = run_cli({"partition", "--exact", "1", "1"});
  EXPECT_TRUE(contains(pair.out, "sums=(1,1) difference=0 makespan=1"));

  const auto heuristic = run_cli({"partition", "7", "5", "3", "3", "1"});
  EXPECT_TRUE(contains(heuristic.out, "lpt: side1=[7,3] side2=[5,3,1] sums=(10,9) difference=1"));
  EXPECT_FALSE(contains(heuristic.out, "optimal"));

  const auto capped = run_cli({"partition", "--exact", "--table-cap", "10", "100", "99"});
  EXPECT_EQ(capped.code, 1);
  EXPECT_TRUE(contains(capped.err, "--table-cap"));
}

TEST(Cli, PljAndBounds) {
  const auto plj = run_cli({"plj", "12", "5", "3", "2", "1"});
  EXPECT_TRUE(contains(plj.out, "dominant=[1,3,4]\nplj=1\n"));

  const auto oracle = run_cli({"bounds", "--oracle", "9", "7", "4", "3", "2"});
  EXPECT_EQ(oracle.code, 0);
  EXPECT_TRUE(contains(oracle.out, "ratio=1/1 (1.00000)"));
  EXPECT_TRUE(contains(oracle.out, "thm3_capped=7/6"));
  EXPECT_TRUE(contains(oracle.out, "thm4_capped=7/6"));
  EXPECT_TRUE(contains(oracle.out, "cs=7/6"));

  const auto dominant = run_cli({"bounds", "12", "5", "3", "2", "1"});
  EXPECT_TRUE(contains(dominant.out, "plj=1"));
  EXPECT_TRUE(contains(dominant.out, "dominant=[1,3,4]"));

  const auto single = run_cli({"bounds", "5"});
  EXPECT_TRUE(contains(single.out, "L=1 "));
  EXPECT_TRUE(contains(single.out, "thm3_raw=91/48 (1.89583) thm3_capped=7/6"));
  EXPECT_TRUE(contains(single.out, "thm4_raw=91/48 (1.89583) thm4_capped=7/6"));
}

TEST(Cli, StructuredScheduleRevalidates) {
  const auto r = run_cli({"schedule", "--format", "structured", "7", "6", "3", "3", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto jobs = j["jobs"].get<std::vector<std::uint64_t>>();
  const auto assignment = j["assignment"].get<std::vector<int>>();
  std::uint64_t load1 = 0, load2 = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i)
    (assignment[i] == 1 ? load1 : load2) += jobs[i];
  EXPECT_EQ(j["load1"].get<std::uint64_t>(), load1);
  EXPECT_EQ(j["load2"].get<std::uint64_t>(), load2);
  EXPECT_EQ(j["makespan"].get<std::uint64_t>(), std::max(load1, load2));
  const auto last = j["last_job_index"].get<std::size_t>();
  EXPECT_GE(last, 1u);
  EXPECT_LE(last, jobs.size());
  EXPECT_EQ(last, 5u);
  EXPECT_EQ(j["m_value"].get<std::size_t>(), (last + 1) / 2);
  const auto k = j["critical_job_count"].get<std::size_t>();
  EXPECT_EQ(k, static_cast<std::size_t>(std::count(
                   assignment.begin(), assignment.end(), assignment[last - 1])));
  EXPECT_EQ(j["partition"]["difference"].get<std::uint64_t>(),
            std::max(load1, load2) - std::min(load1, load2));
}

TEST(Cli, StructuredBoundsCarryExactAndDecimal) {
  const auto r = run_cli({"bounds", "--oracle", "--format", "structured", "3", "3", "2", "2", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ratio_actual"]["exact"], "7/6");
  EXPECT_EQ(j["ratio_actual"]["decimal"], "1.16667");
  EXPECT_EQ(j["capped_bounds_hold"], true);
  EXPECT_EQ(j["inputs"]["last_job_index"], 5);
}

TEST(Cli, SimulateTrivialAndFormats) {
  const auto r = run_cli({"simulate", "--jobs", "2", "--trials", "1", "--min", "5",
                          "--max", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "jobs,trials,seed,ac,mc,bm,bp,bl,raw_violations\n"
                   "2,1,1,1.00000,1.00000,1.16667,1.16667,1.16667,0\n");

  const auto structured = run_cli({"simulate", "--jobs", "5,6", "--trials", "3",
                                   "--format", "structured"});
  std::istringstream lines(structured.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["trials"], 3);
    ++rows;
  }
  EXPECT_EQ(rows, 2);

  const auto table = run_cli({"simulate", "--jobs", "15", "--trials", "5"});
  EXPECT_TRUE(contains(table.out, "# generator="));
  EXPECT_TRUE(contains(table.out, "AC"));

  EXPECT_EQ(run_cli({"simulate", "--jobs", "1"}).code, 1);
  EXPECT_EQ(run_cli({"simulate", "--min", "9", "--max", "3"}).code, 1);
}

TEST(Cli, SimulateIsDeterministic) {
  const std::vector<std::string> args{"simulate", "--jobs", "15,20", "--trials", "20",
                                      "--seed", "7", "--format", "csv"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  EXPECT_EQ(run_cli(threaded).out, a.out);
  auto reseeded = args;
  reseeded[6] = "8";
  EXPECT_NE(run_cli(reseeded).out, a.out);
}

TEST(Cli, ColorOnlyWhenRequested) {
  const auto plain = run_cli({"schedule", "9", "7"}, "", false);
  EXPECT_FALSE(contains(plain.out, "\x1b["));
  const auto colored = run_cli({"schedule", "9", "7"}, "", true);
  EXPECT_TRUE(contains(colored.out, "\x1b[1m"));
}
