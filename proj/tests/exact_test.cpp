#include <gtest/gtest.h>

#include <random>

#include "parity_sched/exact.hpp"
#include "parity_sched/lpt.hpp"
#include "support/oracles.hpp"

using namespace parity;

namespace {

JobSet jobs_of(std::vector<std::int64_t> v) { return JobSet::from_values(v); }

std::vector<std::uint64_t> raw(const JobSet &jobs) {
  return {jobs.times().begin(), jobs.times().end()};
}

void expect_consistent(const JobSet &jobs, const OptimalResult &r) {
  EXPECT_EQ(2 * r.optimal_makespan, jobs.total_sum() + r.min_difference);
  EXPECT_EQ(r.witness.difference, r.min_difference);
  EXPECT_EQ(r.witness.larger_sum(), r.optimal_makespan);
  EXPECT_EQ(r.witness.sum1 + r.witness.sum2, jobs.total_sum());
  EXPECT_EQ(r.witness.side1.size() + r.witness.side2.size(), jobs.size());
}

} // namespace

TEST(BruteForce, Examples) {
  // Values below were produced by oracle::exhaustive and re-checked by hand
  // for the five-job cases ({9,3} | {7,4,2}; {12} | {5,3,2,1}).
  const auto a = jobs_of({9, 7, 4, 3, 2});
  const auto ra = optimal_bruteforce(a);
  EXPECT_EQ(ra.optimal_makespan, 13u);
  EXPECT_EQ(ra.min_difference, 1u);
  expect_consistent(a, ra);

  const auto b = optimal_bruteforce(jobs_of({1, 1}));
  EXPECT_EQ(b.optimal_makespan, 1u);
  EXPECT_EQ(b.min_difference, 0u);

  const auto c = jobs_of({12, 5, 3, 2, 1});
  const auto rc = optimal_bruteforce(c);
  EXPECT_EQ(rc.optimal_makespan, 12u);
  EXPECT_EQ(rc.min_difference, 1u);
  EXPECT_EQ(rc.witness.side1, (std::vector<std::size_t>{0}));
}

TEST(BruteForce, LexicographicTieBreak) {
  // {0,1} (4+3) and {0,2} (4+3) both balance {3,3,2,4}; the smaller list wins.
  const auto r = optimal_bruteforce(jobs_of({4, 3, 3, 2, 2}));
  EXPECT_EQ(r.min_difference, 0u);
  EXPECT_EQ(r.witness.side1, (std::vector<std::size_t>{0, 1}));
}

TEST(BruteForce, TooLarge) {
  std::vector<std::int64_t> many(25, 3);
  try {
    optimal_bruteforce(JobSet::from_values(many));
    FAIL() << "expected TooLarge";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_THROW(optimal_bruteforce(jobs_of({3, 2, 1}), 2), Error);
}

TEST(Dp, Examples) {
  const auto a = jobs_of({9, 7, 4, 3, 2});
  const auto ra = optimal_dp(a);
  EXPECT_EQ(ra.optimal_makespan, 13u);
  EXPECT_EQ(ra.min_difference, 1u);
  expect_consistent(a, ra);

  const auto b = jobs_of({4, 3, 3, 2});
  const auto rb = optimal_dp(b);
  EXPECT_EQ(rb.optimal_makespan, 6u);
  EXPECT_EQ(rb.min_difference, 0u);
  expect_consistent(b, rb);

  const auto c = jobs_of({5});
  const auto rc = optimal_dp(c);
  EXPECT_EQ(rc.optimal_makespan, 5u);
  EXPECT_EQ(rc.min_difference, 5u);
  expect_consistent(c, rc);
}

TEST(Dp, SumCapExceeded) {
  const auto jobs = jobs_of({1000, 999});
  try {
    optimal_dp(jobs, 500);
    FAIL() << "expected SumCapExceeded";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::SumCapExceeded);
  }
  EXPECT_NO_THROW(optimal_dp(jobs, 1000));
}

TEST(Dp, WordBoundaryShifts) {
  // Times straddling multiples of 64 exercise the split-word shift path.
  const auto jobs = jobs_of({129, 128, 127, 65, 64, 63, 1});
  const auto r = optimal_dp(jobs);
  const auto o = oracle::exhaustive(raw(jobs));
  EXPECT_EQ(r.optimal_makespan, o.makespan);
  EXPECT_EQ(r.min_difference, o.difference);
  expect_consistent(jobs, r);
}

TEST(OracleProperty, BruteForceDpAndReferenceAgree) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 600; ++round) {
    const auto jobs = JobSet::from_values(oracle::random_values(rng, 1, 14, 1, 300));
    const auto ref = oracle::exhaustive(raw(jobs));
    const auto bf = optimal_bruteforce(jobs);
    const auto dp = optimal_dp(jobs);
    ASSERT_EQ(bf.optimal_makespan, ref.makespan);
    ASSERT_EQ(bf.min_difference, ref.difference);
    ASSERT_EQ(dp.optimal_makespan, ref.makespan);
    ASSERT_EQ(dp.min_difference, ref.difference);
    expect_consistent(jobs, bf);
    expect_consistent(jobs, dp);

    // LPT never beats the optimum and both inequalities of the
    // equivalence argument hold against it.
    const auto lpt = schedule_to_partition(lpt_schedule(jobs), jobs);
    ASSERT_GE(lpt.larger_sum(), dp.optimal_makespan);
    ASSERT_GE(lpt.difference, dp.min_difference);
    if (lpt.difference == dp.min_difference)
      ASSERT_EQ(lpt.larger_sum(), dp.optimal_makespan);
  }
}

TEST(OracleProperty, DpScalesToLargeSums) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const auto jobs =
        JobSet::from_values(oracle::random_values(rng, 2, 25, 1, 32000));
    const auto dp = optimal_dp(jobs);
    expect_consistent(jobs, dp);
    if (jobs.size() <= 18) {
      const auto bf = optimal_bruteforce(jobs);
      ASSERT_EQ(dp.optimal_makespan, bf.optimal_makespan);
    }
  }
}

TEST(Equivalence, Examples) {
  EXPECT_TRUE(equivalence_check(jobs_of({9, 7, 4, 3, 2})));
  EXPECT_TRUE(equivalence_check(jobs_of({1, 1})));
  const auto c = jobs_of({7, 6, 3, 3, 2});
  EXPECT_TRUE(equivalence_check(c));
  const auto rc = optimal_bruteforce(c);
  EXPECT_EQ(rc.optimal_makespan, 11u);
  EXPECT_EQ(rc.min_difference, 1u);
  EXPECT_EQ(c.total_sum(), 21u);
}

TEST(Equivalence, HoldsOnRandomInstances) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 200; ++round)
    ASSERT_TRUE(equivalence_check(
        JobSet::from_values(oracle::random_values(rng, 1, 20, 1, 500))));
}

TEST(Equivalence, PropagatesCapError) {
  EXPECT_THROW(equivalence_check(jobs_of({1000, 999}), 10), Error);
}
