#include "parity_sched/lpt.hpp"

#include <algorithm>

namespace parity {

TwoMachineSchedule lpt_schedule(const JobSet &jobs) {
  TwoMachineSchedule s;
  s.assignment.reserve(jobs.size());

  std::size_t last1 = 0, last2 = 0; // one-based, 0 = machine idle
  std::size_t count1 = 0, count2 = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (s.load1 <= s.load2) {
      s.assignment.push_back(Machine::One);
      s.load1 += jobs[i];
      last1 = i + 1;
      ++count1;
    } else {
      s.assignment.push_back(Machine::Two);
      s.load2 += jobs[i];
      last2 = i + 1;
      ++count2;
    }
  }

  s.makespan = std::max(s.load1, s.load2);
  const bool one_critical =
      s.load1 > s.load2 || (s.load1 == s.load2 && last1 > last2);
  s.last_job_index = one_critical ? last1 : last2;
  s.critical_job_count = one_critical ? count1 : count2;
  s.m_value = ceil_half(s.last_job_index);
  return s;
}

Partition schedule_to_partition(const TwoMachineSchedule &schedule,
                                const JobSet &jobs) {
  if (schedule.job_count() != jobs.size())
    throw Error(ErrorCode::MismatchedInstance,
                "schedule covers " + std::to_string(schedule.job_count()) +
                    " jobs but the job set has " + std::to_string(jobs.size()));
  std::vector<bool> on_side1(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i)
    on_side1[i] = schedule.assignment[i] == Machine::One;
  return Partition::from_membership(jobs, on_side1);
}

} // namespace parity
