#pragma once

#include "parity_sched/core.hpp"

namespace parity {

// Graham's (LPT) schedule on two identical machines. Jobs are taken in
// non-increasing order and each goes to the machine with the smaller load;
// equal loads send the job to machine 1.
//
// The last job L is the final job on the machine that finishes at the
// makespan. When both machines finish together, L is the larger of the two
// candidate indices.
TwoMachineSchedule lpt_schedule(const JobSet &jobs);

/// NPP view of a schedule: side1/side2 are the machine 1/2 job sets.
Partition schedule_to_partition(const TwoMachineSchedule &schedule,
                                const JobSet &jobs);

} // namespace parity
