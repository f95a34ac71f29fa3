#pragma once

#include "flowshop/core.hpp"

namespace flowshop {

// Swaps the two stages: (r, t) -> (t, r).
Job dual_job(const Job& job);

// Same shop count, every job dualized.
Instance dual_instance(const Instance& instance);

// Converts a schedule of dual_instance(instance) back to one of the original
// instance: the assignment is kept and each shop runs its jobs in reverse
// order. Per-shop completion times carry over exactly, so the makespan is
// preserved.
Schedule dualize_schedule(const Instance& instance, const Schedule& dual_schedule);

}  // namespace flowshop
