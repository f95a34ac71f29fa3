#include "flowshop/dual.hpp"

#include <algorithm>
#include <string>

namespace flowshop {

Job dual_job(const Job& job) { return {job.t, job.r}; }

Instance dual_instance(const Instance& instance) {
  Instance dual;
  dual.m = instance.m;
  dual.jobs.reserve(instance.jobs.size());
  for (const Job& job : instance.jobs) dual.jobs.push_back(dual_job(job));
  return dual;
}

Schedule dualize_schedule(const Instance& instance, const Schedule& dual_schedule) {
  validate_instance(instance);
  const int n = instance.n();
  if (static_cast<int>(dual_schedule.assignment.size()) != n)
    throw ValidationError("schedule covers " + std::to_string(dual_schedule.assignment.size()) +
                          " jobs, instance has " + std::to_string(n));
  if (static_cast<int>(dual_schedule.order.size()) != instance.m)
    throw ValidationError("schedule has " + std::to_string(dual_schedule.order.size()) +
                          " shops, instance has " + std::to_string(instance.m));

  Schedule schedule;
  schedule.assignment = dual_schedule.assignment;
  schedule.order.resize(instance.m);
  schedule.completions.resize(instance.m);
  std::vector<bool> seen(n, false);
  int placed = 0;
  for (int shop = 0; shop < instance.m; ++shop) {
    const std::vector<int>& dual_order = dual_schedule.order[shop];
    std::vector<int>& order = schedule.order[shop];
    order.assign(dual_order.rbegin(), dual_order.rend());
    std::vector<Job> sequence;
    sequence.reserve(order.size());
    for (int job : order) {
      if (job < 0 || job >= n || dual_schedule.assignment[job] != shop)
        throw ValidationError("shop " + std::to_string(shop) +
                              " order disagrees with the assignment");
      if (seen[job])
        throw ValidationError("job " + std::to_string(job) + " appears twice in the shop orders");
      seen[job] = true;
      sequence.push_back(instance.jobs[job]);
    }
    placed += static_cast<int>(order.size());
    schedule.completions[shop] = simulate_shop(sequence);
    schedule.makespan = std::max(schedule.makespan, schedule.completions[shop].tau);
  }
  if (placed != n) throw ValidationError("shop orders do not cover every job exactly once");
  return schedule;
}

}  // namespace flowshop
