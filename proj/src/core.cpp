#include "flowshop/core.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <string>

namespace flowshop {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  assert(a >= 0 && b >= 0);
  if (a > std::numeric_limits<std::int64_t>::max() - b)
    throw OverflowError("sum " + std::to_string(a) + " + " + std::to_string(b) +
                        " leaves the nonnegative int64 range");
  return a + b;
}

std::int64_t Instance::r_total() const {
  std::int64_t sum = 0;
  for (const Job& job : jobs) sum = checked_add(sum, job.r);
  return sum;
}

std::int64_t Instance::t_total() const {
  std::int64_t sum = 0;
  for (const Job& job : jobs) sum = checked_add(sum, job.t);
  return sum;
}

std::int64_t ShopStatus::tau() const { return checked_add(rho, delta); }

void validate_instance(const Instance& instance) {
  if (instance.m < 1) throw ValidationError("m must be at least 1, got " + std::to_string(instance.m));
  for (std::size_t i = 0; i < instance.jobs.size(); ++i) {
    const Job& job = instance.jobs[i];
    if (job.r < 0)
      throw ValidationError("jobs[" + std::to_string(i) + "].r is negative");
    if (job.t < 0)
      throw ValidationError("jobs[" + std::to_string(i) + "].t is negative");
  }
  try {
    instance.r_total();
    instance.t_total();
  } catch (const OverflowError&) {
    throw ValidationError("duration sums exceed the nonnegative int64 range");
  }
}

bool johnson_less(const Job& a, int index_a, const Job& b, int index_b) {
  const int group_a = a.r <= a.t ? 0 : 1;
  const int group_b = b.r <= b.t ? 0 : 1;
  if (group_a != group_b) return group_a < group_b;
  // ascending r in the first group, descending t in the second
  const std::int64_t key_a = group_a == 0 ? a.r : -a.t;
  const std::int64_t key_b = group_b == 0 ? b.r : -b.t;
  if (key_a != key_b) return key_a < key_b;
  return index_a < index_b;
}

std::vector<int> johnson_order(std::span<const std::pair<int, Job>> jobs) {
  std::vector<int> positions(jobs.size());
  std::iota(positions.begin(), positions.end(), 0);
  std::sort(positions.begin(), positions.end(), [&](int x, int y) {
    return johnson_less(jobs[x].second, jobs[x].first, jobs[y].second, jobs[y].first);
  });
  std::vector<int> result;
  result.reserve(jobs.size());
  for (int position : positions) result.push_back(jobs[position].first);
  return result;
}

std::vector<int> johnson_order(std::span<const Job> jobs) {
  std::vector<int> order(jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return johnson_less(jobs[x], x, jobs[y], y); });
  return order;
}

ShopStatus push_job(ShopStatus status, const Job& job) {
  assert(status.rho >= 0 && status.delta >= 0 && job.r >= 0 && job.t >= 0);
  const ShopStatus next{checked_add(status.rho, job.r),
                        checked_add(status.delta > job.r ? status.delta - job.r : 0, job.t)};
  next.tau();  // the new T-completion must stay representable
  return next;
}

ShopCompletion simulate_shop(std::span<const Job> sequence) {
  std::int64_t r_done = 0;   // R-side runs back to back, no idling
  std::int64_t t_done = 0;   // completion of the last T-op so far
  for (const Job& job : sequence) {
    r_done = checked_add(r_done, job.r);
    const std::int64_t t_start = std::max(r_done, t_done);
    t_done = checked_add(t_start, job.t);
  }
  return {r_done, t_done};
}

Schedule evaluate_schedule(const Instance& instance, std::span<const int> assignment) {
  validate_instance(instance);
  if (assignment.size() != instance.jobs.size())
    throw ValidationError("assignment covers " + std::to_string(assignment.size()) +
                          " jobs, instance has " + std::to_string(instance.jobs.size()));

  Schedule schedule;
  schedule.assignment.assign(assignment.begin(), assignment.end());
  schedule.order.resize(instance.m);
  for (int job = 0; job < instance.n(); ++job) {
    const int shop = assignment[job];
    if (shop < 0 || shop >= instance.m)
      throw ValidationError("assignment[" + std::to_string(job) + "] = " + std::to_string(shop) +
                            " is not a shop index");
    schedule.order[shop].push_back(job);
  }

  schedule.completions.resize(instance.m);
  for (int shop = 0; shop < instance.m; ++shop) {
    std::vector<int>& order = schedule.order[shop];
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return johnson_less(instance.jobs[x], x, instance.jobs[y], y);
    });
    std::vector<Job> sequence;
    sequence.reserve(order.size());
    for (int job : order) sequence.push_back(instance.jobs[job]);
    schedule.completions[shop] = simulate_shop(sequence);
    schedule.makespan = std::max(schedule.makespan, schedule.completions[shop].tau);
  }
  return schedule;
}

std::int64_t makespan_lower_bound(const Instance& instance) {
  validate_instance(instance);
  const auto ceil_div = [](std::int64_t a, std::int64_t b) { return a / b + (a % b != 0); };
  std::int64_t bound = std::max(ceil_div(instance.r_total(), instance.m),
                                ceil_div(instance.t_total(), instance.m));
  for (const Job& job : instance.jobs) bound = std::max(bound, checked_add(job.r, job.t));
  return bound;
}

}  // namespace flowshop
