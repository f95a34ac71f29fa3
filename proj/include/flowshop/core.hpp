#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "flowshop/errors.hpp"

namespace flowshop {

// One two-stage job: an R-operation of length r followed by a T-operation of
// length t. Durations are nonnegative and confined to the nonnegative int64
// range; every accumulation over them is overflow-checked.
struct Job {
  std::int64_t r = 0;
  std::int64_t t = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
  std::vector<Job> jobs;
  int m = 1;  // number of identical two-stage flowshops

  int n() const { return static_cast<int>(jobs.size()); }
  std::int64_t r_total() const;
  std::int64_t t_total() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Running status of a single shop: rho is the completion time of the R-ops
// loaded so far, delta >= 0 is how far the T-side trails the R-side
// (tau = rho + delta is the T-op completion time).
struct ShopStatus {
  std::int64_t rho = 0;
  std::int64_t delta = 0;

  std::int64_t tau() const;

  friend bool operator==(const ShopStatus&, const ShopStatus&) = default;
};

struct ShopCompletion {
  std::int64_t rho = 0;
  std::int64_t tau = 0;

  friend bool operator==(const ShopCompletion&, const ShopCompletion&) = default;
};

struct Schedule {
  std::vector<int> assignment;              // job index -> shop index
  std::vector<std::vector<int>> order;      // per-shop execution order
  std::vector<ShopCompletion> completions;  // per-shop final (rho, tau)
  std::int64_t makespan = 0;
};

// Throws OverflowError if a + b leaves the nonnegative int64 range.
// Both operands must be nonnegative.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// m >= 1, durations nonnegative, and both duration sums representable.
void validate_instance(const Instance& instance);

// Strict total order: jobs with r <= t come first by ascending r, the rest
// follow by descending t, equal keys fall back to the original index. Because
// each job's rank is independent of the rest of the set, sorting any subset
// reproduces the restriction of the full order.
bool johnson_less(const Job& a, int index_a, const Job& b, int index_b);

// Returns the original indices in execution order.
std::vector<int> johnson_order(std::span<const std::pair<int, Job>> jobs);

// Same, for a plain list whose positions are the indices.
std::vector<int> johnson_order(std::span<const Job> jobs);

// Appends one job to a shop: rho' = rho + r, delta' = max(r, delta) + t - r.
// Also rejects states whose tau would leave the representable range.
ShopStatus push_job(ShopStatus status, const Job& job);

// Timing of one shop executing the given sequence as-is (no reordering),
// via the start-time recurrence: the R-side runs back to back and each T-op
// starts as soon as both its R-op and the previous T-op are done.
ShopCompletion simulate_shop(std::span<const Job> sequence);

// Builds the full schedule for a shop assignment: each shop executes its jobs
// in the order given by johnson_less; makespan is the latest tau.
Schedule evaluate_schedule(const Instance& instance, std::span<const int> assignment);

// max(ceil(R0/m), ceil(T0/m), max_i(r_i + t_i)); 0 for the empty instance.
std::int64_t makespan_lower_bound(const Instance& instance);

}  // namespace flowshop
