#include "flowshop/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace flowshop {

namespace {

// m^n, capped so the overflow case still renders an honest message.
struct AssignmentCount {
  unsigned __int128 value = 1;
  bool overflowed = false;
};

AssignmentCount count_assignments(int m, int n) {
  AssignmentCount count;
  const auto limit = ~static_cast<unsigned __int128>(0);
  for (int i = 0; i < n; ++i) {
    if (count.value > limit / static_cast<unsigned>(m)) {
      count.overflowed = true;
      break;
    }
    count.value *= static_cast<unsigned>(m);
  }
  return count;
}

std::string to_string(unsigned __int128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

struct Enumerator {
  const Instance& instance;
  std::vector<int> johnson;  // all jobs in single-shop execution order
  std::vector<int> assignment;
  std::vector<int> best_assignment;
  std::int64_t best_makespan = -1;

  explicit Enumerator(const Instance& inst)
      : instance(inst), johnson(johnson_order(std::span<const Job>(inst.jobs))),
        assignment(inst.jobs.size(), 0) {}

  std::int64_t leaf_makespan() const {
    std::vector<ShopStatus> shops(instance.m);
    for (int job : johnson) {
      ShopStatus& shop = shops[assignment[job]];
      shop = push_job(shop, instance.jobs[job]);
    }
    std::int64_t makespan = 0;
    for (const ShopStatus& shop : shops) makespan = std::max(makespan, shop.tau());
    return makespan;
  }

  // Lexicographic descent; job `index` may only open the next unused shop, so
  // each relabeling class is visited exactly once, at its smallest member.
  void visit(int index, int used) {
    if (index == instance.n()) {
      const std::int64_t makespan = leaf_makespan();
      if (best_makespan < 0 || makespan < best_makespan) {
        best_makespan = makespan;
        best_assignment = assignment;
      }
      return;
    }
    const int reach = std::min(used + 1, instance.m);
    for (int shop = 0; shop < reach; ++shop) {
      assignment[index] = shop;
      visit(index + 1, std::max(used, shop + 1));
    }
    assignment[index] = 0;
  }
};

}  // namespace

Schedule oracle_solve(const Instance& instance, const OracleOptions& options) {
  validate_instance(instance);
  const AssignmentCount required = count_assignments(instance.m, instance.n());
  if (required.overflowed ||
      required.value > static_cast<unsigned __int128>(options.budget)) {
    const std::string count =
        required.overflowed ? "more than 2^128" : to_string(required.value);
    throw BudgetError("exhaustive search needs " + count + " assignments, budget is " +
                      std::to_string(options.budget));
  }

  Enumerator enumerator(instance);
  enumerator.visit(0, 0);
  return evaluate_schedule(instance, enumerator.best_assignment);
}

std::int64_t oracle_single_shop(std::span<const Job> jobs) {
  if (jobs.size() > 8)
    throw ValidationError("permutation search handles at most 8 jobs, got " +
                          std::to_string(jobs.size()));
  if (jobs.empty()) return 0;

  std::vector<int> perm(jobs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = -1;
  std::vector<Job> sequence(jobs.size());
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) sequence[i] = jobs[perm[i]];
    const std::int64_t tau = simulate_shop(sequence).tau;
    if (best < 0 || tau < best) best = tau;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace flowshop
