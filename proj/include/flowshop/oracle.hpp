#pragma once

#include <cstdint>
#include <span>

#include "flowshop/core.hpp"

namespace flowshop {

struct OracleOptions {
  std::int64_t budget = 100'000'000;  // admissible number of assignments, m^n
};

// Reference solver: enumerates shop assignments exhaustively and keeps the
// lexicographically smallest one reaching the minimum makespan. Assignments
// that only relabel shops are visited once (job i never opens shop s unless
// shops 0..s-1 are already in use). Deliberately shares no search machinery
// with the dynamic programs.
Schedule oracle_solve(const Instance& instance, const OracleOptions& options = {});

// Minimum completion time of a single shop over every permutation of the
// given jobs. At most 8 jobs.
std::int64_t oracle_single_shop(std::span<const Job> jobs);

}  // namespace flowshop
