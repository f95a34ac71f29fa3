#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "flowshop/core.hpp"
#include "flowshop/dp_common.hpp"
#include "flowshop/rational.hpp"

namespace flowshop {

enum class SolverChoice { dp1, dp2 };
enum class SolverSelect { dp1, dp2, automatic };

// dp2 iff min(R0, T0)^2 <= max(R0, T0).
SolverChoice choose_solver(const Instance& instance);

struct ScaledInstance {
  Instance instance;
  bool exact_fallback = false;  // scaling unit K <= 1: solve the original exactly
};

// Divides every duration by K = eps * max(R0, T0) / (n * m), rounding down;
// computed exactly as floor(x * n * m * den / (num * max(R0, T0))) in 128-bit
// intermediates. When K <= 1 the original instance is returned unchanged with
// exact_fallback set.
ScaledInstance scale_instance(const Instance& instance, const Rational& eps);

struct ApproxResult {
  Schedule schedule;
  bool exact_fallback = false;
  SolverChoice inner = SolverChoice::dp1;
};

// Solves the scaled instance exactly and reuses its job partition on the
// original one. The result is within a factor 1 + eps of optimal (exact on
// the fallback path).
ApproxResult approx_solve(const Instance& instance, const Rational& eps,
                          SolverSelect inner = SolverSelect::automatic,
                          const DpOptions& options = {});

// Returns (tau of the sequence, tau with every job grown by (+1, +1)) and
// throws std::logic_error unless the second stays within the first plus
// (length + 1). Sequence must be nonempty.
std::pair<std::int64_t, std::int64_t> inflate_bound_check(std::span<const Job> sequence);

}  // namespace flowshop
