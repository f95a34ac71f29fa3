#pragma once

#include <optional>
#include <string>

#include "flowshop/core.hpp"
#include "flowshop/rational.hpp"

namespace flowshop {

// Instance document: {"m": <int>, "jobs": [[r, t], ...]}.
Instance load_instance(const std::string& text);
std::string save_instance(const Instance& instance);

// Result document with fixed fields: makespan, assignment, shops
// (order/rho/tau per shop), algo, optimal, ratio_bound. value_only nulls the
// assignment and shops fields. Field order and formatting are fixed so equal
// results render byte-identically.
std::string render_result(const Schedule& schedule, const std::string& algo, bool optimal,
                          const std::optional<Rational>& ratio_bound, bool value_only = false);

}  // namespace flowshop
