#include "flowshop/fptas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flowshop/dp1.hpp"
#include "flowshop/dp2.hpp"

namespace flowshop {

namespace {

using U128 = unsigned __int128;

constexpr U128 kU128Max = ~static_cast<U128>(0);

U128 checked_mul(U128 a, U128 b) {
  if (a != 0 && b > kU128Max / a)
    throw OverflowError("scaling intermediate leaves the 128-bit range");
  return a * b;
}

void validate_eps(const Rational& eps) {
  if (eps.num < 1 || eps.den < 1)
    throw ValidationError("eps must be a positive fraction, got " + std::to_string(eps.num) +
                          "/" + std::to_string(eps.den));
}

}  // namespace

SolverChoice choose_solver(const Instance& instance) {
  const std::int64_t r0 = instance.r_total();
  const std::int64_t t0 = instance.t_total();
  const U128 lighter = static_cast<U128>(std::min(r0, t0));
  const U128 heavier = static_cast<U128>(std::max(r0, t0));
  return lighter * lighter <= heavier ? SolverChoice::dp2 : SolverChoice::dp1;
}

ScaledInstance scale_instance(const Instance& instance, const Rational& eps) {
  validate_instance(instance);
  validate_eps(eps);
  if (instance.jobs.empty()) throw ValidationError("scaling needs at least one job");

  const std::int64_t t_max = std::max(instance.r_total(), instance.t_total());
  // Unit K = eps * t_max / (n * m); divisions below are exact floor(x / K).
  const U128 k_num = checked_mul(static_cast<U128>(eps.num), static_cast<U128>(t_max));
  const U128 k_den = checked_mul(checked_mul(static_cast<U128>(instance.n()),
                                             static_cast<U128>(instance.m)),
                                 static_cast<U128>(eps.den));
  if (k_num <= k_den) return {instance, true};  // K <= 1: scaling would not shrink anything

  ScaledInstance scaled;
  scaled.instance.m = instance.m;
  scaled.instance.jobs.reserve(instance.jobs.size());
  for (const Job& job : instance.jobs) {
    const U128 r = checked_mul(static_cast<U128>(job.r), k_den) / k_num;
    const U128 t = checked_mul(static_cast<U128>(job.t), k_den) / k_num;
    scaled.instance.jobs.push_back(
        {static_cast<std::int64_t>(r), static_cast<std::int64_t>(t)});
  }
  return scaled;
}

ApproxResult approx_solve(const Instance& instance, const Rational& eps, SolverSelect inner,
                          const DpOptions& options) {
  validate_instance(instance);
  validate_eps(eps);

  ApproxResult result;
  if (instance.jobs.empty()) {
    result.schedule = evaluate_schedule(instance, {});
    result.exact_fallback = true;
    return result;
  }

  const ScaledInstance scaled = scale_instance(instance, eps);
  const Instance& target = scaled.instance;
  const SolverChoice choice = inner == SolverSelect::dp1   ? SolverChoice::dp1
                              : inner == SolverSelect::dp2 ? SolverChoice::dp2
                                                           : choose_solver(target);
  DpOptions inner_options = options;
  inner_options.value_only = false;  // the job partition is the point

  const Schedule inner_schedule = choice == SolverChoice::dp1
                                      ? solve_dp1(target, inner_options)
                                      : solve_dp2(target, inner_options);
  result.inner = choice;
  if (scaled.exact_fallback) {
    result.schedule = inner_schedule;
    result.exact_fallback = true;
    return result;
  }
  // Optimal partition of the scaled jobs, re-timed with the true durations.
  result.schedule = evaluate_schedule(instance, inner_schedule.assignment);
  return result;
}

std::pair<std::int64_t, std::int64_t> inflate_bound_check(std::span<const Job> sequence) {
  if (sequence.empty()) throw ValidationError("inflation check needs a nonempty sequence");
  const std::int64_t tau = simulate_shop(sequence).tau;

  std::vector<Job> inflated(sequence.begin(), sequence.end());
  for (Job& job : inflated) {
    job.r = checked_add(job.r, 1);
    job.t = checked_add(job.t, 1);
  }
  const std::int64_t tau_inflated = simulate_shop(inflated).tau;

  const std::int64_t slack = static_cast<std::int64_t>(sequence.size()) + 1;
  if (tau_inflated > checked_add(tau, slack))
    throw std::logic_error("unit inflation moved a completion time by more than " +
                           std::to_string(slack));
  return {tau, tau_inflated};
}

}  // namespace flowshop
