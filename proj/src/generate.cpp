#include "flowshop/generate.hpp"

#include <string>
#include <utility>

namespace flowshop {

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // reject the wrap-around remainder so every residue is equally likely
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t draw = next();
    if (draw >= threshold) return draw % bound;
  }
}

Instance generate(const GenSpec& spec) {
  if (spec.n < 0) throw ValidationError("n must be nonnegative");
  if (spec.m < 1) throw ValidationError("m must be at least 1");
  if (spec.r_max < 0 || spec.t_max < 0) throw ValidationError("duration bounds must be nonnegative");
  if (spec.zero_r_fraction.den < 1 || spec.zero_r_fraction.num < 0 ||
      spec.zero_r_fraction.num > spec.zero_r_fraction.den)
    throw ValidationError("zero-r fraction must lie in [0, 1]");

  SplitMix64 rng(spec.seed);
  Instance instance;
  instance.m = spec.m;
  instance.jobs.reserve(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    Job job;
    job.r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(spec.r_max) + 1));
    job.t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(spec.t_max) + 1));
    instance.jobs.push_back(job);
  }
  for (int i = spec.n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(instance.jobs[i], instance.jobs[j]);
  }
  const std::int64_t zeroed = static_cast<std::int64_t>(
      (static_cast<unsigned __int128>(spec.zero_r_fraction.num) * spec.n) /
      spec.zero_r_fraction.den);
  for (std::int64_t i = 0; i < zeroed; ++i) instance.jobs[i].r = 0;

  validate_instance(instance);
  return instance;
}

}  // namespace flowshop
