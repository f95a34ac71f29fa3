#pragma once

#include <cstdint>

#include "flowshop/core.hpp"
#include "flowshop/rational.hpp"

namespace flowshop {

// splitmix64; fixed algorithm so streams reproduce across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next();

  // Uniform draw from [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);
};

struct GenSpec {
  int n = 0;
  int m = 1;
  std::int64_t r_max = 0;
  std::int64_t t_max = 0;
  Rational zero_r_fraction{0, 1};  // in [0, 1]
  std::uint64_t seed = 0;
};

// Draws r then t uniformly from [0, r_max] x [0, t_max] per job, shuffles the
// list (Fisher-Yates, high index down), then forces r = 0 on the first
// floor(zero_r_fraction * n) jobs. Identical specs give identical instances.
Instance generate(const GenSpec& spec);

}  // namespace flowshop
