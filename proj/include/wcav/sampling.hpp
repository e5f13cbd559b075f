#pragma once

// Seeded random samples of Weil-central classes for property sweeps.

#include <cstdint>
#include <vector>

#include "wcav/weil.hpp"

namespace wcav {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct ClassSampleOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t count = 100;
  unsigned long g_max = 6;
  unsigned long q_max = 10'000;
  bool ordinary_only = true;
};

/// q uniform over prime powers in [2, q_max], g uniform in [1, g_max], a
/// uniform in [-floor(2 sqrt(q^g)), floor(2 sqrt(q^g))]; draws failing the
/// ordinary filter are rejected and redrawn.
std::vector<WeilCentralClass> sample_classes(const ClassSampleOptions& options);

/// Prime powers 2 <= q <= bound.
std::vector<unsigned long> prime_powers_up_to(unsigned long bound);

}  // namespace wcav
