#pragma once

#include <cstdint>

namespace officers::testing {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

// Seed for randomized tests; set with --seed=N on the test command line.
std::uint64_t test_seed();

}  // namespace officers::testing
