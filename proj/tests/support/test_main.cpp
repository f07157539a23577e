#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "seed.hpp"

namespace {
std::uint64_t g_seed = officers::testing::kDefaultSeed;
}

std::uint64_t officers::testing::test_seed() { return g_seed; }

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::stoull(argv[i] + 7);
    } else {
      rest.push_back(argv[i]);
    }
  }
  doctest::Context context(static_cast<int>(rest.size()), rest.data());
  return context.run();
}
