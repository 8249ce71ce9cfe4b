#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "territoire/config.hpp"

namespace territoire {

struct Verdict {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// The ten end-to-end checks, each comparing library output with an
/// independent count or an exact expected value.  `only` selects one
/// criterion by number; 0 runs all of them.
std::vector<Verdict> run_selfcheck(const Budgets& budgets = {}, std::uint64_t seed = kDefaultSeed,
                                   unsigned threads = 1, int only = 0);

}  // namespace territoire
