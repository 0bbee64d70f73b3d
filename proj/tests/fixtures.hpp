#pragma once

// Spec builders shared by the unit tests and the acceptance driver.

#include <vector>

#include "rank1/spec.hpp"

namespace fixtures {

using rank1::Count;
using rank1::Stage;

inline Stage bit_stage(int bit) { return bit == 0 ? Stage(3, {1, 0}) : Stage(3, {0, 1}); }

/// E0 word: stage m is v 1 v v for bit 0 and v v 1 v for bit 1.
inline rank1::RankOneSpec e0(const std::vector<int>& bits, const std::vector<int>& tail) {
  std::vector<Stage> prefix;
  for (int b : bits) prefix.push_back(bit_stage(b));
  std::vector<Stage> cycle;
  for (int b : tail) cycle.push_back(bit_stage(b));
  return rank1::RankOneSpec(std::move(prefix), rank1::Periodic{std::move(cycle)});
}

inline rank1::RankOneSpec two_three() {
  return rank1::RankOneSpec({}, rank1::Periodic{{Stage(3, {1, 1}), Stage(3, {2, 2})}});
}

}  // namespace fixtures
