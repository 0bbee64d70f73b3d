#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rank1/word.hpp"

namespace rank1::detail {

inline std::optional<Count> checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

inline std::optional<Count> checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

inline std::optional<Count> checked_mul(std::optional<Count> a, Count b) {
  if (!a) return std::nullopt;
  return checked_mul(*a, b);
}

/// Gap vector of v 1^{j_1} v ... 1^{j_k} v without constructing words.
inline std::vector<Count> build_gaps(const std::vector<Count>& inner, std::span<const Count> joiners) {
  std::vector<Count> out;
  out.reserve((joiners.size() + 1) * inner.size() + joiners.size());
  out.insert(out.end(), inner.begin(), inner.end());
  for (Count c : joiners) {
    out.push_back(c);
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

}  // namespace rank1::detail
