#pragma once

#include "rank1/word.hpp"

namespace rank1 {

/// A pair (v, w) whose expected occurrences start at the same positions in V
/// and W. Validity is relative to a pair of specs; see check_scheme.
struct ReplacementScheme {
  FiniteWord v;
  FiniteWord w;

  ReplacementScheme transposed() const { return {w, v}; }
  friend bool operator==(const ReplacementScheme&, const ReplacementScheme&) = default;
};

}  // namespace rank1
