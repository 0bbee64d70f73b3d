#pragma once

// Finite-resolution view of the subshift X: admissible words, languages,
// the points with a first or last 0, and expected cylinders.

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "rank1/expectedness.hpp"
#include "rank1/spec.hpp"

namespace rank1 {

struct Occurrence {
  /// The word occurs in stage_word(stage) at `offset`; also V[offset...].
  std::size_t stage = 0;
  Count offset = 0;
};

struct AdmissibilityReport {
  Verdict verdict;
  std::optional<Occurrence> witness;
};

/// Whether `word` is a subword of V, using stages up to `depth`.
AdmissibilityReport is_admissible(std::string_view word, const RankOneSpec& spec, std::size_t depth);

struct Language {
  std::set<std::string> words;
  /// False when the set may be missing words (truncated spec or depth cap).
  bool complete = true;
};

Language enumerate_subwords(const RankOneSpec& spec, Count length, std::size_t depth);

enum class SpecialPoint { AllOnes, FirstZero, LastZero };

/// Symbols at positions -radius..radius. Only non-minimal words have these
/// points in X; anything else throws KindUnavailable.
Window special_point_window(const RankOneSpec& spec, SpecialPoint kind, Count radius);

/// Whether the window has an expected copy of v starting at i.
Verdict expected_cylinder_contains(const Window& window, const FiniteWord& v, Count i, const RankOneSpec& spec);

}  // namespace rank1
