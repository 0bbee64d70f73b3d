#pragma once

// Expected and unexpected occurrences of a generating word inside finite
// samples of points, and the window form of a replacement scheme.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rank1/scheme.hpp"
#include "rank1/spec.hpp"

namespace rank1 {

/// symbols == V[offset, offset + size).
struct AnchoredInV {
  Count offset = 0;
  friend bool operator==(const AnchoredInV&, const AnchoredInV&) = default;
};
/// The point's first 0 is at window index k (k may lie outside the window).
struct FirstZeroAt {
  Count k = 0;
  friend bool operator==(const FirstZeroAt&, const FirstZeroAt&) = default;
};
/// The point's last 0 is at window index k.
struct LastZeroAt {
  Count k = 0;
  friend bool operator==(const LastZeroAt&, const LastZeroAt&) = default;
};
struct Floating {
  friend bool operator==(const Floating&, const Floating&) = default;
};

using Anchor = std::variant<AnchoredInV, FirstZeroAt, LastZeroAt, Floating>;

struct Window {
  std::string symbols;
  Anchor anchor = Floating{};
  friend bool operator==(const Window&, const Window&) = default;
};

/// `V@<offset>:bits`, `first@<k>:bits`, `last@<k>:bits` or `float:bits`.
Window parse_window(std::string_view literal);
std::string render_window(const Window& window);

struct OccurrenceTag {
  Count position = 0;
  Answer expected = Answer::Unknown;
  friend bool operator==(const OccurrenceTag&, const OccurrenceTag&) = default;
};

/// Least t >= 2 such that L(r), L(2r), ... (r = zero count of v) has no t
/// equal consecutive terms.
Count consecutiveness_bound(const RankOneSpec& spec, const FiniteWord& v);

/// Longest run of equal consecutive terms in L(r), L(2r), ...
Count max_equal_run(const RankOneSpec& spec, Count r);

/// Context-only rule on the 2t|v| symbols starting at i. Unknown when the
/// window is too short. Throws NoOccurrence.
OccurrenceTag classify_occurrence_local(const Window& window, Count i, const FiniteWord& v, Count t);

/// Zero-counting rule for anchored windows. AnchoredInV needs the spec.
/// Throws NoOccurrence, InsufficientContext.
OccurrenceTag classify_occurrence_anchored(const Window& window, Count i, const FiniteWord& v,
                                           const RankOneSpec* spec = nullptr);

/// What a window decomposition needs from the governing word: the spec (for
/// V anchors and to compute t) and/or t for the local rule.
struct Governing {
  const RankOneSpec* spec = nullptr;
  Count t = 0;
};

struct CoverageReport {
  Count zeros = 0;
  /// Zeros at indices in [|v| - 1, size - |v|].
  Count interior_zeros = 0;
  Count interior_covered_once = 0;
  /// Zeros covered by a copy of v that runs past a window edge.
  std::vector<Count> boundary_zeros;
  /// False when no occurrence could be classified as expected.
  bool determined = true;
};

struct WindowDecomposition {
  /// Every literal occurrence of v, by position.
  std::vector<OccurrenceTag> tags;
  /// Starts of expected copies, including copies cut by the window edges
  /// (negative starts, or starts with fewer than |v| symbols left).
  std::vector<Count> expected_starts;
  CoverageReport coverage;
};

/// Throws CoverageFailure when the zeros of the window cannot be tiled by
/// expected copies of v consistent with the classification rules.
WindowDecomposition decompose_window(const Window& window, const FiniteWord& v, const Governing& governing);

struct SchemeImage {
  Window window;
  /// Index of the image's first symbol in the input window's frame.
  Count lo = 0;
};

/// Replaces each expected copy of scheme.v by a copy of scheme.w starting at
/// the same index. Regions whose image is not determined are trimmed.
/// Throws SchemeMismatch, CoverageFailure.
SchemeImage apply_scheme_window(const Window& window, const ReplacementScheme& scheme, const Governing& governing);

}  // namespace rank1
