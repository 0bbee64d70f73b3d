#pragma once

// Finitely presented rank-1 words: a list of cutting-and-spacer stages plus a
// tail policy. v_0 = "0" and v_{n+1} is v_n cut into `cuts` copies separated
// by the stage's gaps.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rank1/verdict.hpp"
#include "rank1/word.hpp"

namespace rank1 {

struct Stage {
  Count cuts = 2;
  std::vector<Count> gaps{0};

  Stage() = default;
  Stage(Count cuts, std::vector<Count> gaps);

  bool symmetric() const;
  friend bool operator==(const Stage&, const Stage&) = default;
};

/// Nothing is known past the prefix stages.
struct Truncated {
  friend bool operator==(const Truncated&, const Truncated&) = default;
};

/// The cycle of stages repeats forever.
struct Periodic {
  std::vector<Stage> cycle;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

/// Tail stage k (k = 0, 1, ...) has `base.cuts` cuts and gaps base.gaps + k * increment.
struct Arithmetic {
  Stage base;
  std::vector<Count> increment;
  friend bool operator==(const Arithmetic&, const Arithmetic&) = default;
};

using TailPolicy = std::variant<Truncated, Periodic, Arithmetic>;

class RankOneSpec {
 public:
  RankOneSpec(std::vector<Stage> prefix, TailPolicy tail);

  const std::vector<Stage>& prefix() const noexcept { return prefix_; }
  const TailPolicy& tail() const noexcept { return tail_; }

  bool truncated() const noexcept { return std::holds_alternative<Truncated>(tail_); }
  /// Arithmetic tail with some positive increment.
  bool growing() const noexcept;

  bool has_stage(std::size_t n) const noexcept;
  /// Throws DepthExhausted past the end of a truncated spec.
  Stage stage(std::size_t n) const;
  Count stage_cuts(std::size_t n) const;
  Count stage_gap(std::size_t n, std::size_t slot) const;

  /// Identifier of stage n within the repeating part of the stage stream:
  /// stage streams from n and m coincide when phase(n) == phase(m).
  /// nullopt for stages of a growing tail.
  std::optional<std::size_t> phase(std::size_t n) const;

  /// Presents the word whose gap function is L(j * Z_n), i.e. stages n, n+1, ...
  RankOneSpec suffix_from(std::size_t n) const;

  friend bool operator==(const RankOneSpec&, const RankOneSpec&) = default;

 private:
  std::vector<Stage> prefix_;
  TailPolicy tail_;
};

/// Zero count of v_n; throws DepthExhausted on overflow or truncation.
Count stage_zero_count(const RankOneSpec& spec, std::size_t n);
Count stage_length(const RankOneSpec& spec, std::size_t n);
FiniteWord stage_word(const RankOneSpec& spec, std::size_t n);

/// First `length` symbols of V.
std::string expand_prefix(const RankOneSpec& spec, Count length);

/// L_V(i): the number of 1s between zero i-1 and zero i of V.
Count gap_function(const RankOneSpec& spec, Count i);

/// The prefix of V with `zeros` zeros.
FiniteWord prefix_word(const RankOneSpec& spec, Count zeros);

/// Presents the word 0 1^{L(r)} 0 1^{L(2r)} 0 ..., i.e. V read over its prefix
/// with r zeros. Meaningful when that prefix is in A_V.
RankOneSpec derived_over(const RankOneSpec& spec, Count r);

/// Smallest value of L_V; exact for periodic and arithmetic tails.
Count min_gap(const RankOneSpec& spec);

Verdict is_in_AV(const RankOneSpec& spec, const FiniteWord& v);
Verdict is_fundamental(const RankOneSpec& spec, const FiniteWord& v);

std::vector<FiniteWord> canonical_sequence(const RankOneSpec& spec, std::size_t count);
/// Elements of B_V of length at most max_length.
std::vector<FiniteWord> canonical_sequence_up_to_length(const RankOneSpec& spec, Count max_length);
/// Least element of B_V strictly above v (v must be in B_V).
FiniteWord next_fundamental(const RankOneSpec& spec, const FiniteWord& v);

enum class SpecClass { Degenerate, Minimal, NonMinimal, Unknown };
const char* to_string(SpecClass c) noexcept;

SpecClass classify(const RankOneSpec& spec);
Verdict is_nondegenerate(const RankOneSpec& spec);

/// Decides L_a(i) + offset_a == L_b(i) + offset_b for every i >= 1. A No
/// carries the first refuting index found.
Verdict same_gaps(const RankOneSpec& a, Count offset_a, const RankOneSpec& b, Count offset_b);

inline Verdict same_word(const RankOneSpec& a, const RankOneSpec& b) { return same_gaps(a, 0, b, 0); }

}  // namespace rank1
