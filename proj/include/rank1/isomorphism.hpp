#pragma once

// Replacement schemes between rank-1 words: validity, norms, lifting,
// norm-bounded isomorphism search, the ultrametric, E0 words and reversal.

#include <optional>
#include <string>
#include <vector>

#include "rank1/scheme.hpp"
#include "rank1/spec.hpp"

namespace rank1 {

/// Yes iff v is in A_V, w is in A_W and the i-th expected copies of v in V
/// and of w in W start at the same index for every i. A No carries the first
/// joiner index found where they do not.
Verdict check_scheme(const RankOneSpec& V, const RankOneSpec& W, const ReplacementScheme& scheme);

/// |v| plus the least gap of V between expected copies of v.
/// Throws InvalidScheme unless check_scheme says Yes.
Count scheme_norm(const RankOneSpec& V, const RankOneSpec& W, const ReplacementScheme& scheme);

/// (v~, w~) with w~ built from scheme.w the way v~ is built from scheme.v.
/// Throws InvalidScheme, PrecedenceViolation, LiftFailure.
ReplacementScheme lift_scheme(const RankOneSpec& V, const RankOneSpec& W, const ReplacementScheme& scheme,
                              const FiniteWord& v_tilde);

struct SchemeVerdict {
  Verdict verdict;
  std::optional<ReplacementScheme> scheme;
  Count norm = 0;
};

/// Every valid pair of fundamental words with norm <= k, ordered by
/// (norm, |v|, |w|). `complete` is false if some candidate was undecided.
struct SchemeList {
  std::vector<std::pair<ReplacementScheme, Count>> schemes;
  bool complete = true;
};
SchemeList enumerate_schemes(const RankOneSpec& V, const RankOneSpec& W, Count k);

/// Yes iff some valid scheme of fundamental words has norm <= k.
SchemeVerdict similar_k(const RankOneSpec& V, const RankOneSpec& W, Count k);

/// The least-norm scheme up to max_norm, else Unknown(max_norm). Never No.
SchemeVerdict decide_isomorphism(const RankOneSpec& V, const RankOneSpec& W, Count max_norm);

/// Stage m of an E0 word is Stage(3, [1,0]) for bit 0 and Stage(3, [0,1]) for bit 1.
RankOneSpec e0_encode(const std::vector<int>& bits, const TailPolicy& tail);
RankOneSpec e0_encode(const std::vector<int>& bits, const std::vector<int>& tail_cycle);

struct E0Bits {
  std::vector<int> prefix;
  std::vector<int> cycle;
};
/// The bit stream of an E0 word, or nullopt if the spec is not one.
std::optional<E0Bits> e0_decode(const RankOneSpec& spec);

/// Exact decision for two E0 words: Yes with (v_N, w_N) where N is one past
/// the last index where the bit streams differ, No if they differ infinitely
/// often. Throws InvalidTail for other specs.
SchemeVerdict decide_isomorphism_e0(const RankOneSpec& V, const RankOneSpec& W);

/// d(A, B) = 2^-exponent, or 0 when A and B are the same word.
struct Dyadic {
  std::optional<Count> exponent;
  bool is_zero() const noexcept { return !exponent.has_value(); }
  std::string render() const;
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
};
/// Orders by value.
bool operator<(const Dyadic& a, const Dyadic& b);

Dyadic ultrametric_distance(const RankOneSpec& A, const RankOneSpec& B);

/// Presents the reversed word: every stage's gaps reversed.
RankOneSpec reverse_spec(const RankOneSpec& spec);

struct InverseReport {
  /// Whether the builds are eventually symmetric.
  Verdict symmetric;
  /// Scheme search between V and its reversal.
  SchemeVerdict search;
  Verdict combined;
};

InverseReport decide_inverse_isomorphic(const RankOneSpec& spec, Count max_norm);

}  // namespace rank1
