#pragma once

// Finite words that begin and end with 0, stored as gap vectors, and the
// built-from order between them.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rank1 {

using Count = std::int64_t;

/// A word 0 1^{a_1} 0 1^{a_2} ... 1^{a_{r-1}} 0, held as (a_1, ..., a_{r-1}).
class FiniteWord {
 public:
  /// The word "0".
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Count> gaps);

  /// Parses a literal over {0,1} that begins and ends with 0.
  static FiniteWord parse(std::string_view literal);

  Count zero_count() const noexcept { return static_cast<Count>(gaps_.size()) + 1; }
  Count length() const noexcept { return length_; }
  std::span<const Count> gaps() const noexcept { return gaps_; }
  std::string render() const;

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
  /// Orders by zero count, then gap vector.
  friend std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b);

 private:
  std::vector<Count> gaps_;
  Count length_ = 1;
};

std::ostream& operator<<(std::ostream& os, const FiniteWord& w);

/// 1-runs between consecutive copies of the inner word in a decomposition.
using JoinerGaps = std::vector<Count>;

/// Joiners c with w = v 1^{c_1} v ... 1^{c_{k-1}} v, or nullopt when v is not
/// a building block of w. Single greedy pass; the decomposition is unique.
std::optional<JoinerGaps> decompose(const FiniteWord& w, const FiniteWord& v);

inline bool is_built_from(const FiniteWord& w, const FiniteWord& v) { return decompose(w, v).has_value(); }

/// True iff w decomposes over v with all joiners equal (vacuous for w == v).
bool is_built_simply(const FiniteWord& w, const FiniteWord& v);

/// |joiners|+1 copies of v separated by the given 1-runs.
FiniteWord build(const FiniteWord& v, std::span<const Count> joiners);

/// The word built from `new_inner` so that its copies start where the copies
/// of `inner` start in `outer`: joiners become c_i + |inner| - |new_inner|.
FiniteWord build_same_way(const FiniteWord& outer, const FiniteWord& inner, const FiniteWord& new_inner);

/// The prefix of w containing exactly `zeros` zeros.
FiniteWord prefix_with_zeros(const FiniteWord& w, Count zeros);

/// Every v with v built-from-below host, ordered by zero count.
std::vector<FiniteWord> divisors(const FiniteWord& host);

/// Greatest lower bound of two divisors of host (zero count gcd).
FiniteWord meet_in_host(const FiniteWord& host, const FiniteWord& v1, const FiniteWord& v2);

/// Least upper bound within divisors(host) (zero count lcm), if host is large enough.
std::optional<FiniteWord> join_in_host(const FiniteWord& host, const FiniteWord& v1, const FiniteWord& v2);

FiniteWord reverse_word(const FiniteWord& v);

/// True iff the joiners of w over v form a palindrome.
bool is_symmetric_build(const FiniteWord& w, const FiniteWord& v);

}  // namespace rank1
