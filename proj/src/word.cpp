#include "rank1/word.hpp"

#include <algorithm>
#include <numeric>

#include "rank1/error.hpp"

namespace rank1 {

FiniteWord::FiniteWord(std::vector<Count> gaps) : gaps_(std::move(gaps)) {
  length_ = zero_count();
  for (Count a : gaps_) {
    if (a < 0) throw Error(ErrorKind::InvalidWord, "negative gap " + std::to_string(a));
    length_ += a;
  }
}

FiniteWord FiniteWord::parse(std::string_view literal) {
  if (literal.empty()) throw Error(ErrorKind::InvalidWord, "empty literal");
  if (literal.front() != '0' || literal.back() != '0')
    throw Error(ErrorKind::InvalidWord, "'" + std::string(literal) + "' must begin and end with 0");
  std::vector<Count> gaps;
  Count run = 0;
  for (std::size_t i = 1; i < literal.size(); ++i) {
    const char c = literal[i];
    if (c == '1') {
      ++run;
    } else if (c == '0') {
      gaps.push_back(run);
      run = 0;
    } else {
      throw Error(ErrorKind::InvalidWord, "unexpected character at offset " + std::to_string(i));
    }
  }
  return FiniteWord(std::move(gaps));
}

std::string FiniteWord::render() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  out.push_back('0');
  for (Count a : gaps_) {
    out.append(static_cast<std::size_t>(a), '1');
    out.push_back('0');
  }
  return out;
}

std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b) {
  if (auto c = a.zero_count() <=> b.zero_count(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.gaps_.begin(), a.gaps_.end(), b.gaps_.begin(), b.gaps_.end());
}

std::ostream& operator<<(std::ostream& os, const FiniteWord& w) { return os << w.render(); }

std::optional<JoinerGaps> decompose(const FiniteWord& w, const FiniteWord& v) {
  const Count r = v.zero_count();
  const Count s = w.zero_count();
  if (s % r != 0) return std::nullopt;
  const auto wg = w.gaps();
  const auto vg = v.gaps();
  JoinerGaps joiners;
  joiners.reserve(static_cast<std::size_t>(s / r - 1));
  // Copy k of v owns zeros k*r .. k*r+r-1; the gap after its last zero is a joiner.
  for (Count k = 0; k < s / r; ++k) {
    const auto base = static_cast<std::size_t>(k * r);
    if (!std::equal(vg.begin(), vg.end(), wg.begin() + static_cast<std::ptrdiff_t>(base))) return std::nullopt;
    if (k + 1 < s / r) joiners.push_back(wg[base + static_cast<std::size_t>(r) - 1]);
  }
  return joiners;
}

bool is_built_simply(const FiniteWord& w, const FiniteWord& v) {
  const auto j = decompose(w, v);
  if (!j) return false;
  return std::adjacent_find(j->begin(), j->end(), std::not_equal_to<>()) == j->end();
}

FiniteWord build(const FiniteWord& v, std::span<const Count> joiners) {
  const auto vg = v.gaps();
  std::vector<Count> gaps;
  gaps.reserve((joiners.size() + 1) * vg.size() + joiners.size());
  gaps.insert(gaps.end(), vg.begin(), vg.end());
  for (Count c : joiners) {
    gaps.push_back(c);
    gaps.insert(gaps.end(), vg.begin(), vg.end());
  }
  return FiniteWord(std::move(gaps));
}

FiniteWord build_same_way(const FiniteWord& outer, const FiniteWord& inner, const FiniteWord& new_inner) {
  auto joiners = decompose(outer, inner);
  if (!joiners) throw Error(ErrorKind::PrecedenceViolation, inner.render() + " is not a building block of " + outer.render());
  const Count shift = inner.length() - new_inner.length();
  for (Count& c : *joiners) {
    c += shift;
    if (c < 0) throw Error(ErrorKind::NonRepresentable, new_inner.render() + " is too long for a joiner of " + outer.render());
  }
  return build(new_inner, *joiners);
}

FiniteWord prefix_with_zeros(const FiniteWord& w, Count zeros) {
  if (zeros < 1 || zeros > w.zero_count())
    throw Error(ErrorKind::InvalidWord, "prefix with " + std::to_string(zeros) + " zeros of a word with " +
                                            std::to_string(w.zero_count()));
  const auto g = w.gaps();
  return FiniteWord(std::vector<Count>(g.begin(), g.begin() + (zeros - 1)));
}

std::vector<FiniteWord> divisors(const FiniteWord& host) {
  std::vector<FiniteWord> out;
  const Count s = host.zero_count();
  for (Count r = 1; r <= s; ++r) {
    if (s % r != 0) continue;
    FiniteWord candidate = prefix_with_zeros(host, r);
    if (decompose(host, candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

namespace {

void require_divisor(const FiniteWord& host, const FiniteWord& v) {
  if (!decompose(host, v)) throw Error(ErrorKind::PrecedenceViolation, v.render() + " is not a building block of " + host.render());
}

}  // namespace

FiniteWord meet_in_host(const FiniteWord& host, const FiniteWord& v1, const FiniteWord& v2) {
  require_divisor(host, v1);
  require_divisor(host, v2);
  return prefix_with_zeros(host, std::gcd(v1.zero_count(), v2.zero_count()));
}

std::optional<FiniteWord> join_in_host(const FiniteWord& host, const FiniteWord& v1, const FiniteWord& v2) {
  require_divisor(host, v1);
  require_divisor(host, v2);
  const Count l = std::lcm(v1.zero_count(), v2.zero_count());
  if (host.zero_count() % l != 0) return std::nullopt;
  return prefix_with_zeros(host, l);
}

FiniteWord reverse_word(const FiniteWord& v) {
  std::vector<Count> g(v.gaps().rbegin(), v.gaps().rend());
  return FiniteWord(std::move(g));
}

bool is_symmetric_build(const FiniteWord& w, const FiniteWord& v) {
  const auto j = decompose(w, v);
  if (!j) throw Error(ErrorKind::PrecedenceViolation, v.render() + " is not a building block of " + w.render());
  return std::equal(j->begin(), j->begin() + static_cast<std::ptrdiff_t>(j->size() / 2), j->rbegin());
}

}  // namespace rank1
