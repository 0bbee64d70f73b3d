#include "rank1/spec.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "checked.hpp"
#include "rank1/error.hpp"

namespace rank1 {

using detail::checked_mul;

namespace {

// Hard limits for materialized data. Anything larger is reported as
// DepthExhausted / Unknown rather than attempted.
constexpr Count kMaxMaterializedZeros = Count{1} << 24;
constexpr Count kMaxRunScan = 1'000'000;
constexpr std::size_t kMaxCompareSteps = 200'000;

std::string words_gap_message(Count i, Count got, Count want) {
  return "L(" + std::to_string(i) + ") = " + std::to_string(got) + " but the word requires " + std::to_string(want);
}

}  // namespace

Stage::Stage(Count cuts_, std::vector<Count> gaps_) : cuts(cuts_), gaps(std::move(gaps_)) {
  if (cuts < 2) throw Error(ErrorKind::InvalidStage, "a stage needs at least 2 cuts, got " + std::to_string(cuts));
  if (static_cast<Count>(gaps.size()) != cuts - 1)
    throw Error(ErrorKind::InvalidStage, "stage with " + std::to_string(cuts) + " cuts needs " +
                                             std::to_string(cuts - 1) + " gaps, got " + std::to_string(gaps.size()));
  for (Count g : gaps)
    if (g < 0) throw Error(ErrorKind::InvalidStage, "negative gap " + std::to_string(g));
}

bool Stage::symmetric() const { return std::equal(gaps.begin(), gaps.end(), gaps.rbegin()); }

RankOneSpec::RankOneSpec(std::vector<Stage> prefix, TailPolicy tail) : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (auto* p = std::get_if<Periodic>(&tail_)) {
    if (p->cycle.empty()) throw Error(ErrorKind::InvalidTail, "periodic tail needs a nonempty cycle");
  } else if (auto* a = std::get_if<Arithmetic>(&tail_)) {
    if (static_cast<Count>(a->increment.size()) != a->base.cuts - 1)
      throw Error(ErrorKind::InvalidTail, "arithmetic increment must have one entry per gap slot");
    for (Count d : a->increment)
      if (d < 0) throw Error(ErrorKind::InvalidTail, "negative increment");
  }
}

bool RankOneSpec::growing() const noexcept {
  const auto* a = std::get_if<Arithmetic>(&tail_);
  return a && std::any_of(a->increment.begin(), a->increment.end(), [](Count d) { return d > 0; });
}

bool RankOneSpec::has_stage(std::size_t n) const noexcept { return n < prefix_.size() || !truncated(); }

Count RankOneSpec::stage_cuts(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n].cuts;
  const std::size_t k = n - prefix_.size();
  if (const auto* p = std::get_if<Periodic>(&tail_)) return p->cycle[k % p->cycle.size()].cuts;
  if (const auto* a = std::get_if<Arithmetic>(&tail_)) return a->base.cuts;
  throw Error(ErrorKind::DepthExhausted, "stage " + std::to_string(n) + " of a spec truncated after " +
                                             std::to_string(prefix_.size()) + " stages");
}

Count RankOneSpec::stage_gap(std::size_t n, std::size_t slot) const {
  if (n < prefix_.size()) return prefix_[n].gaps[slot];
  const std::size_t k = n - prefix_.size();
  if (const auto* p = std::get_if<Periodic>(&tail_)) return p->cycle[k % p->cycle.size()].gaps[slot];
  if (const auto* a = std::get_if<Arithmetic>(&tail_)) return a->base.gaps[slot] + static_cast<Count>(k) * a->increment[slot];
  throw Error(ErrorKind::DepthExhausted, "stage " + std::to_string(n) + " of a spec truncated after " +
                                             std::to_string(prefix_.size()) + " stages");
}

Stage RankOneSpec::stage(std::size_t n) const {
  const Count r = stage_cuts(n);
  std::vector<Count> gaps(static_cast<std::size_t>(r - 1));
  for (std::size_t s = 0; s < gaps.size(); ++s) gaps[s] = stage_gap(n, s);
  return Stage(r, std::move(gaps));
}

std::optional<std::size_t> RankOneSpec::phase(std::size_t n) const {
  const std::size_t p = prefix_.size();
  if (n < p) return n;
  if (const auto* c = std::get_if<Periodic>(&tail_)) return p + (n - p) % c->cycle.size();
  if (std::holds_alternative<Arithmetic>(tail_) && !growing()) return p;
  return std::nullopt;
}

RankOneSpec RankOneSpec::suffix_from(std::size_t n) const {
  const std::size_t p = prefix_.size();
  if (n <= p) return RankOneSpec(std::vector<Stage>(prefix_.begin() + static_cast<std::ptrdiff_t>(n), prefix_.end()), tail_);
  const std::size_t k = n - p;
  if (const auto* c = std::get_if<Periodic>(&tail_)) {
    std::vector<Stage> cycle = c->cycle;
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(k % cycle.size()), cycle.end());
    return RankOneSpec({}, Periodic{std::move(cycle)});
  }
  if (const auto* a = std::get_if<Arithmetic>(&tail_)) {
    Arithmetic shifted = *a;
    for (std::size_t s = 0; s < shifted.base.gaps.size(); ++s) shifted.base.gaps[s] += static_cast<Count>(k) * a->increment[s];
    return RankOneSpec({}, std::move(shifted));
  }
  throw Error(ErrorKind::DepthExhausted, "suffix past the end of a truncated spec");
}

Count stage_zero_count(const RankOneSpec& spec, std::size_t n) {
  Count z = 1;
  for (std::size_t k = 0; k < n; ++k) {
    auto next = checked_mul(z, spec.stage_cuts(k));
    if (!next) throw Error(ErrorKind::DepthExhausted, "zero count of stage " + std::to_string(n) + " overflows");
    z = *next;
  }
  return z;
}

Count stage_length(const RankOneSpec& spec, std::size_t n) {
  Count len = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Count r = spec.stage_cuts(k);
    auto next = checked_mul(len, r);
    for (std::size_t s = 0; next && s + 1 < static_cast<std::size_t>(r); ++s) next = detail::checked_add(*next, spec.stage_gap(k, s));
    if (!next) throw Error(ErrorKind::DepthExhausted, "length of stage " + std::to_string(n) + " overflows");
    len = *next;
  }
  return len;
}

FiniteWord stage_word(const RankOneSpec& spec, std::size_t n) {
  if (stage_zero_count(spec, n) > kMaxMaterializedZeros)
    throw Error(ErrorKind::DepthExhausted, "stage " + std::to_string(n) + " is too large to materialize");
  std::vector<Count> gaps;
  for (std::size_t k = 0; k < n; ++k) gaps = detail::build_gaps(gaps, spec.stage(k).gaps);
  return FiniteWord(std::move(gaps));
}

Count gap_function(const RankOneSpec& spec, Count i) {
  if (i < 1) throw Error(ErrorKind::InvalidWord, "gap index must be >= 1");
  Count j = i;
  for (std::size_t n = 0;; ++n) {
    const Count r = spec.stage_cuts(n);
    if (j % r != 0) return spec.stage_gap(n, static_cast<std::size_t>(j % r - 1));
    j /= r;
  }
}

std::string expand_prefix(const RankOneSpec& spec, Count length) {
  std::string out;
  if (length <= 0) return out;
  out.reserve(static_cast<std::size_t>(length));
  out.push_back('0');
  for (Count i = 1; static_cast<Count>(out.size()) < length; ++i) {
    const Count room = length - static_cast<Count>(out.size());
    const Count ones = std::min(gap_function(spec, i), room);
    out.append(static_cast<std::size_t>(ones), '1');
    if (ones < room) out.push_back('0');
  }
  return out;
}

FiniteWord prefix_word(const RankOneSpec& spec, Count zeros) {
  if (zeros < 1) throw Error(ErrorKind::InvalidWord, "a prefix needs at least one zero");
  if (zeros > kMaxMaterializedZeros) throw Error(ErrorKind::DepthExhausted, "prefix too large to materialize");
  std::vector<Count> gaps(static_cast<std::size_t>(zeros - 1));
  for (Count i = 1; i < zeros; ++i) gaps[static_cast<std::size_t>(i - 1)] = gap_function(spec, i);
  return FiniteWord(std::move(gaps));
}

RankOneSpec derived_over(const RankOneSpec& spec, Count r) {
  if (r < 1) throw Error(ErrorKind::InvalidWord, "zero count must be positive");
  if (r == 1) return spec;
  std::size_t n = 0;
  Count z = 1;
  while (z % r != 0) {
    auto next = checked_mul(z, spec.stage_cuts(n));
    if (!next || *next > kMaxMaterializedZeros)
      throw Error(ErrorKind::DepthExhausted, "no stage zero count up to the materialization limit is a multiple of " +
                                                 std::to_string(r));
    z = *next;
    ++n;
  }
  const FiniteWord head = stage_word(spec, n);
  RankOneSpec rest = spec.suffix_from(n);
  std::vector<Stage> prefix;
  if (z / r >= 2) {
    std::vector<Count> gaps;
    for (Count j = 1; j < z / r; ++j) gaps.push_back(head.gaps()[static_cast<std::size_t>(r * j - 1)]);
    prefix.emplace_back(z / r, std::move(gaps));
  }
  prefix.insert(prefix.end(), rest.prefix().begin(), rest.prefix().end());
  return RankOneSpec(std::move(prefix), rest.tail());
}

Count min_gap(const RankOneSpec& spec) {
  if (spec.truncated()) throw Error(ErrorKind::DepthExhausted, "minimum gap of a truncated spec is not determined");
  Count best = std::numeric_limits<Count>::max();
  auto scan = [&](const Stage& s) {
    for (Count g : s.gaps) best = std::min(best, g);
  };
  for (const Stage& s : spec.prefix()) scan(s);
  if (const auto* p = std::get_if<Periodic>(&spec.tail())) {
    for (const Stage& s : p->cycle) scan(s);
  } else {
    scan(std::get<Arithmetic>(spec.tail()).base);
  }
  return best;
}

// Membership in A_V.
//
// The claim "L(i) = c[i mod m] whenever i mod m != 0" is pushed through the
// stages one at a time. At stage n (cuts r), indices j = q*r + s with s != 0
// have L = gap s of the stage, which must agree with c[(q*r + s) mod m] for
// every residue of q. Indices j = q*r are handed to the next stage with the
// induced claim over m / gcd(m, r) residues. The claim is settled once m = 1.
// For a periodic tail the pair (stage phase, claim) ranges over a finite set,
// and a repeated pair means every check from there on has already passed.
// For a growing arithmetic tail a claim with m > 1 cannot survive more than
// (max c + 2) stages without m shrinking, so the loop always ends.
Verdict is_in_AV(const RankOneSpec& spec, const FiniteWord& v) {
  Count m = v.zero_count();
  std::vector<Count> c(static_cast<std::size_t>(m));
  for (Count k = 1; k < m; ++k) c[static_cast<std::size_t>(k)] = v.gaps()[static_cast<std::size_t>(k - 1)];

  std::set<std::pair<std::size_t, std::vector<Count>>> seen;
  std::optional<Count> scale = 1;
  for (std::size_t n = 0;; ++n) {
    if (m == 1) return Verdict::yes(v.render());
    if (!spec.has_stage(n))
      return Verdict::unknown(static_cast<Count>(n), "claim unresolved after " + std::to_string(n) + " stages");
    if (auto ph = spec.phase(n)) {
      if (!seen.emplace(*ph, c).second) return Verdict::yes(v.render());
    } else if (n > spec.prefix().size() + 64 * static_cast<std::size_t>(*std::max_element(c.begin(), c.end()) + 2)) {
      return Verdict::unknown(static_cast<Count>(n), "iteration bound exceeded");
    }
    const Count r = spec.stage_cuts(n);
    const Count next_m = m / std::gcd(m, r);
    for (Count s = 1; s < r; ++s) {
      const Count gap = spec.stage_gap(n, static_cast<std::size_t>(s - 1));
      for (Count q = 0; q < next_m; ++q) {
        const Count idx = (q * r + s) % m;
        if (idx != 0 && gap != c[static_cast<std::size_t>(idx)]) {
          auto at = checked_mul(scale, q * r + s);
          return Verdict::no(words_gap_message(at.value_or(-1), gap, c[static_cast<std::size_t>(idx)]), at);
        }
      }
    }
    std::vector<Count> next(static_cast<std::size_t>(next_m));
    for (Count j = 1; j < next_m; ++j) next[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>((j * r) % m)];
    c = std::move(next);
    m = next_m;
    scale = checked_mul(scale, r);
  }
}

namespace {

// Length of the constant run L(p) = L(2p) = ... starting at k = 1, or nullopt
// when the run never ends (only possible for degenerate words).
std::optional<Count> leading_run(const RankOneSpec& spec, Count p, SpecClass cls) {
  const Count first = gap_function(spec, p);
  Count limit = kMaxRunScan;
  if (cls == SpecClass::Degenerate) {
    // L is purely periodic with period Z_P, so k -> L(kp) has period Z_P / gcd(Z_P, p).
    const Count period = stage_zero_count(spec, spec.prefix().size());
    limit = period / std::gcd(period, p) + 1;
  }
  for (Count k = 2; k <= limit; ++k) {
    auto idx = checked_mul(k, p);
    if (!idx) throw Error(ErrorKind::DepthExhausted, "run scan overflows");
    if (gap_function(spec, *idx) != first) return k - 1;
  }
  if (cls == SpecClass::Degenerate) return std::nullopt;
  throw Error(ErrorKind::DepthExhausted, "run of L(k*" + std::to_string(p) + ") longer than the scan limit");
}

}  // namespace

// v is fundamental iff v is in A_V and no u < v < u' in A_V has u' built simply
// from u. For a fixed u (p zeros), u' (R zeros) is built simply from u iff
// L(p) = L(2p) = ... = L(R - p); with K the length of that leading run the
// candidates are the multiples R of r with R <= (K + 1) p.
Verdict is_fundamental(const RankOneSpec& spec, const FiniteWord& v) {
  Verdict in = is_in_AV(spec, v);
  if (!in.is_yes()) return in;
  const Count r = v.zero_count();
  const SpecClass cls = classify(spec);
  bool unresolved = false;
  try {
    for (Count p = 1; p < r; ++p) {
      if (r % p != 0) continue;
      const FiniteWord u = prefix_with_zeros(v, p);
      Verdict below = is_in_AV(spec, u);
      if (below.is_unknown()) unresolved = true;
      if (!below.is_yes()) continue;
      const auto run = leading_run(spec, p, cls);
      if (!run) {
        return Verdict::no(u.render() + " is built simply into arbitrarily long elements of A_V");
      }
      for (Count big = 2 * r; big <= (*run + 1) * p; big += r) {
        const FiniteWord upper = prefix_word(spec, big);
        Verdict above = is_in_AV(spec, upper);
        if (above.is_yes())
          return Verdict::no(u.render() + " < " + v.render() + " < " + upper.render() + " with the outer pair built simply");
        if (above.is_unknown()) unresolved = true;
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DepthExhausted) throw;
    return Verdict::unknown(static_cast<Count>(spec.prefix().size()), e.what());
  }
  if (unresolved) return Verdict::unknown(static_cast<Count>(spec.prefix().size()), "some sandwich candidates are undecided");
  return Verdict::yes(v.render());
}

namespace {

// Least fundamental word strictly above v, or nullopt once candidate prefixes
// exceed max_length. For non-degenerate V a fundamental word always exists
// above v, so the scan terminates.
std::optional<FiniteWord> next_fundamental_bounded(const RankOneSpec& spec, const FiniteWord& v, std::optional<Count> max_length) {
  const Count r = v.zero_count();
  for (Count j = 2;; ++j) {
    auto zeros = checked_mul(r, j);
    if (!zeros || *zeros > kMaxMaterializedZeros)
      throw Error(ErrorKind::DepthExhausted, "no fundamental word found above " + v.render());
    const FiniteWord candidate = prefix_word(spec, *zeros);
    if (max_length && candidate.length() > *max_length) return std::nullopt;
    Verdict f = is_fundamental(spec, candidate);
    if (f.is_yes()) return candidate;
    if (f.is_unknown()) throw Error(ErrorKind::DepthExhausted, "cannot decide fundamentality of " + candidate.render() + ": " + f.detail);
  }
}

void require_nondegenerate(const RankOneSpec& spec) {
  if (classify(spec) == SpecClass::Degenerate) throw Error(ErrorKind::DegenerateSpec, "V is periodic");
}

}  // namespace

FiniteWord next_fundamental(const RankOneSpec& spec, const FiniteWord& v) {
  require_nondegenerate(spec);
  return *next_fundamental_bounded(spec, v, std::nullopt);
}

std::vector<FiniteWord> canonical_sequence(const RankOneSpec& spec, std::size_t count) {
  require_nondegenerate(spec);
  std::vector<FiniteWord> out;
  if (count == 0) return out;
  out.emplace_back();
  while (out.size() < count) out.push_back(*next_fundamental_bounded(spec, out.back(), std::nullopt));
  return out;
}

std::vector<FiniteWord> canonical_sequence_up_to_length(const RankOneSpec& spec, Count max_length) {
  require_nondegenerate(spec);
  std::vector<FiniteWord> out;
  if (max_length < 1) return out;
  out.emplace_back();
  while (auto next = next_fundamental_bounded(spec, out.back(), max_length)) out.push_back(std::move(*next));
  return out;
}

const char* to_string(SpecClass c) noexcept {
  switch (c) {
    case SpecClass::Degenerate: return "degenerate";
    case SpecClass::Minimal: return "minimal";
    case SpecClass::NonMinimal: return "non-minimal";
    case SpecClass::Unknown: return "unknown";
  }
  return "unknown";
}

// Degenerate iff the tail stages all use one common gap value. If V is
// periodic with minimal block u and joiner a, every long stage word is built
// simply from u with joiner a, so every late stage has all gaps equal to a;
// conversely such a tail gives V = v_P 1^a v_P 1^a ...
// 1-runs of V are exactly the stage gap values (stage words start and end
// with 0), so V has bounded runs unless an arithmetic tail grows.
SpecClass classify(const RankOneSpec& spec) {
  if (spec.truncated()) return SpecClass::Unknown;
  if (spec.growing()) return SpecClass::NonMinimal;
  std::vector<const Stage*> tail;
  if (const auto* p = std::get_if<Periodic>(&spec.tail())) {
    for (const Stage& s : p->cycle) tail.push_back(&s);
  } else {
    tail.push_back(&std::get<Arithmetic>(spec.tail()).base);
  }
  const Count a = tail.front()->gaps.front();
  const bool constant = std::all_of(tail.begin(), tail.end(), [a](const Stage* s) {
    return std::all_of(s->gaps.begin(), s->gaps.end(), [a](Count g) { return g == a; });
  });
  return constant ? SpecClass::Degenerate : SpecClass::Minimal;
}

Verdict is_nondegenerate(const RankOneSpec& spec) {
  switch (classify(spec)) {
    case SpecClass::Degenerate: return Verdict::no("V is periodic: the tail stages share one gap value");
    case SpecClass::Unknown:
      return Verdict::unknown(static_cast<Count>(spec.prefix().size()), "truncated after " + std::to_string(spec.prefix().size()) + " stages");
    default: return Verdict::yes(to_string(classify(spec)));
  }
}

namespace {

Verdict scan_for_mismatch(const RankOneSpec& a, Count oa, const RankOneSpec& b, Count ob, Count upto, bool exhaustive_means_equal) {
  try {
    for (Count i = 1; i <= upto; ++i) {
      const Count x = gap_function(a, i) + oa;
      const Count y = gap_function(b, i) + ob;
      if (x != y) return Verdict::no("gap " + std::to_string(i) + ": " + std::to_string(x) + " vs " + std::to_string(y), i);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DepthExhausted) throw;
    return Verdict::unknown(upto, e.what());
  }
  if (exhaustive_means_equal) return Verdict::yes("gap functions agree on a full common period");
  return Verdict::no("one word is periodic and the other is not");
}

}  // namespace

// Equality of shifted gap functions.
//
// Stage streams of a and b are consumed in lockstep: `head` holds the gaps of
// b at the current scale that have been materialized but not yet matched. For
// each stage of a (cuts r), b stages are merged into the head until its zero
// count M is a multiple of r; then every index below M that is not a multiple
// of r is compared, and the head is compressed to the indices that are. The
// state (phase of a, phase of b, head) determines all remaining comparisons,
// so a repeated state proves equality.
Verdict same_gaps(const RankOneSpec& a, Count oa, const RankOneSpec& b, Count ob) {
  const SpecClass ca = classify(a);
  const SpecClass cb = classify(b);
  if (ca == SpecClass::Degenerate && cb == SpecClass::Degenerate) {
    const Count pa = stage_zero_count(a, a.prefix().size());
    const Count pb = stage_zero_count(b, b.prefix().size());
    const Count period = std::lcm(pa, pb);
    if (period > kMaxMaterializedZeros) return Verdict::unknown(period, "common period too large");
    return scan_for_mismatch(a, oa, b, ob, period, true);
  }
  if (ca == SpecClass::Degenerate || cb == SpecClass::Degenerate ||
      (ca != SpecClass::Unknown && cb != SpecClass::Unknown && (ca == SpecClass::NonMinimal) != (cb == SpecClass::NonMinimal))) {
    return scan_for_mismatch(a, oa, b, ob, kMaxRunScan, false);
  }

  std::set<std::tuple<std::size_t, std::size_t, std::vector<Count>>> seen;
  std::vector<Count> head;
  std::optional<Count> scale = 1;
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t step = 0; step < kMaxCompareSteps; ++step) {
    const auto pa = a.phase(ia);
    const auto pb = b.phase(ib);
    if (pa && pb && !a.truncated() && !b.truncated()) {
      if (!seen.emplace(*pa, *pb, head).second) return Verdict::yes("stage streams re-enter a compared state");
    } else if (head.empty() && oa == ob && !a.truncated() && !b.truncated() && a.suffix_from(ia) == b.suffix_from(ib)) {
      return Verdict::yes("identical stage streams");
    }
    if (!a.has_stage(ia)) return Verdict::unknown(static_cast<Count>(ia), "first spec truncated");
    const Count r = a.stage_cuts(ia);
    Count checked = 0;
    auto check = [&]() -> std::optional<Verdict> {
      const Count m = static_cast<Count>(head.size()) + 1;
      for (Count i = checked + 1; i < m; ++i) {
        if (i % r == 0) continue;
        const Count x = a.stage_gap(ia, static_cast<std::size_t>(i % r - 1)) + oa;
        const Count y = head[static_cast<std::size_t>(i - 1)] + ob;
        if (x != y) {
          auto at = checked_mul(scale, i);
          return Verdict::no("gap " + (at ? std::to_string(*at) : std::string("(overflow)")) + ": " + std::to_string(x) +
                                 " vs " + std::to_string(y),
                             at);
        }
      }
      checked = m - 1;
      return std::nullopt;
    };
    if (auto v = check()) return *v;
    while ((static_cast<Count>(head.size()) + 1) % r != 0) {
      if (!b.has_stage(ib)) return Verdict::unknown(static_cast<Count>(ib), "second spec truncated");
      const Stage sb = b.stage(ib);
      if ((static_cast<Count>(head.size()) + 1) * sb.cuts > kMaxMaterializedZeros)
        return Verdict::unknown(static_cast<Count>(ib), "unmatched stage block too large");
      head = detail::build_gaps(head, sb.gaps);
      ++ib;
      if (auto v = check()) return *v;
    }
    const Count m = static_cast<Count>(head.size()) + 1;
    std::vector<Count> next;
    next.reserve(static_cast<std::size_t>(m / r));
    for (Count j = 1; j < m / r; ++j) next.push_back(head[static_cast<std::size_t>(r * j - 1)]);
    head = std::move(next);
    scale = checked_mul(scale, r);
    ++ia;
  }
  return Verdict::unknown(static_cast<Count>(kMaxCompareSteps), "comparison step limit reached");
}

}  // namespace rank1
