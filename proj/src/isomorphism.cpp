#include "rank1/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "rank1/error.hpp"

namespace rank1 {

namespace {

void require_nondegenerate(const RankOneSpec& spec, const char* which) {
  if (classify(spec) == SpecClass::Degenerate) throw Error(ErrorKind::DegenerateSpec, std::string(which) + " is periodic");
}

struct Candidate {
  FiniteWord word;
  Count norm = 0;
};

// Fundamental words u with |u| + (least gap of V over u) <= k.
std::vector<Candidate> candidates(const RankOneSpec& spec, Count k) {
  std::vector<Candidate> out;
  for (FiniteWord& u : canonical_sequence_up_to_length(spec, k)) {
    const Count norm = u.length() + min_gap(derived_over(spec, u.zero_count()));
    if (norm <= k) out.push_back({std::move(u), norm});
  }
  return out;
}

std::string describe(const ReplacementScheme& s, Count norm) {
  return "norm=" + std::to_string(norm) + " v=" + s.v.render() + " w=" + s.w.render();
}

// Runs `visit` on candidate pairs of equal norm in (norm, |v|, |w|) order
// until it returns true. Returns false if some pair was undecided.
template <typename Visit>
bool for_each_scheme(const RankOneSpec& V, const RankOneSpec& W, Count k, Visit visit) {
  const auto cv = candidates(V, k);
  const auto cw = candidates(W, k);
  std::vector<std::tuple<Count, Count, Count, std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < cv.size(); ++i)
    for (std::size_t j = 0; j < cw.size(); ++j)
      if (cv[i].norm == cw[j].norm) order.emplace_back(cv[i].norm, cv[i].word.length(), cw[j].word.length(), i, j);
  std::sort(order.begin(), order.end());
  bool complete = true;
  for (const auto& [norm, lv, lw, i, j] : order) {
    const ReplacementScheme s{cv[i].word, cw[j].word};
    const Verdict ok = check_scheme(V, W, s);
    if (ok.is_unknown()) complete = false;
    if (ok.is_yes() && visit(s, norm)) break;
  }
  return complete;
}

bool palindrome(const std::vector<Count>& xs) { return std::equal(xs.begin(), xs.end(), xs.rbegin()); }

}  // namespace

Verdict check_scheme(const RankOneSpec& V, const RankOneSpec& W, const ReplacementScheme& scheme) {
  const Verdict in_v = is_in_AV(V, scheme.v);
  if (in_v.is_no()) return Verdict::no(scheme.v.render() + " is not in A_V: " + in_v.detail);
  const Verdict in_w = is_in_AV(W, scheme.w);
  if (in_w.is_no()) return Verdict::no(scheme.w.render() + " is not in A_W: " + in_w.detail);
  if (in_v.is_unknown()) return in_v;
  if (in_w.is_unknown()) return in_w;
  try {
    Verdict same = same_gaps(derived_over(V, scheme.v.zero_count()), scheme.v.length(), derived_over(W, scheme.w.zero_count()),
                             scheme.w.length());
    if (same.is_no())
      same.detail = "copies of v and w stop starting together after joiner " +
                    (same.index ? std::to_string(*same.index) : std::string("?")) + " (" + same.detail + ")";
    return same;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DepthExhausted) throw;
    return Verdict::unknown(0, e.what());
  }
}

Count scheme_norm(const RankOneSpec& V, const RankOneSpec& W, const ReplacementScheme& scheme) {
  const Verdict ok = check_scheme(V, W, scheme);
  if (!ok.is_yes()) throw Error(ErrorKind::InvalidScheme, "(" + scheme.v.render() + ", " + scheme.w.render() + "): " + ok.detail);
  return scheme.v.length() + min_gap(derived_over(V, scheme.v.zero_count()));
}

ReplacementScheme lift_scheme(const RankOneSpec& V, const RankOneSpec& W, const ReplacementScheme& scheme,
                              const FiniteWord& v_tilde) {
  const Verdict ok = check_scheme(V, W, scheme);
  if (!ok.is_yes()) throw Error(ErrorKind::InvalidScheme, ok.detail);
  if (!is_built_from(v_tilde, scheme.v))
    throw Error(ErrorKind::PrecedenceViolation, v_tilde.render() + " is not built from " + scheme.v.render());
  if (!is_fundamental(V, v_tilde).is_yes())
    throw Error(ErrorKind::PrecedenceViolation, v_tilde.render() + " is not fundamental for V");
  FiniteWord w_tilde;
  try {
    w_tilde = build_same_way(v_tilde, scheme.v, scheme.w);
  } catch (const Error& e) {
    throw Error(ErrorKind::LiftFailure, e.what());
  }
  const ReplacementScheme lifted{v_tilde, w_tilde};
  if (!check_scheme(V, W, lifted).is_yes())
    throw Error(ErrorKind::LiftFailure, "lifted pair is not a scheme: " + describe(lifted, 0));
  if (!is_fundamental(W, w_tilde).is_yes())
    throw Error(ErrorKind::LiftFailure, w_tilde.render() + " is not fundamental for W");
  return lifted;
}

SchemeList enumerate_schemes(const RankOneSpec& V, const RankOneSpec& W, Count k) {
  require_nondegenerate(V, "V");
  require_nondegenerate(W, "W");
  SchemeList out;
  out.complete = for_each_scheme(V, W, k, [&](const ReplacementScheme& s, Count norm) {
    out.schemes.emplace_back(s, norm);
    return false;
  });
  return out;
}

SchemeVerdict similar_k(const RankOneSpec& V, const RankOneSpec& W, Count k) {
  require_nondegenerate(V, "V");
  require_nondegenerate(W, "W");
  SchemeVerdict out;
  bool complete = true;
  try {
    complete = for_each_scheme(V, W, k, [&](const ReplacementScheme& s, Count norm) {
      out.scheme = s;
      out.norm = norm;
      return true;
    });
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DepthExhausted) throw;
    complete = false;
  }
  if (out.scheme) out.verdict = Verdict::yes(describe(*out.scheme, out.norm));
  else if (complete) out.verdict = Verdict::no("no scheme of fundamental words has norm <= " + std::to_string(k));
  else out.verdict = Verdict::unknown(k, "some candidate schemes were undecided");
  return out;
}

SchemeVerdict decide_isomorphism(const RankOneSpec& V, const RankOneSpec& W, Count max_norm) {
  SchemeVerdict out = similar_k(V, W, max_norm);
  if (out.verdict.is_no()) out.verdict = Verdict::unknown(max_norm, "no scheme with norm <= " + std::to_string(max_norm));
  return out;
}

RankOneSpec e0_encode(const std::vector<int>& bits, const TailPolicy& tail) {
  const auto* p = std::get_if<Periodic>(&tail);
  if (!p) throw Error(ErrorKind::InvalidTail, "an E0 tail must be a periodic cycle of E0 stages");
  for (const Stage& s : p->cycle)
    if (!(s == Stage(3, {1, 0}) || s == Stage(3, {0, 1})))
      throw Error(ErrorKind::InvalidTail, "E0 tail stages must be stage 3 [1,0] or stage 3 [0,1]");
  std::vector<Stage> prefix;
  for (int b : bits) {
    if (b != 0 && b != 1) throw Error(ErrorKind::InvalidStage, "E0 bits must be 0 or 1");
    prefix.push_back(b == 0 ? Stage(3, {1, 0}) : Stage(3, {0, 1}));
  }
  return RankOneSpec(std::move(prefix), tail);
}

RankOneSpec e0_encode(const std::vector<int>& bits, const std::vector<int>& tail_cycle) {
  Periodic p;
  for (int b : tail_cycle) p.cycle.push_back(b == 0 ? Stage(3, {1, 0}) : Stage(3, {0, 1}));
  return e0_encode(bits, p);
}

std::optional<E0Bits> e0_decode(const RankOneSpec& spec) {
  auto bit = [](const Stage& s) -> std::optional<int> {
    if (s == Stage(3, {1, 0})) return 0;
    if (s == Stage(3, {0, 1})) return 1;
    return std::nullopt;
  };
  const auto* p = std::get_if<Periodic>(&spec.tail());
  if (!p) return std::nullopt;
  E0Bits out;
  for (const Stage& s : spec.prefix()) {
    auto b = bit(s);
    if (!b) return std::nullopt;
    out.prefix.push_back(*b);
  }
  for (const Stage& s : p->cycle) {
    auto b = bit(s);
    if (!b) return std::nullopt;
    out.cycle.push_back(*b);
  }
  return out;
}

// For E0 words the only schemes are (v_m, w_m) with the bit streams equal from
// m on, so the streams decide isomorphism outright.
SchemeVerdict decide_isomorphism_e0(const RankOneSpec& V, const RankOneSpec& W) {
  const auto a = e0_decode(V);
  const auto b = e0_decode(W);
  if (!a || !b) throw Error(ErrorKind::InvalidTail, "the E0 decision needs two E0 words");
  auto bit = [](const E0Bits& e, std::size_t m) {
    return m < e.prefix.size() ? e.prefix[m] : e.cycle[(m - e.prefix.size()) % e.cycle.size()];
  };
  const std::size_t start = std::max(a->prefix.size(), b->prefix.size());
  const std::size_t period = std::lcm(a->cycle.size(), b->cycle.size());
  SchemeVerdict out;
  for (std::size_t m = start; m < start + period; ++m) {
    if (bit(*a, m) != bit(*b, m)) {
      out.verdict = Verdict::no("bit streams differ at stage " + std::to_string(m) + " and every " + std::to_string(period) +
                                    " stages after it",
                                static_cast<Count>(m));
      return out;
    }
  }
  std::size_t n = 0;
  for (std::size_t m = 0; m < start; ++m)
    if (bit(*a, m) != bit(*b, m)) n = m + 1;
  out.scheme = ReplacementScheme{stage_word(V, n), stage_word(W, n)};
  out.norm = scheme_norm(V, W, *out.scheme);
  out.verdict = Verdict::yes(describe(*out.scheme, out.norm));
  return out;
}

std::string Dyadic::render() const { return exponent ? "1/2^" + std::to_string(*exponent) : "0"; }

bool operator<(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  return *a.exponent > *b.exponent;
}

Dyadic ultrametric_distance(const RankOneSpec& A, const RankOneSpec& B) {
  require_nondegenerate(A, "A");
  require_nondegenerate(B, "B");
  const Verdict same = same_word(A, B);
  if (same.is_yes()) return {};
  if (same.is_unknown()) throw Error(ErrorKind::DepthExhausted, "cannot decide whether the words are equal: " + same.detail);
  FiniteWord common;
  for (;;) {
    const FiniteWord na = next_fundamental(A, common);
    const FiniteWord nb = next_fundamental(B, common);
    if (na != nb) break;
    common = na;
  }
  return Dyadic{common.length()};
}

RankOneSpec reverse_spec(const RankOneSpec& spec) {
  auto flip = [](Stage s) {
    std::reverse(s.gaps.begin(), s.gaps.end());
    return s;
  };
  std::vector<Stage> prefix;
  for (const Stage& s : spec.prefix()) prefix.push_back(flip(s));
  TailPolicy tail = spec.tail();
  if (auto* p = std::get_if<Periodic>(&tail)) {
    for (Stage& s : p->cycle) s = flip(s);
  } else if (auto* a = std::get_if<Arithmetic>(&tail)) {
    a->base = flip(a->base);
    std::reverse(a->increment.begin(), a->increment.end());
  }
  return RankOneSpec(std::move(prefix), std::move(tail));
}

// The scheme (v_n, reverse(v_n)) is valid iff every later stage word is built
// from v_n with palindromic joiners, which holds iff every stage from n on has
// palindromic gaps. Tail stages repeat (or grow linearly), so the builds are
// eventually symmetric iff all tail stages are.
InverseReport decide_inverse_isomorphic(const RankOneSpec& spec, Count max_norm) {
  require_nondegenerate(spec, "V");
  InverseReport out;
  const Count p = static_cast<Count>(spec.prefix().size());
  if (const auto* c = std::get_if<Periodic>(&spec.tail())) {
    const auto bad = std::find_if(c->cycle.begin(), c->cycle.end(), [](const Stage& s) { return !s.symmetric(); });
    out.symmetric = bad == c->cycle.end()
                        ? Verdict::yes("every tail stage has palindromic gaps")
                        : Verdict::no("tail stage " + std::to_string(p + (bad - c->cycle.begin())) + " has gaps that are not a palindrome");
  } else if (const auto* a = std::get_if<Arithmetic>(&spec.tail())) {
    out.symmetric = a->base.symmetric() && palindrome(a->increment)
                        ? Verdict::yes("every tail stage has palindromic gaps")
                        : Verdict::no("all but at most one tail stage have gaps that are not a palindrome");
  } else {
    out.symmetric = Verdict::unknown(p, "truncated after " + std::to_string(p) + " stages");
  }
  out.search = decide_isomorphism(spec, reverse_spec(spec), max_norm);
  out.combined = out.symmetric.is_unknown() ? out.search.verdict : out.symmetric;
  return out;
}

}  // namespace rank1
