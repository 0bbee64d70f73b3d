#include "rank1/expectedness.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

#include "rank1/error.hpp"

namespace rank1 {

namespace {

constexpr Count kMaxRunZeros = Count{1} << 22;

Count count_zeros(std::string_view s, Count from, Count to) {
  from = std::max<Count>(from, 0);
  to = std::min<Count>(to, static_cast<Count>(s.size()));
  if (from >= to) return 0;
  return std::count(s.begin() + from, s.begin() + to, '0');
}

bool occurs_at(const std::string& symbols, Count i, const std::string& v) {
  return i >= 0 && i + static_cast<Count>(v.size()) <= static_cast<Count>(symbols.size()) &&
         symbols.compare(static_cast<std::size_t>(i), v.size(), v) == 0;
}

void require_occurrence(const Window& window, Count i, const FiniteWord& v) {
  if (!occurs_at(window.symbols, i, v.render()))
    throw Error(ErrorKind::NoOccurrence, v.render() + " does not occur at " + std::to_string(i));
}

// Gap values of stages n, n+1, ... of `spec`. For a growing tail, values above
// `cap` are collapsed into the single value cap + 1.
std::set<Count> joiner_values(const RankOneSpec& spec, std::size_t n, Count cap) {
  std::set<Count> out;
  const std::size_t p = spec.prefix().size();
  for (std::size_t m = n; m < p; ++m)
    for (Count g : spec.prefix()[m].gaps) out.insert(g);
  if (const auto* c = std::get_if<Periodic>(&spec.tail())) {
    for (const Stage& s : c->cycle) out.insert(s.gaps.begin(), s.gaps.end());
    return out;
  }
  const auto& a = std::get<Arithmetic>(spec.tail());
  const Count k0 = n > p ? static_cast<Count>(n - p) : 0;
  for (std::size_t s = 0; s < a.base.gaps.size(); ++s) {
    if (a.increment[s] == 0) {
      out.insert(a.base.gaps[s] + k0 * a.increment[s]);
      continue;
    }
    Count g = a.base.gaps[s] + k0 * a.increment[s];
    for (; g <= cap; g += a.increment[s]) out.insert(g);
    out.insert(cap + 1);
  }
  return out;
}

}  // namespace

Window parse_window(std::string_view literal) {
  const auto colon = literal.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "window literal needs '<anchor>:<bits>'");
  const std::string_view head = literal.substr(0, colon);
  Window w;
  w.symbols = std::string(literal.substr(colon + 1));
  if (w.symbols.find_first_not_of("01") != std::string::npos)
    throw Error(ErrorKind::ParseError, "window symbols must be 0 or 1");
  auto number = [&](std::string_view text) {
    Count value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
      throw Error(ErrorKind::ParseError, "bad anchor position '" + std::string(text) + "'");
    return value;
  };
  if (head == "float") {
    w.anchor = Floating{};
  } else if (head.rfind("V@", 0) == 0) {
    const Count off = number(head.substr(2));
    if (off < 0) throw Error(ErrorKind::ParseError, "V offset must be nonnegative");
    w.anchor = AnchoredInV{off};
  } else if (head.rfind("first@", 0) == 0) {
    w.anchor = FirstZeroAt{number(head.substr(6))};
  } else if (head.rfind("last@", 0) == 0) {
    w.anchor = LastZeroAt{number(head.substr(5))};
  } else {
    throw Error(ErrorKind::ParseError, "unknown window anchor '" + std::string(head) + "'");
  }
  const Count len = static_cast<Count>(w.symbols.size());
  if (const auto* f = std::get_if<FirstZeroAt>(&w.anchor)) {
    if (count_zeros(w.symbols, 0, f->k) > 0 || (f->k >= 0 && f->k < len && w.symbols[f->k] != '0'))
      throw Error(ErrorKind::ParseError, "window contradicts its first-zero anchor");
  } else if (const auto* l = std::get_if<LastZeroAt>(&w.anchor)) {
    if (count_zeros(w.symbols, l->k + 1, len) > 0 || (l->k >= 0 && l->k < len && w.symbols[l->k] != '0'))
      throw Error(ErrorKind::ParseError, "window contradicts its last-zero anchor");
  }
  return w;
}

std::string render_window(const Window& window) {
  std::string head;
  if (const auto* a = std::get_if<AnchoredInV>(&window.anchor)) head = "V@" + std::to_string(a->offset);
  else if (const auto* f = std::get_if<FirstZeroAt>(&window.anchor)) head = "first@" + std::to_string(f->k);
  else if (const auto* l = std::get_if<LastZeroAt>(&window.anchor)) head = "last@" + std::to_string(l->k);
  else head = "float";
  return head + ":" + window.symbols;
}

// The sequence L(r), L(2r), ... is the gap function of the derived word V'.
// At level n it reads  b 1^g b 1^g' b ...  with b the gaps of stage word n of
// V' and g, g', ... gap values of later stages. Once the longest run found in
// b g b (over all joiner values g) is shorter than Z_n, no run can cover a
// whole block, so every run lies inside one such b g b.
Count max_equal_run(const RankOneSpec& spec, Count r) {
  if (spec.truncated()) throw Error(ErrorKind::DepthExhausted, "run bound needs a periodic or arithmetic tail");
  if (classify(spec) == SpecClass::Degenerate) throw Error(ErrorKind::DegenerateSpec, "V is periodic");
  const RankOneSpec d = derived_over(spec, r);
  for (std::size_t n = 1;; ++n) {
    const Count z = stage_zero_count(d, n);
    if (z > kMaxRunZeros) throw Error(ErrorKind::DepthExhausted, "run bound search exceeded its size limit");
    const FiniteWord block = stage_word(d, n);
    const auto b = block.gaps();
    Count inner = 1;
    Count run = 1;
    for (std::size_t i = 1; i < b.size(); ++i) {
      run = b[i] == b[i - 1] ? run + 1 : 1;
      inner = std::max(inner, run);
    }
    Count lead = 1;
    while (lead < static_cast<Count>(b.size()) && b[static_cast<std::size_t>(lead)] == b.front()) ++lead;
    Count trail = 1;
    while (trail < static_cast<Count>(b.size()) && b[b.size() - 1 - static_cast<std::size_t>(trail)] == b.back()) ++trail;
    Count best = inner;
    for (Count g : joiner_values(d, n, *std::max_element(b.begin(), b.end())))
      best = std::max(best, (b.back() == g ? trail : 0) + 1 + (b.front() == g ? lead : 0));
    if (best < z) return best;
  }
}

Count consecutiveness_bound(const RankOneSpec& spec, const FiniteWord& v) {
  const Verdict in = is_in_AV(spec, v);
  if (!in.is_yes()) throw Error(ErrorKind::NotADivisor, v.render() + " is not in A_V: " + in.detail);
  return max_equal_run(spec, v.zero_count()) + 1;
}

// Reads alpha = 0 1^{b_1} 0 1^{b_2} ... over the 2t|v| symbols at i. If some
// b_l >= |v| the occurrence is expected iff l = 0 mod r; otherwise it is
// expected iff b_r, b_2r, ..., b_tr are not all equal.
OccurrenceTag classify_occurrence_local(const Window& window, Count i, const FiniteWord& v, Count t) {
  require_occurrence(window, i, v);
  OccurrenceTag tag{i, Answer::Unknown};
  const Count need = 2 * t * v.length();
  if (i + need > static_cast<Count>(window.symbols.size())) return tag;
  const std::string_view alpha = std::string_view(window.symbols).substr(static_cast<std::size_t>(i), static_cast<std::size_t>(need));
  const Count r = v.zero_count();
  std::vector<Count> b;
  bool last_complete = true;
  for (std::size_t pos = 1; pos < alpha.size();) {
    std::size_t end = pos;
    while (end < alpha.size() && alpha[end] == '1') ++end;
    const Count run = static_cast<Count>(end - pos);
    b.push_back(run);
    if (run >= v.length()) {
      tag.expected = static_cast<Count>(b.size()) % r == 0 ? Answer::Yes : Answer::No;
      return tag;
    }
    last_complete = end < alpha.size();
    pos = end + 1;
  }
  if (static_cast<Count>(b.size()) < t * r || (static_cast<Count>(b.size()) == t * r && !last_complete)) return tag;
  bool all_equal = true;
  for (Count k = 2; k <= t; ++k) all_equal = all_equal && b[static_cast<std::size_t>(k * r - 1)] == b[static_cast<std::size_t>(r - 1)];
  tag.expected = all_equal ? Answer::No : Answer::Yes;
  return tag;
}

OccurrenceTag classify_occurrence_anchored(const Window& window, Count i, const FiniteWord& v, const RankOneSpec* spec) {
  require_occurrence(window, i, v);
  const std::string& s = window.symbols;
  const Count len = static_cast<Count>(s.size());
  const Count r = v.zero_count();
  Count zeros = 0;
  if (const auto* a = std::get_if<AnchoredInV>(&window.anchor)) {
    if (!spec) throw Error(ErrorKind::InsufficientContext, "a V anchor needs the spec");
    zeros = count_zeros(expand_prefix(*spec, a->offset), 0, a->offset) + count_zeros(s, 0, i);
  } else if (const auto* f = std::get_if<FirstZeroAt>(&window.anchor)) {
    if (f->k < 0) throw Error(ErrorKind::InsufficientContext, "first zero lies left of the window");
    zeros = count_zeros(s, f->k, i);
  } else if (const auto* l = std::get_if<LastZeroAt>(&window.anchor)) {
    if (l->k >= len) throw Error(ErrorKind::InsufficientContext, "last zero lies right of the window");
    zeros = count_zeros(s, i, l->k + 1);
  } else {
    throw Error(ErrorKind::InsufficientContext, "floating window has no anchor");
  }
  return {i, zeros % r == 0 ? Answer::Yes : Answer::No};
}

WindowDecomposition decompose_window(const Window& window, const FiniteWord& v, const Governing& governing) {
  const std::string& s = window.symbols;
  const std::string vs = v.render();
  const Count len = static_cast<Count>(s.size());
  const Count m = v.length();
  const Count r = v.zero_count();

  WindowDecomposition out;
  for (Count i = 0; i + m <= len; ++i)
    if (occurs_at(s, i, vs)) out.tags.push_back({i, Answer::Unknown});

  Count zeros_before = 0;
  Count last_zero_before = 0;  // window index of the last zero of V left of the window
  const auto* anchored = std::get_if<AnchoredInV>(&window.anchor);
  if (anchored && governing.spec) {
    const std::string prefix = expand_prefix(*governing.spec, anchored->offset + len);
    if (prefix.compare(static_cast<std::size_t>(anchored->offset), std::string::npos, s) != 0)
      throw Error(ErrorKind::CoverageFailure, "window symbols differ from V at the stated offset");
    zeros_before = count_zeros(prefix, 0, anchored->offset);
    if (anchored->offset > 0)
      last_zero_before = static_cast<Count>(prefix.rfind('0', static_cast<std::size_t>(anchored->offset - 1))) - anchored->offset;
  }
  const bool counting = std::holds_alternative<FirstZeroAt>(window.anchor) || std::holds_alternative<LastZeroAt>(window.anchor) ||
                        (anchored && governing.spec);
  Count t = governing.t;
  bool t_ready = t > 0;
  for (OccurrenceTag& tag : out.tags) {
    if (anchored && governing.spec) {
      tag.expected = (zeros_before + count_zeros(s, 0, tag.position)) % r == 0 ? Answer::Yes : Answer::No;
      continue;
    }
    if (counting) {
      try {
        tag = classify_occurrence_anchored(window, tag.position, v);
        continue;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InsufficientContext) throw;
      }
    }
    if (!t_ready && governing.spec) {
      t = consecutiveness_bound(*governing.spec, v);
      t_ready = true;
    }
    if (t_ready) tag = classify_occurrence_local(window, tag.position, v, t);
  }

  const Count total_zeros = count_zeros(s, 0, len);
  out.coverage.zeros = total_zeros;
  // Seed the tiling with one expected copy: a classified occurrence, or the
  // copy through a zero (possibly outside the window) whose index within its
  // copy is fixed by the anchor.
  std::optional<Count> seed;
  const auto* first = std::get_if<FirstZeroAt>(&window.anchor);
  const auto* last = std::get_if<LastZeroAt>(&window.anchor);
  auto first_yes = std::find_if(out.tags.begin(), out.tags.end(), [](const OccurrenceTag& x) { return x.expected == Answer::Yes; });
  if (first_yes != out.tags.end()) {
    seed = first_yes->position;
  } else {
    Count j = total_zeros > 0 ? static_cast<Count>(s.find('0')) : 0;
    std::optional<Count> q;  // zero j is zero q of its copy
    if (total_zeros > 0) {
      if (anchored && governing.spec) q = zeros_before % r;
      else if (first && first->k >= 0) q = 0;
      else if (last && last->k < len && last->k >= j) q = (r - count_zeros(s, j, last->k + 1) % r) % r;
    } else if (anchored && governing.spec && zeros_before > 0) {
      j = last_zero_before;
      q = (zeros_before - 1) % r;
    } else if (first && first->k >= len) {
      j = first->k;
      q = 0;
    } else if (last && last->k < 0) {
      j = last->k;
      q = r - 1;
    }
    if (q) {
      Count at = 0;
      for (Count z = 0; z < *q; ++z) at += 1 + v.gaps()[static_cast<std::size_t>(z)];
      seed = j - at;
    }
  }
  if (!seed) {
    // A run of 1s longer than every run inside v lies between copies.
    const auto g = v.gaps();
    out.coverage.determined = total_zeros == 0 && (g.empty() || len > *std::max_element(g.begin(), g.end()));
    return out;
  }

  // Expected copies tile the zeros: the zero after a copy starts the next one
  // and the zero before it ends the previous one.
  auto fail = [](Count at, const char* what) {
    throw Error(ErrorKind::CoverageFailure, std::string(what) + " at " + std::to_string(at));
  };
  {
    const Count from = std::max<Count>(*seed, 0);
    const Count to = std::min(*seed + m, len);
    if (from < to && s.compare(static_cast<std::size_t>(from), static_cast<std::size_t>(to - from), vs, static_cast<std::size_t>(from - *seed),
                  static_cast<std::size_t>(to - from)) != 0)
      fail(from, "window does not match the anchored copy of v");
  }
  std::vector<Count> starts{*seed};
  for (Count cur = *seed;;) {
    const auto nz = s.find('0', static_cast<std::size_t>(std::max<Count>(cur + m, 0)));
    if (nz == std::string::npos) break;
    const Count k = static_cast<Count>(nz);
    const Count visible = std::min(m, len - k);
    if (s.compare(nz, static_cast<std::size_t>(visible), vs, 0, static_cast<std::size_t>(visible)) != 0)
      fail(k, "zero not covered by an expected copy");
    starts.push_back(k);
    if (visible < m) break;
    cur = k;
  }
  for (Count cur = *seed; cur > 0;) {
    const auto pz = s.rfind('0', static_cast<std::size_t>(cur - 1));
    if (pz == std::string::npos) break;
    const Count start = static_cast<Count>(pz) - m + 1;
    const Count from = std::max<Count>(start, 0);
    if (s.compare(static_cast<std::size_t>(from), static_cast<std::size_t>(pz + 1 - from), vs,
                  static_cast<std::size_t>(from - start), std::string::npos) != 0)
      fail(static_cast<Count>(pz), "zero not covered by an expected copy");
    starts.push_back(start);
    if (start < 0) break;
    cur = start;
  }
  std::sort(starts.begin(), starts.end());

  for (OccurrenceTag& tag : out.tags) {
    const bool in_chain = std::binary_search(starts.begin(), starts.end(), tag.position);
    if ((tag.expected == Answer::Yes && !in_chain) || (tag.expected == Answer::No && in_chain))
      fail(tag.position, "classification disagrees with the tiling");
    tag.expected = in_chain ? Answer::Yes : Answer::No;
  }

  std::vector<int> cover(static_cast<std::size_t>(len), 0);
  for (Count st : starts)
    for (Count j = std::max<Count>(st, 0); j < std::min(st + m, len); ++j) ++cover[static_cast<std::size_t>(j)];
  for (Count j = 0; j < len; ++j) {
    if (s[static_cast<std::size_t>(j)] != '0') continue;
    const bool interior = j >= m - 1 && j <= len - m;
    const int c = cover[static_cast<std::size_t>(j)];
    if (interior) {
      ++out.coverage.interior_zeros;
      if (c == 1) ++out.coverage.interior_covered_once;
      else fail(j, "interior zero covered a wrong number of times");
    }
    const auto owner = std::upper_bound(starts.begin(), starts.end(), j) - 1;
    if (*owner < 0 || *owner + m > len) out.coverage.boundary_zeros.push_back(j);
  }
  out.expected_starts = std::move(starts);
  return out;
}

SchemeImage apply_scheme_window(const Window& window, const ReplacementScheme& scheme, const Governing& governing) {
  const WindowDecomposition dec = decompose_window(window, scheme.v, governing);
  if (!dec.coverage.determined) throw Error(ErrorKind::CoverageFailure, "no occurrence of v could be classified");
  const Count len = static_cast<Count>(window.symbols.size());
  const Count mv = scheme.v.length();
  const Count mw = scheme.w.length();
  const auto& starts = dec.expected_starts;
  for (std::size_t k = 1; k < starts.size(); ++k)
    if (starts[k] - starts[k - 1] < mw)
      throw Error(ErrorKind::SchemeMismatch, "copies of w starting at " + std::to_string(starts[k - 1]) + " and " +
                                                 std::to_string(starts[k]) + " would overlap");

  // Left of the first start the image is known only if the previous copy of w
  // ends before index 0, which holds when |w| <= |v| or there is no previous
  // copy.
  Count lo = 0;
  Count hi = len;
  if (starts.empty()) {
    if (mw > mv) hi = 0;
  } else {
    const auto* first = std::get_if<FirstZeroAt>(&window.anchor);
    const bool has_previous = !(first && first->k == starts.front());
    if (starts.front() >= 0 && mw > mv && has_previous) lo = starts.front();
    hi = std::max(len, starts.back() + mw);
  }
  std::string out(static_cast<std::size_t>(std::max<Count>(hi - lo, 0)), '1');
  const std::string ws = scheme.w.render();
  for (Count st : starts)
    for (Count j = std::max(st, lo); j < std::min(st + mw, hi); ++j) out[static_cast<std::size_t>(j - lo)] = ws[static_cast<std::size_t>(j - st)];

  SchemeImage image;
  image.lo = lo;
  image.window.symbols = std::move(out);
  if (const auto* a = std::get_if<AnchoredInV>(&window.anchor)) image.window.anchor = AnchoredInV{a->offset + lo};
  else if (const auto* f = std::get_if<FirstZeroAt>(&window.anchor)) image.window.anchor = FirstZeroAt{f->k - lo};
  else if (const auto* l = std::get_if<LastZeroAt>(&window.anchor)) image.window.anchor = LastZeroAt{l->k - mv + mw - lo};
  else image.window.anchor = Floating{};
  return image;
}

}  // namespace rank1
