#include "rank1/subshift.hpp"

#include <algorithm>
#include <map>

#include "rank1/error.hpp"

namespace rank1 {

namespace {

constexpr Count kMaxMaterializedLength = Count{1} << 24;

// A length-l subword of V lies in v_n 1^g v_n for some gap value g of a stage
// >= n, once |v_n| >= l: V is a concatenation of copies of v_n separated by
// such gaps, and l symbols meet at most two neighbouring copies. Gaps of at
// least l all yield the same subwords, so they are represented by l.
struct Level {
  std::size_t n = 0;
  std::string block;
  /// Capped gap value -> (stage, slot) of one stage where it occurs.
  std::map<Count, std::pair<std::size_t, std::size_t>> joiners;
  bool complete = true;
};

Level level_for(const RankOneSpec& spec, Count length, std::size_t depth) {
  Level lv;
  while (true) {
    if (!spec.has_stage(lv.n) || lv.n >= depth || stage_length(spec, lv.n) >= length) break;
    ++lv.n;
  }
  const Count len = stage_length(spec, lv.n);
  if (len > kMaxMaterializedLength) throw Error(ErrorKind::DepthExhausted, "stage word too long to search");
  lv.block = stage_word(spec, lv.n).render();
  if (len < length || spec.truncated()) lv.complete = false;
  if (spec.truncated()) return lv;

  auto add = [&](std::size_t stage, std::size_t slot) {
    const Count g = std::min(spec.stage_gap(stage, slot), length);
    lv.joiners.emplace(g, std::make_pair(stage, slot));
  };
  const std::size_t p = spec.prefix().size();
  std::size_t last = std::max(lv.n, p);
  if (const auto* c = std::get_if<Periodic>(&spec.tail())) last += c->cycle.size();
  else last += 1;
  for (std::size_t k = lv.n; k < last; ++k)
    for (std::size_t s = 0; s + 1 < static_cast<std::size_t>(spec.stage_cuts(k)); ++s) add(k, s);
  if (spec.growing()) {
    // Every slot with a positive increment eventually exceeds `length`.
    for (std::size_t k = last; k < last + static_cast<std::size_t>(length) + 1; ++k)
      for (std::size_t s = 0; s + 1 < static_cast<std::size_t>(spec.stage_cuts(k)); ++s) add(k, s);
  }
  return lv;
}

std::string joined(const std::string& block, Count g) { return block + std::string(static_cast<std::size_t>(g), '1') + block; }

// Offset in V of the copy of v_n that ends right before the gap in `slot` of
// `stage`.
Count joiner_offset(const RankOneSpec& spec, std::size_t n, std::size_t stage, std::size_t slot) {
  Count pos = stage_length(spec, stage) * static_cast<Count>(slot + 1);
  for (std::size_t j = 0; j < slot; ++j) pos += spec.stage_gap(stage, j);
  return pos - stage_length(spec, n);
}

}  // namespace

AdmissibilityReport is_admissible(std::string_view word, const RankOneSpec& spec, std::size_t depth) {
  if (word.find_first_not_of("01") != std::string_view::npos) throw Error(ErrorKind::InvalidWord, "symbols must be 0 or 1");
  AdmissibilityReport report;
  const Count l = static_cast<Count>(word.size());
  Level lv;
  try {
    lv = level_for(spec, l, depth);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DepthExhausted) throw;
    report.verdict = Verdict::unknown(static_cast<Count>(depth), e.what());
    return report;
  }
  if (const auto at = lv.block.find(word); at != std::string::npos) {
    report.verdict = Verdict::yes("stage " + std::to_string(lv.n) + " offset " + std::to_string(at));
    report.witness = Occurrence{lv.n, static_cast<Count>(at)};
    return report;
  }
  for (const auto& [g, where] : lv.joiners) {
    const auto at = joined(lv.block, g).find(word);
    if (at == std::string::npos) continue;
    const Count offset = joiner_offset(spec, lv.n, where.first, where.second) + static_cast<Count>(at);
    report.verdict = Verdict::yes("stage " + std::to_string(where.first + 1) + " offset " + std::to_string(offset));
    report.witness = Occurrence{where.first + 1, offset};
    return report;
  }
  if (!lv.complete) {
    report.verdict = Verdict::unknown(static_cast<Count>(lv.n), "not found within stage " + std::to_string(lv.n));
    return report;
  }
  report.verdict = Verdict::no("no occurrence in any v_" + std::to_string(lv.n) + " 1^g v_" + std::to_string(lv.n));
  return report;
}

Language enumerate_subwords(const RankOneSpec& spec, Count length, std::size_t depth) {
  Language out;
  if (length < 0) throw Error(ErrorKind::InvalidWord, "negative length");
  const Level lv = level_for(spec, length, depth);
  out.complete = lv.complete;
  auto collect = [&](const std::string& s) {
    for (std::size_t i = 0; i + static_cast<std::size_t>(length) <= s.size(); ++i) out.words.insert(s.substr(i, static_cast<std::size_t>(length)));
  };
  collect(lv.block);
  for (const auto& [g, where] : lv.joiners) collect(joined(lv.block, g));
  return out;
}

Window special_point_window(const RankOneSpec& spec, SpecialPoint kind, Count radius) {
  if (radius < 0) throw Error(ErrorKind::InvalidWord, "negative radius");
  const SpecClass cls = classify(spec);
  if (cls != SpecClass::NonMinimal)
    throw Error(ErrorKind::KindUnavailable, std::string("special points need a non-minimal word; this one is ") + to_string(cls));
  Window w;
  switch (kind) {
    case SpecialPoint::AllOnes:
      w.symbols.assign(static_cast<std::size_t>(2 * radius + 1), '1');
      w.anchor = Floating{};
      break;
    case SpecialPoint::FirstZero:
      w.symbols = std::string(static_cast<std::size_t>(radius), '1') + expand_prefix(spec, radius + 1);
      w.anchor = FirstZeroAt{radius};
      break;
    case SpecialPoint::LastZero: {
      // The left half is the common suffix of the stage words.
      std::size_t n = 0;
      while (stage_length(spec, n) < radius + 1) ++n;
      const std::string block = stage_word(spec, n).render();
      w.symbols = block.substr(block.size() - static_cast<std::size_t>(radius + 1)) + std::string(static_cast<std::size_t>(radius), '1');
      w.anchor = LastZeroAt{radius};
      break;
    }
  }
  return w;
}

Verdict expected_cylinder_contains(const Window& window, const FiniteWord& v, Count i, const RankOneSpec& spec) {
  const std::string vs = v.render();
  if (i < 0 || i + v.length() > static_cast<Count>(window.symbols.size()) ||
      window.symbols.compare(static_cast<std::size_t>(i), vs.size(), vs) != 0)
    return Verdict::no("no occurrence of " + vs + " at " + std::to_string(i));
  WindowDecomposition dec;
  try {
    dec = decompose_window(window, v, {&spec, 0});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CoverageFailure) throw;
    return Verdict::no(std::string("window is not a sample of a point built from v: ") + e.what());
  }
  for (const OccurrenceTag& tag : dec.tags) {
    if (tag.position != i) continue;
    if (tag.expected == Answer::Yes) return Verdict::yes("expected occurrence at " + std::to_string(i));
    if (tag.expected == Answer::No) return Verdict::no("unexpected occurrence at " + std::to_string(i));
  }
  return Verdict::unknown(static_cast<Count>(window.symbols.size()), "not enough context around " + std::to_string(i));
}

}  // namespace rank1
