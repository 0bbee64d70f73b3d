#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "rank1/error.hpp"
#include "rank1/expectedness.hpp"

using namespace rank1;

namespace {

FiniteWord W(const char* s) { return FiniteWord::parse(s); }

Count scanned_run(const RankOneSpec& spec, Count r, Count terms) {
  Count best = 1;
  Count run = 1;
  for (Count k = 2; k <= terms; ++k) {
    run = gap_function(spec, k * r) == gap_function(spec, (k - 1) * r) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidWord;
}

}  // namespace

TEST_CASE("window literals") {
  const Window w = parse_window("V@12:0100");
  CHECK(w.symbols == "0100");
  CHECK(std::get<AnchoredInV>(w.anchor).offset == 12);
  CHECK(std::get<FirstZeroAt>(parse_window("first@-3:111").anchor).k == -3);
  CHECK(std::get<LastZeroAt>(parse_window("last@1:1011").anchor).k == 1);
  CHECK(std::holds_alternative<Floating>(parse_window("float:").anchor));
  for (const char* s : {"V@0:0100", "first@2:1101", "last@0:0111", "float:0110"}) CHECK(render_window(parse_window(s)) == s);
  CHECK_THROWS_AS(parse_window("first@2:0101"), Error);
  CHECK_THROWS_AS(parse_window("last@0:0101"), Error);
  CHECK_THROWS_AS(parse_window("V@-1:0"), Error);
  CHECK_THROWS_AS(parse_window("float:012"), Error);
  CHECK_THROWS_AS(parse_window("0100"), Error);
}

TEST_CASE("consecutiveness bound") {
  const auto tt = fixtures::two_three();
  CHECK(consecutiveness_bound(tt, stage_word(tt, 1)) == 6);
  CHECK(scanned_run(tt, 3, 3000) == 5);
  const auto zeros = fixtures::e0({}, {0});
  CHECK(consecutiveness_bound(zeros, W("0100")) == 3);
  CHECK(scanned_run(zeros, 3, 3000) == 2);
  const auto mixed = fixtures::e0({0, 1}, {0, 1, 1});
  for (const FiniteWord& v : canonical_sequence(mixed, 4))
    CHECK(consecutiveness_bound(mixed, v) == scanned_run(mixed, v.zero_count(), 5000) + 1);
  const RankOneSpec growing({}, Arithmetic{Stage(2, {0}), {1}});
  CHECK(consecutiveness_bound(growing, W("00")) == scanned_run(growing, 2, 4000) + 1);
  CHECK(kind_of([&] { consecutiveness_bound(zeros, W("00")); }) == ErrorKind::NotADivisor);
  CHECK(kind_of([&] { consecutiveness_bound(RankOneSpec({}, Periodic{{Stage(3, {1, 1})}}), W("0")); }) ==
        ErrorKind::DegenerateSpec);
}

TEST_CASE("local rule") {
  CHECK(classify_occurrence_local(parse_window("float:0101010111110"), 0, W("010"), 2).expected == Answer::Yes);
  CHECK(classify_occurrence_local(parse_window("float:00100110"), 0, W("00"), 2).expected == Answer::Yes);
  CHECK(classify_occurrence_local(parse_window("float:0010011"), 0, W("00"), 2).expected == Answer::Unknown);
  CHECK(kind_of([] { classify_occurrence_local(parse_window("float:0110"), 0, W("00"), 2); }) == ErrorKind::NoOccurrence);
}

TEST_CASE("anchored rule") {
  const Window first = parse_window("first@0:00001");
  CHECK(classify_occurrence_anchored(first, 0, W("00")).expected == Answer::Yes);
  CHECK(classify_occurrence_anchored(first, 1, W("00")).expected == Answer::No);
  CHECK(classify_occurrence_anchored(first, 2, W("00")).expected == Answer::Yes);
  const auto spec = fixtures::e0({0, 0}, {0});
  const Window v2 = parse_window("V@0:0100101000100");
  CHECK(classify_occurrence_anchored(v2, 5, W("0100"), &spec).expected == Answer::Yes);
  CHECK(kind_of([&] { classify_occurrence_anchored(v2, 3, W("0100"), &spec); }) == ErrorKind::NoOccurrence);
  const Window last = parse_window("last@4:1000011");
  CHECK(classify_occurrence_anchored(last, 1, W("00")).expected == Answer::Yes);
  CHECK(classify_occurrence_anchored(last, 2, W("00")).expected == Answer::No);
  CHECK(kind_of([] { classify_occurrence_anchored(parse_window("first@-1:0100"), 0, W("0")); }) ==
        ErrorKind::InsufficientContext);
  CHECK(kind_of([] { classify_occurrence_anchored(parse_window("last@9:0100"), 0, W("0")); }) ==
        ErrorKind::InsufficientContext);
}

TEST_CASE("window decomposition") {
  const auto spec = fixtures::e0({0, 0}, {0});
  const auto d = decompose_window(parse_window("V@0:0100101000100"), W("0100"), {&spec, 0});
  CHECK(d.expected_starts == std::vector<Count>{0, 5, 9});
  CHECK(d.coverage.interior_zeros == d.coverage.interior_covered_once);
  CHECK(d.coverage.boundary_zeros.empty());

  const auto parity = decompose_window(parse_window("first@0:00001"), W("00"), {});
  CHECK(parity.expected_starts == std::vector<Count>{0, 2});
  CHECK(parity.tags == std::vector<OccurrenceTag>{{0, Answer::Yes}, {1, Answer::No}, {2, Answer::Yes}});

  const auto ones = decompose_window(parse_window("float:1111"), W("010"), {nullptr, 3});
  CHECK(ones.tags.empty());
  CHECK(ones.coverage.determined);

  // Cut copies at both edges: V[2, 11) of the E0 word above.
  const auto cut = decompose_window(parse_window("V@2:001010001"), W("0100"), {&spec, 0});
  CHECK(cut.expected_starts == std::vector<Count>{-2, 3, 7});
  CHECK(cut.coverage.boundary_zeros == std::vector<Count>{0, 1, 7});

  CHECK_THROWS_AS(decompose_window(parse_window("V@0:0100100"), W("0100"), {&spec, 0}), Error);
  CHECK(kind_of([] { decompose_window(parse_window("first@0:01000110"), W("0100"), {}); }) == ErrorKind::CoverageFailure);
}

TEST_CASE("scheme images of windows") {
  const auto spec = fixtures::e0({0, 0}, {0});
  const Window v2 = parse_window("V@0:0100101000100");
  const ReplacementScheme s{W("0100"), W("0010")};
  const SchemeImage img = apply_scheme_window(v2, s, {&spec, 0});
  CHECK(img.window.symbols == "0010100100010");
  CHECK(img.lo == 0);
  CHECK(apply_scheme_window(v2, {W("0100"), W("0100")}, {&spec, 0}).window == v2);
  CHECK(apply_scheme_window(parse_window("float:11111"), s, {nullptr, 3}).window.symbols == "11111");
  CHECK(kind_of([&] { apply_scheme_window(v2, {W("0100"), W("0110110")}, {&spec, 0}); }) == ErrorKind::SchemeMismatch);

  const SchemeImage longer = apply_scheme_window(parse_window("first@1:10011001"), {W("00"), W("0110")}, {});
  CHECK(longer.lo == 0);
  CHECK(longer.window.symbols == "101100110");
  CHECK(std::get<FirstZeroAt>(longer.window.anchor).k == 1);
}

TEST_CASE("windows without zeros") {
  const auto spec = fixtures::e0({0, 0}, {0});
  const ReplacementScheme s{W("0100"), W("0010")};
  // Index 1 of V lies inside the first copy of v; the image runs to the end
  // of the matching copy of w.
  CHECK(apply_scheme_window(parse_window("V@1:1"), s, {&spec, 0}).window.symbols == "010");
  CHECK(apply_scheme_window(parse_window("V@4:1"), s, {&spec, 0}).window.symbols == "1");
  // A single 1 could sit inside a copy of v; two cannot.
  CHECK(kind_of([&] { apply_scheme_window(parse_window("float:1"), s, {nullptr, 3}); }) == ErrorKind::CoverageFailure);
  CHECK(apply_scheme_window(parse_window("float:11"), s, {nullptr, 3}).window.symbols == "11");
  // Past the last zero the final copy of w may still show.
  const SchemeImage tail = apply_scheme_window(parse_window("last@-1:111"), {W("00"), W("0110")}, {});
  CHECK(tail.window.symbols == "101");
}
