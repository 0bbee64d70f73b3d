#include "doctest.h"

#include "fixtures.hpp"
#include "rank1/error.hpp"
#include "rank1/spec.hpp"

using namespace rank1;
using fixtures::e0;

namespace {

FiniteWord W(const char* s) { return FiniteWord::parse(s); }

// Direct check of the A_V condition over a long expansion: v is the prefix with
// r zeros and L(i) = a_{i mod r} for i not divisible by r, i < limit.
bool in_av_scan(const RankOneSpec& spec, const FiniteWord& v, Count limit) {
  const Count r = v.zero_count();
  const std::string prefix = expand_prefix(spec, v.length());
  if (prefix != v.render()) return false;
  for (Count i = 1; i < limit; ++i) {
    if (i % r == 0) continue;
    if (gap_function(spec, i) != v.gaps()[static_cast<std::size_t>(i % r - 1)]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("stage validation") {
  CHECK_THROWS_AS(Stage(1, {}), Error);
  CHECK_THROWS_AS(Stage(3, {1}), Error);
  CHECK_THROWS_AS(Stage(2, {-1}), Error);
  CHECK_THROWS_AS(RankOneSpec({}, Periodic{}), Error);
  CHECK_THROWS_AS(RankOneSpec({}, Arithmetic{Stage(3, {1, 0}), {1}}), Error);
}

TEST_CASE("stage words and expansion") {
  const auto zeros = e0({0}, {0});
  CHECK(stage_word(zeros, 1).render() == "0100");
  CHECK(stage_word(zeros, 0).render() == "0");
  CHECK(stage_word(e0({0, 0}, {0}), 2).render() == "0100101000100");
  CHECK(expand_prefix(zeros, 13) == "0100101000100");
  CHECK(expand_prefix(zeros, 1) == "0");
  CHECK(expand_prefix(fixtures::two_three(), 11) == "01010110101");
  const RankOneSpec cut({Stage(3, {1, 0})}, Truncated{});
  CHECK_THROWS_AS(stage_word(cut, 2), Error);
  CHECK_THROWS_AS(expand_prefix(cut, 5), Error);
  CHECK(stage_length(fixtures::two_three(), 2) == 3 * 5 + 4);
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(expand_prefix(zeros, stage_length(zeros, n)) == stage_word(zeros, n).render());
    for (std::size_t m = 0; m < n; ++m) CHECK(is_built_from(stage_word(zeros, n), stage_word(zeros, m)));
  }
}

TEST_CASE("gap function") {
  const auto zeros = e0({}, {0});
  CHECK(gap_function(zeros, 1) == 1);
  CHECK(gap_function(zeros, 2) == 0);
  CHECK(gap_function(zeros, 3) == 1);
  CHECK_THROWS_AS(gap_function(RankOneSpec({Stage(2, {1})}, Truncated{}), 2), Error);
}

TEST_CASE("membership in A_V") {
  const auto zeros = e0({}, {0});
  CHECK(is_in_AV(zeros, W("0100")).is_yes());
  CHECK(is_in_AV(zeros, W("00")).is_no());
  CHECK(is_in_AV(zeros, W("0")).is_yes());
  CHECK(is_in_AV(zeros, stage_word(zeros, 3)).is_yes());
  CHECK(is_in_AV(zeros, prefix_word(zeros, 6)).is_no());
  const RankOneSpec cut({Stage(3, {1, 0})}, Truncated{});
  CHECK(is_in_AV(cut, W("0100")).is_yes());
  CHECK(is_in_AV(cut, W("0")).is_yes());
}

TEST_CASE("membership agrees with a direct scan") {
  const std::vector<RankOneSpec> specs{e0({0, 1}, {0, 1, 1}), fixtures::two_three(),
                                       RankOneSpec({Stage(2, {0})}, Periodic{{Stage(2, {1}), Stage(3, {0, 1})}}),
                                       RankOneSpec({Stage(4, {1, 1, 1})}, Periodic{{Stage(2, {2}), Stage(2, {1})}}),
                                       RankOneSpec({}, Arithmetic{Stage(2, {0}), {1}})};
  for (const auto& spec : specs) {
    for (Count r = 1; r <= 40; ++r) {
      const FiniteWord v = prefix_word(spec, r);
      const bool oracle = in_av_scan(spec, v, 20000);
      const Verdict got = is_in_AV(spec, v);
      CHECK(!got.is_unknown());
      CHECK(got.is_yes() == oracle);
    }
  }
}

TEST_CASE("fundamental words") {
  const auto zeros = e0({}, {0});
  CHECK(is_fundamental(zeros, W("0100")).is_yes());
  CHECK(is_fundamental(zeros, W("0")).is_yes());
  const RankOneSpec flat({}, Periodic{{Stage(3, {1, 1})}});
  CHECK(is_fundamental(flat, W("01010")).is_no());
}

TEST_CASE("canonical sequences") {
  auto seq = canonical_sequence(e0({0, 1}, {0}), 3);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0].render() == "0");
  CHECK(seq[1].render() == "0100");
  CHECK(seq[2].render() == "0100010010100");
  CHECK(canonical_sequence(e0({1}, {0}), 1) == std::vector<FiniteWord>{W("0")});
  const auto tt = canonical_sequence(fixtures::two_three(), 4);
  for (std::size_t k = 1; k < tt.size(); ++k) {
    CHECK(is_built_from(tt[k], tt[k - 1]));
    CHECK(tt[k - 1] < tt[k]);
    CHECK(is_fundamental(fixtures::two_three(), tt[k]).is_yes());
  }
  CHECK_THROWS_AS(canonical_sequence(RankOneSpec({}, Periodic{{Stage(3, {1, 1})}}), 2), Error);
  const auto bounded = canonical_sequence_up_to_length(e0({}, {0}), 100);
  CHECK(bounded.size() == 4);
}

TEST_CASE("classification") {
  CHECK(classify(RankOneSpec({}, Periodic{{Stage(3, {1, 1})}})) == SpecClass::Degenerate);
  CHECK(classify(e0({0}, {0})) == SpecClass::Minimal);
  CHECK(classify(RankOneSpec({}, Arithmetic{Stage(2, {1}), {1}})) == SpecClass::NonMinimal);
  CHECK(classify(RankOneSpec({Stage(3, {1, 0})}, Truncated{})) == SpecClass::Unknown);
  CHECK(is_nondegenerate(e0({}, {0})).is_yes());
  CHECK(is_nondegenerate(RankOneSpec({}, Periodic{{Stage(3, {1, 1})}})).is_no());
  const Verdict t = is_nondegenerate(RankOneSpec({Stage(3, {1, 0})}, Truncated{}));
  CHECK(t.is_unknown());
  CHECK(t.bound == 1);
}

TEST_CASE("derived word and gap equality") {
  const auto spec = fixtures::two_three();
  const auto d = derived_over(spec, 3);
  for (Count i = 1; i < 500; ++i) CHECK(gap_function(d, i) == gap_function(spec, 3 * i));
  const auto d9 = derived_over(e0({0, 1}, {1, 0}), 9);
  for (Count i = 1; i < 500; ++i) CHECK(gap_function(d9, i) == gap_function(e0({0, 1}, {1, 0}), 9 * i));
  CHECK(same_word(spec, spec).is_yes());
  CHECK(same_word(e0({0}, {0}), e0({1}, {0})).is_no());
  CHECK(same_word(e0({0, 1}, {0, 1}), e0({0}, {1, 0})).is_yes());
  CHECK(same_word(e0({}, {0}), e0({0, 0}, {0, 0})).is_yes());
  const Verdict diff = same_word(e0({0, 0}, {0}), e0({0, 1}, {0}));
  REQUIRE(diff.is_no());
  REQUIRE(diff.index.has_value());
  CHECK(gap_function(e0({0, 0}, {0}), *diff.index) != gap_function(e0({0, 1}, {0}), *diff.index));
  CHECK(same_gaps(derived_over(e0({0}, {0}), 3), 4, derived_over(e0({1}, {0}), 3), 4).is_yes());
  CHECK(min_gap(e0({0}, {0})) == 0);
}
