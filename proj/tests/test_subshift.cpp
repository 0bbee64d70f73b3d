#include "doctest.h"

#include "fixtures.hpp"
#include "rank1/error.hpp"
#include "rank1/subshift.hpp"

using namespace rank1;

namespace {

std::set<std::string> scan_language(const RankOneSpec& spec, Count length, Count horizon) {
  const std::string prefix = expand_prefix(spec, horizon);
  std::set<std::string> out;
  for (std::size_t i = 0; i + static_cast<std::size_t>(length) <= prefix.size(); ++i)
    out.insert(prefix.substr(i, static_cast<std::size_t>(length)));
  return out;
}

}  // namespace

TEST_CASE("admissibility") {
  const auto spec = fixtures::e0({}, {0});
  const auto yes = is_admissible("0100", spec, 4);
  CHECK(yes.verdict.is_yes());
  REQUIRE(yes.witness);
  CHECK(yes.witness->offset == 0);
  CHECK(is_admissible("11", spec, 6).verdict.is_no());
  CHECK(is_admissible("0", spec, 0).verdict.is_yes());
  CHECK(is_admissible("0", fixtures::two_three(), 3).verdict.is_yes());
  CHECK(is_admissible("1010100", spec, 0).verdict.is_unknown());

  const RankOneSpec cut({Stage(3, {1, 0})}, Truncated{});
  CHECK(is_admissible("100", cut, 5).verdict.is_yes());
  CHECK(is_admissible("11", cut, 5).verdict.is_unknown());
}

TEST_CASE("admissibility witnesses point into V") {
  const std::vector<RankOneSpec> specs{fixtures::e0({1, 0}, {0, 1, 1}), fixtures::two_three(),
                                       RankOneSpec({Stage(2, {3})}, Arithmetic{Stage(3, {0, 1}), {1, 0}})};
  for (const auto& spec : specs) {
    const std::string prefix = expand_prefix(spec, 200000);
    for (Count len = 1; len <= 9; ++len) {
      for (const std::string& w : enumerate_subwords(spec, len, 12).words) {
        const auto rep = is_admissible(w, spec, 12);
        REQUIRE(rep.verdict.is_yes());
        REQUIRE(rep.witness);
        CHECK(expand_prefix(spec, rep.witness->offset + len).substr(static_cast<std::size_t>(rep.witness->offset)) == w);
        CHECK(stage_word(spec, rep.witness->stage).render().substr(static_cast<std::size_t>(rep.witness->offset), w.size()) == w);
      }
    }
  }
}

TEST_CASE("languages") {
  const auto spec = fixtures::e0({}, {0});
  const Language two = enumerate_subwords(spec, 2, 6);
  CHECK(two.complete);
  CHECK(two.words == std::set<std::string>{"00", "01", "10"});
  CHECK(enumerate_subwords(fixtures::two_three(), 1, 5).words == std::set<std::string>{"0", "1"});
  const RankOneSpec growing({}, Arithmetic{Stage(2, {0}), {1}});
  CHECK(enumerate_subwords(growing, 2, 6).words == std::set<std::string>{"00", "01", "10", "11"});
  CHECK_FALSE(enumerate_subwords(RankOneSpec({Stage(3, {1, 0})}, Truncated{}), 2, 6).complete);
  for (const auto& s : {fixtures::e0({0, 1}, {1, 1, 0}), fixtures::two_three()})
    for (Count len = 1; len <= 14; ++len) CHECK(enumerate_subwords(s, len, 20).words == scan_language(s, len, 300000));
}

TEST_CASE("special points") {
  const RankOneSpec growing({}, Arithmetic{Stage(2, {1}), {1}});
  CHECK(special_point_window(growing, SpecialPoint::AllOnes, 2).symbols == "11111");
  const Window first = special_point_window(growing, SpecialPoint::FirstZero, 2);
  CHECK(first.symbols == "11010");
  CHECK(std::get<FirstZeroAt>(first.anchor).k == 2);
  const Window last = special_point_window(growing, SpecialPoint::LastZero, 5);
  const std::string v3 = stage_word(growing, 3).render();
  CHECK(last.symbols == v3.substr(v3.size() - 6) + "11111");
  try {
    special_point_window(fixtures::e0({}, {0}), SpecialPoint::FirstZero, 3);
    FAIL("expected KindUnavailable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KindUnavailable);
  }
}

TEST_CASE("expected cylinders") {
  const auto spec = fixtures::e0({0, 0}, {0});
  const Window v2 = parse_window("V@0:0100101000100");
  const FiniteWord v = FiniteWord::parse("0100");
  CHECK(expected_cylinder_contains(v2, v, 9, spec).is_yes());
  CHECK(expected_cylinder_contains(v2, v, 3, spec).is_no());
  CHECK(expected_cylinder_contains(parse_window("float:01001"), v, 0, spec).is_unknown());
  const Window fl = parse_window("float:" + expand_prefix(spec, 400).substr(37));
  for (Count i = 0; i < 40; ++i) {
    const Verdict a = expected_cylinder_contains(fl, v, i, spec);
    const Verdict b = expected_cylinder_contains(parse_window("V@37:" + fl.symbols), v, i, spec);
    CHECK(a.answer == b.answer);
  }
}
