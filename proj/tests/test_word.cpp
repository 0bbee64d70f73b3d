#include "doctest.h"

#include "rank1/error.hpp"
#include "rank1/word.hpp"
#include "oracles.hpp"

using rank1::FiniteWord;
using rank1::JoinerGaps;

namespace {

FiniteWord W(const char* s) { return FiniteWord::parse(s); }

using oracles::all_decompositions;

}  // namespace

TEST_CASE("parse and render") {
  CHECK(W("0100").gaps().size() == 2);
  CHECK(W("0100").length() == 4);
  CHECK(W("0110").render() == "0110");
  CHECK_THROWS_AS(W("1"), rank1::Error);
  CHECK_THROWS_AS(W(""), rank1::Error);
  CHECK_THROWS_AS(W("0120"), rank1::Error);
  CHECK_THROWS_AS(W("01"), rank1::Error);
}

TEST_CASE("decompose") {
  CHECK(rank1::decompose(W("0100101000100"), W("0100")) == JoinerGaps{1, 0});
  CHECK(rank1::decompose(W("0100"), W("0")) == JoinerGaps{1, 0});
  CHECK_FALSE(rank1::decompose(W("01000"), W("0100")));
  CHECK(rank1::decompose(W("010"), W("010")) == JoinerGaps{});
}

TEST_CASE("decompose agrees with backtracking on short words") {
  for (int len = 1; len <= 12; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string w(static_cast<std::size_t>(len), '0');
      for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? '1' : '0';
      if (w.front() != '0' || w.back() != '0') continue;
      const FiniteWord fw = W(w.c_str());
      for (const FiniteWord& v : rank1::divisors(fw)) {
        auto all = all_decompositions(w, v.render());
        REQUIRE(all.size() == 1);
        CHECK(*rank1::decompose(fw, v) == all.front());
      }
    }
  }
}

TEST_CASE("built simply") {
  CHECK(rank1::is_built_simply(W("0101010"), W("010")));
  CHECK_FALSE(rank1::is_built_simply(W("0100101000100"), W("0100")));
  CHECK(rank1::is_built_simply(W("0"), W("0")));
}

TEST_CASE("build") {
  const JoinerGaps j{1, 0};
  CHECK(rank1::build(W("0100"), j).render() == "0100101000100");
  CHECK(rank1::build(W("0"), {}).render() == "0");
  const JoinerGaps two{2};
  CHECK(rank1::build(W("00"), two).render() == "001100");
}

TEST_CASE("build the same way") {
  CHECK(rank1::build_same_way(W("0100101000100"), W("0100"), W("0010")).render() == "0010100100010");
  const FiniteWord v = W("00");
  const JoinerGaps one{1};
  try {
    rank1::build_same_way(rank1::build(v, one), v, W("0110"));
    FAIL("expected NonRepresentable");
  } catch (const rank1::Error& e) {
    CHECK(e.kind() == rank1::ErrorKind::NonRepresentable);
  }
  CHECK(rank1::build_same_way(W("0110"), W("0110"), W("00")) == W("00"));
  try {
    rank1::build_same_way(W("0110"), W("00"), W("0"));
    FAIL("expected PrecedenceViolation");
  } catch (const rank1::Error& e) {
    CHECK(e.kind() == rank1::ErrorKind::PrecedenceViolation);
  }
}

TEST_CASE("divisors") {
  auto render = [](const std::vector<FiniteWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.render());
    return out;
  };
  CHECK(render(rank1::divisors(W("010010"))) == std::vector<std::string>{"0", "010", "010010"});
  CHECK(render(rank1::divisors(W("0"))) == std::vector<std::string>{"0"});
  CHECK(render(rank1::divisors(W("01010101010"))) ==
        std::vector<std::string>{"0", "010", "01010", "01010101010"});
}

TEST_CASE("meet and join") {
  const FiniteWord host = W("01010101010");
  CHECK(rank1::meet_in_host(host, W("010"), W("01010")) == W("0"));
  CHECK(rank1::join_in_host(host, W("010"), W("01010")) == host);
  CHECK(rank1::meet_in_host(W("010010"), W("010"), W("010010")) == W("010"));
  CHECK(rank1::join_in_host(W("010010"), W("010"), W("010010")) == W("010010"));
  CHECK(rank1::meet_in_host(host, host, host) == host);
  CHECK_THROWS_AS(rank1::meet_in_host(W("010010"), W("00"), W("0")), rank1::Error);
}

TEST_CASE("reversal") {
  CHECK(rank1::reverse_word(W("0100")) == W("0010"));
  CHECK(rank1::reverse_word(W("0")) == W("0"));
  CHECK(rank1::reverse_word(W("01010")) == W("01010"));
  const FiniteWord w = W("0100101000100");
  const FiniteWord v = W("0100");
  auto j = *rank1::decompose(w, v);
  std::reverse(j.begin(), j.end());
  CHECK(rank1::decompose(rank1::reverse_word(w), rank1::reverse_word(v)) == j);
}

TEST_CASE("symmetric builds") {
  CHECK(rank1::is_symmetric_build(W("01010"), W("0")));
  CHECK_FALSE(rank1::is_symmetric_build(W("0100"), W("0")));
  const JoinerGaps pal{2, 1, 2};
  CHECK(rank1::is_symmetric_build(rank1::build(W("0110"), pal), W("0110")));
  CHECK_THROWS_AS(rank1::is_symmetric_build(W("0100"), W("00")), rank1::Error);
}
