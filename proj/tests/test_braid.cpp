#include "doctest.h"

#include "braidfloer/braid.hpp"
#include "braidfloer/errors.hpp"

using namespace bfh;

TEST_CASE("parse maps tokens to signed letters") {
  BraidWord w = parseBraidWord("1 1 1", 2);
  CHECK(w.strands == 2);
  CHECK(w.letters == std::vector<int>{1, 1, 1});

  BraidWord v = parseBraidWord("2 -1", 3);
  CHECK(v.letters == std::vector<int>{2, -1});

  BraidWord tok = parseBraidWord("s2, S1", 3);
  CHECK(tok.letters == std::vector<int>{2, -1});

  BraidWord empty = parseBraidWord("", 3);
  CHECK(empty.length() == 0);
  CHECK(empty.strands == 3);
}

TEST_CASE("parse rejects bad tokens") {
  CHECK_THROWS_AS(parseBraidWord("0", 2), ParseError);
  CHECK_THROWS_AS(parseBraidWord("2", 2), ParseError);
  CHECK_THROWS_AS(parseBraidWord("1 x", 2), ParseError);
  CHECK_THROWS_AS(parseBraidWord("--1", 2), ParseError);
}

TEST_CASE("parse then serialize is identity on canonical form") {
  for (const char* text : {"1 1 1", "2 -1", "1 -2 1 -2", ""}) {
    BraidWord w = parseBraidWord(text, 3);
    CHECK(serializeBraidWord(w) == text);
  }
}

TEST_CASE("closure components") {
  CHECK(closureStructure(parseBraidWord("", 3)).componentCount() == 3);
  CHECK(closureStructure(parseBraidWord("1", 2)).componentCount() == 1);
  // (12) then (23) composes to a 3-cycle.
  CHECK(closureStructure(parseBraidWord("1 2", 3)).componentCount() == 1);
  CHECK(closureStructure(parseBraidWord("1 1", 2)).componentCount() == 2);
  CHECK(closureStructure(parseBraidWord("1 1 1", 2)).componentCount() == 1);
}

TEST_CASE("reverse invert") {
  BraidWord w = parseBraidWord("1 1 1", 2);
  CHECK(reverseInvert(w).letters == std::vector<int>{-1, -1, -1});
  BraidWord v = parseBraidWord("2 -1", 3);
  CHECK(reverseInvert(v).letters == std::vector<int>{1, -2});
  CHECK(reverseInvert(reverseInvert(v)) == v);
  BraidWord e = parseBraidWord("", 4);
  CHECK(reverseInvert(e) == e);
}

TEST_CASE("markov variants preserve component count before stabilization") {
  BraidWord w = parseBraidWord("1 1 1", 2);
  auto chain = markovVariants(w, 7, 0);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0] == w);

  auto longer = markovVariants(w, 99, 6);
  for (const BraidWord& v : longer)
    CHECK(closureStructure(v).componentCount() ==
          closureStructure(w).componentCount());
}

TEST_CASE("explicit stabilization") {
  BraidWord w = parseBraidWord("1 1 1", 2);
  // Find a chain step that stabilized and check the form.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto chain = markovVariants(w, seed, 1);
    if (chain[1].strands == 3) {
      CHECK(chain[1].letters == std::vector<int>{1, 1, 1, 2});
      return;
    }
  }
  FAIL("no stabilization observed in 20 seeds");
}
