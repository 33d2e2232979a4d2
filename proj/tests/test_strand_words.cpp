#include "doctest.h"

#include <random>

#include "braidfloer/braid.hpp"
#include "braidfloer/strand_words.hpp"

using namespace bfh;

namespace {

TwistedSide run(const BraidWord& w) {
  TwistedSide side = TwistedSide::identity(w.strands);
  for (int letter : w.letters) {
    int arc = letter < 0 ? -letter : letter;
    side.applyTwist(arc, letter < 0 ? -1 : 1);
    side.reduce();
    side.validate();
  }
  return side;
}

bool sameWords(const TwistedSide& a, const TwistedSide& b) {
  if (a.strands != b.strands) return false;
  for (size_t i = 0; i < a.beta.size(); ++i)
    if (!(a.beta[i].word == b.beta[i].word)) return false;
  return true;
}

}  // namespace

TEST_CASE("identity side matches the base tallies") {
  TwistedSide side = TwistedSide::identity(4);
  side.validate();
  for (int i = 1; i <= 3; ++i) {
    CHECK(side.alphaHitsUpper(i) == 1);
    CHECK(side.alphaHitsLower(i) == 0);
    CHECK(side.seamHitsLeft(i) == 1);
    CHECK(side.seamHitsRight(i) == 0);
  }
  CHECK(side.twistedVertexCount() == 3);
}

TEST_CASE("a twist and its inverse cancel") {
  for (int n : {2, 3, 4}) {
    for (int arc = 1; arc <= n - 1; ++arc) {
      for (int sign : {1, -1}) {
        TwistedSide side = TwistedSide::identity(n);
        side.applyTwist(arc, sign);
        side.reduce();
        side.validate();
        side.applyTwist(arc, -sign);
        side.reduce();
        side.validate();
        CHECK(sameWords(side, TwistedSide::identity(n)));
      }
    }
  }
}

TEST_CASE("inverse cancellation from a scrambled start") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord prefix;
    prefix.strands = n;
    int len = static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k) {
      int arc = 1 + static_cast<int>(rng() % (n - 1));
      prefix.letters.push_back(rng() % 2 ? arc : -arc);
    }
    TwistedSide base = run(prefix);
    int arc = 1 + static_cast<int>(rng() % (n - 1));
    int sign = rng() % 2 ? 1 : -1;
    TwistedSide side = base;
    side.applyTwist(arc, sign);
    side.reduce();
    side.applyTwist(arc, -sign);
    side.reduce();
    CHECK(sameWords(side, base));
  }
}

TEST_CASE("braid relation: adjacent generators") {
  for (int n : {3, 4}) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs, rhs;
      lhs.strands = rhs.strands = n;
      lhs.letters = {i, i + 1, i};
      rhs.letters = {i + 1, i, i + 1};
      CHECK(sameWords(run(lhs), run(rhs)));
      // Inverse flavor of the same relation.
      BraidWord lhsInv, rhsInv;
      lhsInv.strands = rhsInv.strands = n;
      lhsInv.letters = {-i, -(i + 1), -i};
      rhsInv.letters = {-(i + 1), -i, -(i + 1)};
      CHECK(sameWords(run(lhsInv), run(rhsInv)));
    }
  }
}

TEST_CASE("braid relation: distant generators commute") {
  BraidWord lhs, rhs;
  lhs.strands = rhs.strands = 4;
  lhs.letters = {1, 3};
  rhs.letters = {3, 1};
  CHECK(sameWords(run(lhs), run(rhs)));
  lhs.letters = {1, -3};
  rhs.letters = {-3, 1};
  CHECK(sameWords(run(lhs), run(rhs)));
}

TEST_CASE("random words respecting braid relations agree") {
  // w * relation-rewritten(w) checks longer mixed words.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 2);
    BraidWord prefix, suffix;
    prefix.strands = suffix.strands = n;
    for (int k = 0; k < 3; ++k) {
      int arc = 1 + static_cast<int>(rng() % (n - 1));
      prefix.letters.push_back(rng() % 2 ? arc : -arc);
      arc = 1 + static_cast<int>(rng() % (n - 1));
      suffix.letters.push_back(rng() % 2 ? arc : -arc);
    }
    int i = 1 + static_cast<int>(rng() % (n - 2));
    BraidWord a = prefix, b = prefix;
    for (int x : {i, i + 1, i}) a.letters.push_back(x);
    for (int x : {i + 1, i, i + 1}) b.letters.push_back(x);
    for (int x : suffix.letters) {
      a.letters.push_back(x);
      b.letters.push_back(x);
    }
    CHECK(sameWords(run(a), run(b)));
  }
}

TEST_CASE("per-letter tallies follow the inductive-step bookkeeping") {
  // A positive twist at arc i turns each seam-i crossing into two alpha-i
  // crossings and one new crossing on each neighbouring seam.
  TwistedSide side = TwistedSide::identity(2);
  int seam = side.seamHits(1);
  CHECK(seam == 1);
  side.applyTwist(1, 1);
  side.reduce();
  CHECK(side.alphaHits(1) == 3);     // base 1 + 2 new
  CHECK(side.seamHits(1) == 1);      // count preserved
  CHECK(side.seamHits(0) == 1);      // gained one
  CHECK(side.seamHits(2) == 1);      // gained one
  CHECK(side.twistedVertexCount() == 3);
}

TEST_CASE("twist growth stays within the twelve-gamma bound") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    TwistedSide side = TwistedSide::identity(n);
    int len = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < len; ++k) {
      int arc = 1 + static_cast<int>(rng() % (n - 1));
      int sign = rng() % 2 ? 1 : -1;
      int before = side.twistedVertexCount() + (n - 1);
      int gamma = side.seamHits(arc);
      CHECK(gamma >= 1);
      side.applyTwist(arc, sign);
      side.reduce();
      side.validate();
      int after = side.twistedVertexCount() + (n - 1);
      CHECK(after <= before + 12 * gamma);
    }
  }
}
