#include "doctest.h"
#include <map>

#include <random>

#include "braidfloer/braid.hpp"
#include "braidfloer/diagram.hpp"
#include "braidfloer/errors.hpp"

using namespace bfh;

namespace {

// With every crossing 4-valent, e = 2v, so the region Euler measures sum
// to v + 2 - 2g (equals rho - v = 2 - 2g when every region is a disk).
void checkEulerIdentity(const FrozenDiagram& fd) {
  int v = fd.vertexCountAlphaBeta();
  int chiSum = 0;
  for (int f : fd.aliveFaces()) chiSum += fd.surf.faceChi(f);
  CHECK(chiSum == v + 2 - 2 * fd.genus);
}

}  // namespace

TEST_CASE("base diagram complexity is (n, 2(n-1))") {
  for (int n = 1; n <= 50; ++n) {
    Diagram d = baseDiagram(n);
    CHECK(diagramVertexCount(d) == 2 * (n - 1));
  }
}

TEST_CASE("frozen base diagrams") {
  for (int n = 2; n <= 6; ++n) {
    Diagram d = baseDiagram(n);
    freeze(d);
    CHECK(d.frozen.vertexCountAlphaBeta() == 2 * (n - 1));
    checkEulerIdentity(d.frozen);
    RegionCensus census = classifyRegions(d.frozen);
    CHECK(census.hexagons == 0);
    CHECK(census.others == 0);
    CHECK(isNice(d.frozen));
  }
}

TEST_CASE("degenerate one-strand diagram") {
  Diagram d = baseDiagram(1);
  freeze(d);
  CHECK(d.frozen.vertexCountAlphaBeta() == 0);
  CHECK(d.frozen.aliveFaces().size() == 1);
  CHECK(isNice(d.frozen));
}

TEST_CASE("base diagram n=2 regions and basepoints") {
  // Identity on two strands closes to the two-component unlink: the alpha
  // circle splits the sphere with one z and one w on each side, and the two
  // lens regions between alpha and beta carry no basepoint.
  Diagram d = baseDiagram(2);
  freeze(d);
  auto faces = d.frozen.aliveFaces();
  CHECK(faces.size() == 4);
  int withPair = 0, empty = 0;
  for (int f : faces) {
    CHECK(d.frozen.cornerCount(f) == 2);
    bool z = d.frozen.faceHasZ(f), w = d.frozen.faceHasW(f);
    if (z && w)
      ++withPair;
    else if (!z && !w)
      ++empty;
  }
  CHECK(withPair == 2);
  CHECK(empty == 2);
  CHECK(d.frozen.zs[0].component != d.frozen.zs[1].component);
}

TEST_CASE("every alpha complement component holds one z and one w") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Diagram d = baseDiagram(n);
    int len = static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k) {
      int arc = 1 + static_cast<int>(rng() % (n - 1));
      applyHalfTwist(d, rng() % 2 ? arc : -arc);
    }
    freeze(d);
    const FrozenDiagram& fd = d.frozen;
    // Flood faces across non-alpha edges.
    std::map<int, int> comp;
    int nComp = 0;
    for (int f : fd.aliveFaces())
      if (!comp.count(f)) {
        std::vector<int> stack{f};
        comp[f] = nComp;
        while (!stack.empty()) {
          int g = stack.back();
          stack.pop_back();
          for (int h : fd.surf.faceWalk(g)) {
            if (isAlphaFamily(fd.surf.familyOf(h))) continue;
            int o = fd.surf.face(fd.surf.twin(h));
            if (!comp.count(o)) {
              comp[o] = nComp;
              stack.push_back(o);
            }
          }
        }
        ++nComp;
      }
    CHECK(nComp == n);
    std::vector<int> zCount(nComp, 0), wCount(nComp, 0);
    for (const Basepoint& bp : fd.zs) ++zCount[comp.at(fd.basepointFace(bp))];
    for (const Basepoint& bp : fd.ws) ++wCount[comp.at(fd.basepointFace(bp))];
    for (int c = 0; c < nComp; ++c) {
      CHECK(zCount[c] == 1);
      CHECK(wCount[c] == 1);
    }
  }
}

TEST_CASE("a twist and its inverse restore base complexity") {
  Diagram d = baseDiagram(2);
  applyHalfTwist(d, 1);
  CHECK(diagramVertexCount(d) <= 2 + 12);
  applyHalfTwist(d, -1);
  CHECK(diagramVertexCount(d) == 2);
}

TEST_CASE("positive two-strand braids freeze nice without stabilization") {
  for (int k = 1; k <= 7; ++k) {
    BraidWord w;
    w.strands = 2;
    w.letters.assign(k, 1);
    Diagram d = baseDiagram(2);
    for (int l : w.letters) applyHalfTwist(d, l);
    freeze(d);
    checkEulerIdentity(d.frozen);
    RegionCensus c = classifyRegions(d.frozen);
    CHECK(c.hexagons == 0);  // at most n-2 = 0 six-sided regions
    CHECK(c.others == 0);
    CHECK(isNice(d.frozen));
    CHECK(diagramVertexCount(d) <= (1 << (2 * k)) + 2 * 2);
  }
}

TEST_CASE("random words freeze with valid censuses") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Diagram d = baseDiagram(n);
    int len = static_cast<int>(rng() % 6);
    for (int k = 0; k < len; ++k) {
      int arc = 1 + static_cast<int>(rng() % (n - 1));
      applyHalfTwist(d, rng() % 2 ? arc : -arc);
    }
    freeze(d);
    checkEulerIdentity(d.frozen);
    RegionCensus c = classifyRegions(d.frozen);
    CHECK(c.others == 0);
    CHECK(c.hexagons <= n - 2);
    CHECK(diagramVertexCount(d) <= (1 << (2 * len)) + 2 * n);
  }
}

TEST_CASE("vertex guardrail aborts") {
  Diagram d = baseDiagram(3);
  DiagramLimits limits;
  limits.maxVertices = 10;
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 10; ++i) {
          applyHalfTwist(d, 1, limits);
          applyHalfTwist(d, -2, limits);
        }
      }(),
      GuardrailError);
}
