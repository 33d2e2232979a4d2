#include "braidfloer/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "arrangement.hpp"
#include "braidfloer/errors.hpp"
#include "json.hpp"

namespace bfh {

int FrozenDiagram::vertexCountAlphaBeta() const {
  int c = 0;
  for (int v = 0; v < surf.vertexSlots(); ++v) {
    if (!surf.vertexAlive(v)) continue;
    if (surf.vertexStar(v).size() == 4) ++c;
  }
  return c;
}

int FrozenDiagram::basepointFace(const Basepoint& bp) const {
  if (bp.tipVertex < 0) return 0;  // curveless diagram: single region
  return surf.face(surf.vertexRep(bp.tipVertex));
}

int FrozenDiagram::cornerCount(int f) const {
  int corners = 0;
  for (int h : surf.faceWalk(f)) {
    int g = surf.next(h);
    CurveFamily a = surf.familyOf(h), b = surf.familyOf(g);
    if ((isAlphaFamily(a) && isBetaFamily(b)) ||
        (isBetaFamily(a) && isAlphaFamily(b)))
      ++corners;
  }
  return corners;
}

bool FrozenDiagram::faceHasZ(int f) const {
  for (const Basepoint& bp : zs)
    if (basepointFace(bp) == f) return true;
  return false;
}

bool FrozenDiagram::faceHasW(int f) const {
  for (const Basepoint& bp : ws)
    if (basepointFace(bp) == f) return true;
  return false;
}

std::vector<int> FrozenDiagram::aliveFaces() const {
  std::vector<int> faces;
  for (int f = 0; f < surf.faceSlots(); ++f)
    if (surf.faceAlive(f)) faces.push_back(f);
  return faces;
}

Diagram baseDiagram(int n) {
  if (n < 1) throw ParseError("strand count must be positive");
  Diagram d;
  d.word.strands = n;
  d.twisted = TwistedSide::identity(n);
  return d;
}

int diagramVertexCount(const Diagram& d) {
  return d.twisted.twistedVertexCount() + (d.word.strands - 1);
}

void applyHalfTwist(Diagram& d, int letter, const DiagramLimits& limits) {
  int arc = letter < 0 ? -letter : letter;
  if (arc < 1 || arc > d.word.strands - 1)
    throw ParseError("twist index out of range");
  TraceStep step;
  step.letter = letter;
  step.seamHitsBefore = d.twisted.seamHits(arc);
  step.verticesBefore = diagramVertexCount(d);
  require(step.seamHitsBefore >= 1, "twisted seam has no crossings");
  d.twisted.applyTwist(arc, letter < 0 ? -1 : 1);
  step.bigonsRemoved = d.twisted.reduce() / 2;
  d.twisted.validate();
  step.verticesAfter = diagramVertexCount(d);
  require(step.verticesAfter <= step.verticesBefore + 12 * step.seamHitsBefore,
          "half-twist exceeded its growth bound");
  d.word.letters.push_back(letter);
  d.trace.push_back(step);
  if (step.verticesAfter > limits.maxVertices)
    throw GuardrailError("vertex count " +
                         std::to_string(step.verticesAfter) +
                         " exceeds the configured limit");
}

int removeTrivialBigons(Diagram& d) { return d.twisted.reduce() / 2; }

void freeze(Diagram& d) {
  auto sb = detail::buildArrangement(d.twisted);
  d.frozen = detail::freezeArrangement(sb, closureStructure(d.word));
  d.isFrozen = true;
}

RegionCensus classifyRegions(const FrozenDiagram& fd) {
  RegionCensus census;
  for (int f : fd.aliveFaces()) {
    if (fd.faceHasZ(f)) {
      ++census.basepointed;
      continue;
    }
    int corners = fd.cornerCount(f);
    bool disk = fd.surf.faceChi(f) == 1;
    if (disk && corners == 2)
      ++census.bigons;
    else if (disk && corners == 4)
      ++census.squares;
    else if (disk && corners == 6) {
      ++census.hexagons;
      census.hexagonFaces.push_back(f);
    } else
      ++census.others;
  }
  return census;
}

bool isNice(const FrozenDiagram& fd) {
  for (int f : fd.aliveFaces()) {
    if (fd.faceHasZ(f)) continue;
    if (fd.surf.faceChi(f) != 1) return false;
    if (fd.cornerCount(f) > 4) return false;
  }
  return true;
}

Diagram buildDiagram(const BraidWord& w, const DiagramLimits& limits) {
  Diagram d = baseDiagram(w.strands);
  for (int letter : w.letters) applyHalfTwist(d, letter, limits);
  freeze(d);
  int hexagons = static_cast<int>(classifyRegions(d.frozen).hexagonFaces.size());
  if (hexagons > 0) d.stabilizations = stabilizeHexagons(d);
  require(isNice(d.frozen), "diagram is not nice after stabilization");
  return d;
}

std::string diagramToJson(const Diagram& d) {
  using json = nlohmann::ordered_json;
  const FrozenDiagram& fd = d.frozen;
  const Surface& S = fd.surf;
  json out;
  out["strands"] = d.word.strands;
  out["word"] = d.word.letters;
  out["genus"] = fd.genus;
  out["complexity"] = {{"curves", static_cast<int>(fd.alphaCurves.size())},
                       {"vertices", fd.vertexCountAlphaBeta()}};
  json trace = json::array();
  for (const TraceStep& t : d.trace)
    trace.push_back({{"letter", t.letter},
                     {"seamHits", t.seamHitsBefore},
                     {"verticesBefore", t.verticesBefore},
                     {"verticesAfter", t.verticesAfter},
                     {"bigonsRemoved", t.bigonsRemoved}});
  out["trace"] = trace;
  json halfEdges = json::array();
  for (int h = 0; h < S.halfEdgeCount(); ++h) {
    json he;
    he["twin"] = S.twin(h);
    he["next"] = S.next(h);
    he["origin"] = S.origin(h);
    he["face"] = S.face(h);
    const CurveId& c = S.curve(S.curveOf(h));
    switch (c.family) {
      case CurveFamily::Alpha: he["curve"] = "alpha" + std::to_string(c.index); break;
      case CurveFamily::Beta: he["curve"] = "beta" + std::to_string(c.index); break;
      case CurveFamily::AlphaHat: he["curve"] = "alphaHat" + std::to_string(c.index); break;
      case CurveFamily::BetaHat: he["curve"] = "betaHat" + std::to_string(c.index); break;
      default: he["curve"] = "marker"; break;
    }
    halfEdges.push_back(he);
  }
  out["halfEdges"] = halfEdges;
  json zs = json::array(), ws = json::array();
  for (const Basepoint& bp : fd.zs)
    zs.push_back({{"face", fd.basepointFace(bp)}, {"component", bp.component}});
  for (const Basepoint& bp : fd.ws)
    ws.push_back({{"face", fd.basepointFace(bp)}, {"component", bp.component}});
  out["z"] = zs;
  out["w"] = ws;
  return out.dump(2);
}

}  // namespace bfh
