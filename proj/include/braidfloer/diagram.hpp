#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidfloer/braid.hpp"
#include "braidfloer/strand_words.hpp"
#include "braidfloer/surface.hpp"

namespace bfh {

// Per-letter record of the construction.
struct TraceStep {
  int letter = 0;          // signed Artin letter
  int seamHitsBefore = 0;  // crossings on the twisted seam before the twist
  int verticesBefore = 0;  // |alpha cap beta| before
  int verticesAfter = 0;   // after twist + bigon removal
  int bigonsRemoved = 0;   // crossings removed by reduction (2 per bigon)
};

struct RegionCensus {
  int bigons = 0;
  int squares = 0;
  int hexagons = 0;
  int basepointed = 0;  // faces holding a z basepoint
  int others = 0;       // anything else without a z (a construction bug)
  std::vector<int> hexagonFaces;
};

struct Basepoint {
  int tipVertex = -1;     // degree-1 vertex marking the point
  int markerVertex = -1;  // degree-3 vertex where the whisker meets a curve
  int component = -1;     // link component (z/w index share the strand index)
};

// The frozen alpha/beta arrangement on the closed surface, with basepoints
// kept as whisker slits so faces can be tracked through later surgery.
struct FrozenDiagram {
  Surface surf;
  int strands = 1;
  int genus = 0;
  std::vector<int> alphaCurves;  // curve ids, original arcs then hats
  std::vector<int> betaCurves;
  std::vector<Basepoint> zs, ws;           // index 1..n stored at [i-1]
  std::vector<int> transverseVertices;     // per alpha curve: the marked vertex
  ClosureStructure closure;

  int vertexCountAlphaBeta() const;  // |alpha cap beta|
  int basepointFace(const Basepoint& bp) const;
  // Corners of a face counting only alpha/beta crossings (whiskers ignored).
  int cornerCount(int f) const;
  bool faceHasZ(int f) const;
  bool faceHasW(int f) const;
  std::vector<int> aliveFaces() const;
};

struct DiagramLimits {
  long long maxVertices = 1'000'000;
  long long maxGenerators = 1'000'000;
};

// Full construction state for a braid word.
struct Diagram {
  BraidWord word;
  TwistedSide twisted;        // reduced strand words of the twisted plate
  std::vector<TraceStep> trace;
  FrozenDiagram frozen;       // populated by freeze()/buildDiagram
  int stabilizations = 0;
  bool isFrozen = false;
};

// --- word-stage operations -------------------------------------------------

// Diagram of the identity braid on n strands; complexity (n, 2(n-1)).
Diagram baseDiagram(int n);

// Applies one half-twist (sign from the letter), removes trivial bigons,
// updates the trace.  Aborts via GuardrailError when v exceeds the limit.
void applyHalfTwist(Diagram& d, int letter, const DiagramLimits& limits = {});

// Runs reduction to a fixpoint; returns number of bigons removed.
int removeTrivialBigons(Diagram& d);

// Current |alpha cap beta| for the (possibly unfrozen) diagram.
int diagramVertexCount(const Diagram& d);

// --- arrangement-stage operations -------------------------------------------

// Builds the full arrangement on the sphere and drops the scaffolding.
void freeze(Diagram& d);

RegionCensus classifyRegions(const FrozenDiagram& fd);

bool isNice(const FrozenDiagram& fd);

// Applies the stabilization trick to every six-sided region.  Returns the
// number of handles attached.
int stabilizeHexagons(Diagram& d);

// Whole pipeline: base diagram, one half-twist per letter, freeze,
// stabilize.  Post: isNice(result.frozen).
Diagram buildDiagram(const BraidWord& w, const DiagramLimits& limits = {});

// Serialization of the frozen arrangement (see README for the schema).
std::string diagramToJson(const Diagram& d);

}  // namespace bfh
