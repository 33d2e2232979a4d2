#pragma once

#include <string>
#include <vector>

namespace bfh {

// Curve families on the surface.  Seam and Equator curves are construction
// scaffolding and are dropped when the diagram is frozen.
enum class CurveFamily : std::uint8_t {
  Alpha,
  Beta,
  AlphaHat,
  BetaHat,
  Seam,
  Equator,
};

struct CurveId {
  CurveFamily family;
  int index;
  bool operator==(const CurveId&) const = default;
};

inline bool isAlphaFamily(CurveFamily f) {
  return f == CurveFamily::Alpha || f == CurveFamily::AlphaHat;
}
inline bool isBetaFamily(CurveFamily f) {
  return f == CurveFamily::Beta || f == CurveFamily::BetaHat;
}
inline bool isScaffold(CurveFamily f) {
  return f == CurveFamily::Seam || f == CurveFamily::Equator;
}

// Half-edge map of a closed oriented surface.  twin(h) = h^1; next walks a
// face boundary with the interior on the left.  Faces may have several
// boundary cycles; `chi` caches the Euler characteristic of each face.
class Surface {
 public:
  int addVertex();
  // Creates an unwired edge pair; caller must wire next/prev/face.
  int addEdgePair(int va, int vb, int curve);
  int addCurve(CurveId id);

  int twin(int h) const { return h ^ 1; }
  int next(int h) const { return next_[h]; }
  int prev(int h) const { return prev_[h]; }
  int origin(int h) const { return origin_[h]; }
  int dest(int h) const { return origin_[h ^ 1]; }
  int face(int h) const { return face_[h]; }
  int curveOf(int h) const { return edgeCurve_[h >> 1]; }
  const CurveId& curve(int c) const { return curves_[c]; }
  CurveFamily familyOf(int h) const { return curves_[curveOf(h)].family; }

  int halfEdgeCount() const { return static_cast<int>(next_.size()); }
  int vertexCount() const;
  int edgeCount() const;
  int faceCount() const;
  int curveCount() const { return static_cast<int>(curves_.size()); }

  bool vertexAlive(int v) const { return vertexAlive_[v]; }
  bool faceAlive(int f) const { return faceAlive_[f]; }
  int vertexRep(int v) const { return vertexRep_[v]; }  // outgoing half-edge
  int faceChi(int f) const { return faceChi_[f]; }
  const std::vector<int>& faceCycles(int f) const { return faceCycles_[f]; }

  // Next outgoing half-edge counterclockwise around origin(h).
  int rotateCcw(int h) const { return twin(prev(h)); }
  // Degree of a vertex.
  int degree(int v) const;
  // All outgoing half-edges around a vertex in rotation order.
  std::vector<int> vertexStar(int v) const;
  // All half-edges of a face, cycle by cycle.
  std::vector<int> faceWalk(int f) const;
  int faceCornerCount(int f) const;

  // --- construction from explicit boundary walks -----------------------
  // Walk item: edge token (shared between the two faces using the edge),
  // direction flag, and the curve the edge belongs to.
  struct WalkItem {
    long long token;
    int from, to;
    int curve;
  };
  // Builds the surface from closed face walks (interior on the left).
  void buildFromWalks(int vertexCount,
                      const std::vector<std::vector<WalkItem>>& walks);

  // --- local surgery ----------------------------------------------------
  // Splits edge(h) at a fresh vertex m.  h keeps its origin and now ends at
  // m; the returned half-edge continues m -> old destination on the same
  // side as h.  Returns {m, continuation half-edge}.
  std::pair<int, int> splitEdge(int h);

  // Inserts a chord from origin(hA) to origin(hB) across the face both
  // corners belong to; the chord is attached before hA and before hB in the
  // walk.  If the corners are on one boundary cycle the face splits and the
  // side holding hA keeps the face's extra cycles and Euler deficit, while
  // the other side becomes a fresh disk face.  If they are on different
  // cycles the cycles merge.  Returns the half-edge va->vb.
  int insertChord(int hA, int hB, int curve);

  int vertexSlots() const { return static_cast<int>(vertexRep_.size()); }
  int faceSlots() const { return static_cast<int>(faceCycles_.size()); }

  // Adds a face with no boundary cycles (for the degenerate curveless case).
  int addBareFace(int chi);

  // --- rebuild support ---------------------------------------------------
  // Wires next/prev from a complete next array (faces not yet assigned).
  void wireFromNextArray(const std::vector<int>& next);
  // Computes the orbits of `next`, groups them into faces by the given
  // class id per half-edge, and sets each face's Euler characteristic.
  void buildFacesFromOrbits(const std::vector<int>& classOfHalf,
                            const std::vector<int>& chiOfClass);

  void validate() const;
  int totalChi() const;
  std::string dump() const;

 private:
  void setFaceOnCycle(int h, int f);

  std::vector<int> next_, prev_, origin_, face_;
  std::vector<int> edgeCurve_;
  std::vector<int> vertexRep_;
  std::vector<bool> vertexAlive_;
  std::vector<std::vector<int>> faceCycles_;
  std::vector<int> faceChi_;
  std::vector<bool> faceAlive_;
  std::vector<CurveId> curves_;
};

}  // namespace bfh
