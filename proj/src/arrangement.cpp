#include "arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "braidfloer/errors.hpp"

namespace bfh {
namespace detail {

namespace {

struct Tokens {
  long long next = 0;
  long long fresh() { return next++; }
};

struct PlateIds {
  std::vector<int> puncture;  // 1..n
  std::vector<int> pivot;     // 1..n-1
};

struct EdgeRec {
  long long token = -1;
  int from = -1, to = -1;
  int curve = -1;
  RefEdgeMark mark;
};

}  // namespace

ScaffoldBuild buildArrangement(const TwistedSide& lower) {
  const int n = lower.strands;
  ScaffoldBuild sb;
  sb.n = n;
  Surface& S = sb.surf;

  sb.alphaCurve.assign(n, -1);
  sb.betaCurve.assign(n, -1);
  for (int i = 1; i <= n - 1; ++i)
    sb.alphaCurve[i] = S.addCurve({CurveFamily::Alpha, i});
  for (int i = 1; i <= n - 1; ++i)
    sb.betaCurve[i] = S.addCurve({CurveFamily::Beta, i});
  int equatorCurve = S.addCurve({CurveFamily::Equator, 0});
  std::vector<std::vector<int>> seamCurve(2, std::vector<int>(n + 1, -1));
  for (int plate = 0; plate < 2; ++plate)
    for (int j = 0; j <= n; ++j)
      seamCurve[plate][j] = S.addCurve({CurveFamily::Seam, plate * (n + 1) + j});

  PlateIds plates[2];
  for (int plate = 0; plate < 2; ++plate) {
    plates[plate].puncture.assign(n + 1, -1);
    plates[plate].pivot.assign(n, -1);
    for (int j = 1; j <= n; ++j) plates[plate].puncture[j] = S.addVertex();
    for (int i = 1; i <= n - 1; ++i) plates[plate].pivot[i] = S.addVertex();
  }
  int L0 = S.addVertex();
  int Rn = S.addVertex();
  std::vector<int> Pa(n, -1), Pb(n, -1), Qa(n, -1), Qb(n, -1);
  for (int i = 1; i <= n - 1; ++i) {
    Pa[i] = S.addVertex();
    Pb[i] = S.addVertex();
    Qa[i] = S.addVertex();
    Qb[i] = S.addVertex();
  }

  Tokens tok;
  // Equator, oriented along the canonical cyclic order
  // L0, Qb1, Qa1, ..., Qa(n-1), Rn, Pb(n-1), Pa(n-1), ..., Pb1, Pa1.
  std::vector<int> eqVerts;
  eqVerts.push_back(L0);
  for (int i = 1; i <= n - 1; ++i) {
    eqVerts.push_back(Qb[i]);
    eqVerts.push_back(Qa[i]);
  }
  eqVerts.push_back(Rn);
  for (int i = n - 1; i >= 1; --i) {
    eqVerts.push_back(Pb[i]);
    eqVerts.push_back(Pa[i]);
  }
  const int E = static_cast<int>(eqVerts.size());
  std::vector<EdgeRec> eqEdge(E);
  std::map<int, int> eqIndexOf;
  for (int k = 0; k < E; ++k) {
    eqIndexOf[eqVerts[k]] = k;
    eqEdge[k] = EdgeRec{tok.fresh(), eqVerts[k], eqVerts[(k + 1) % E],
                        equatorCurve, RefEdgeMark{}};
  }

  // Plate reference edges.  plate 0 = twisted (w side), 1 = fixed (z side).
  std::vector<std::vector<EdgeRec>> alphaUp(2, std::vector<EdgeRec>(n)),
      alphaDown(2, std::vector<EdgeRec>(n)),
      seamL(2, std::vector<EdgeRec>(n + 1)),
      seamR(2, std::vector<EdgeRec>(n + 1));
  for (int plate = 0; plate < 2; ++plate) {
    const PlateIds& P = plates[plate];
    for (int i = 1; i <= n - 1; ++i) {
      alphaUp[plate][i] = EdgeRec{tok.fresh(), Pa[i], P.pivot[i],
                                  sb.alphaCurve[i],
                                  RefEdgeMark{plate, RefKind::AlphaUpper, i}};
      alphaDown[plate][i] = EdgeRec{tok.fresh(), P.pivot[i], Qa[i],
                                    sb.alphaCurve[i],
                                    RefEdgeMark{plate, RefKind::AlphaLower, i}};
    }
    seamR[plate][0] = EdgeRec{tok.fresh(), L0, P.puncture[1],
                              seamCurve[plate][0],
                              RefEdgeMark{plate, RefKind::SeamRight, 0}};
    for (int j = 1; j <= n - 1; ++j) {
      seamL[plate][j] = EdgeRec{tok.fresh(), P.puncture[j], P.pivot[j],
                                seamCurve[plate][j],
                                RefEdgeMark{plate, RefKind::SeamLeft, j}};
      seamR[plate][j] = EdgeRec{tok.fresh(), P.pivot[j], P.puncture[j + 1],
                                seamCurve[plate][j],
                                RefEdgeMark{plate, RefKind::SeamRight, j}};
    }
    seamL[plate][n] = EdgeRec{tok.fresh(), P.puncture[n], Rn,
                              seamCurve[plate][n],
                              RefEdgeMark{plate, RefKind::SeamLeft, n}};
  }

  struct Item {
    EdgeRec e;
    bool fwd;
  };
  std::vector<std::vector<Item>> walks;
  std::vector<Cell> walkCell;
  std::vector<int> walkPlate;

  auto eqRun = [&](int va, int vb) {
    std::vector<Item> out;
    int k = eqIndexOf.at(va);
    while (eqVerts[k] != vb) {
      out.push_back(Item{eqEdge[k], true});
      k = (k + 1) % E;
    }
    return out;
  };

  for (int plate = 0; plate < 2; ++plate) {
    for (int j = 1; j <= n; ++j) {
      std::vector<Item> w;  // cell L(j), in twisted-plate orientation
      int eqFrom = (j == 1) ? L0 : Qa[j - 1];
      int eqTo = (j == n) ? Rn : Qa[j];
      for (auto& it : eqRun(eqFrom, eqTo)) w.push_back(it);
      if (j < n)
        w.push_back(Item{alphaDown[plate][j], false});
      w.push_back(Item{j == n ? seamL[plate][n] : seamL[plate][j], false});
      w.push_back(Item{seamR[plate][j - 1], false});
      if (j > 1) w.push_back(Item{alphaDown[plate][j - 1], true});
      walks.push_back(w);
      walkCell.push_back(Cell{false, j});
      walkPlate.push_back(plate);

      std::vector<Item> u;  // cell U(j)
      int ueqFrom = (j == n) ? Rn : Pa[j];
      int ueqTo = (j == 1) ? L0 : Pa[j - 1];
      for (auto& it : eqRun(ueqFrom, ueqTo)) u.push_back(it);
      if (j > 1) u.push_back(Item{alphaUp[plate][j - 1], true});
      u.push_back(Item{seamR[plate][j - 1], true});
      u.push_back(Item{j == n ? seamL[plate][n] : seamL[plate][j], true});
      if (j < n) u.push_back(Item{alphaUp[plate][j], false});
      walks.push_back(u);
      walkCell.push_back(Cell{true, j});
      walkPlate.push_back(plate);
    }
  }
  // The fixed plate is the mirror image: reverse its walks.
  for (size_t wi = 0; wi < walks.size(); ++wi) {
    if (walkPlate[wi] != 1) continue;
    std::reverse(walks[wi].begin(), walks[wi].end());
    for (Item& it : walks[wi]) it.fwd = !it.fwd;
  }

  std::vector<std::vector<Surface::WalkItem>> rawWalks;
  for (auto& w : walks) {
    std::vector<Surface::WalkItem> rw;
    for (Item& it : w) {
      int from = it.fwd ? it.e.from : it.e.to;
      int to = it.fwd ? it.e.to : it.e.from;
      rw.push_back(Surface::WalkItem{it.e.token, from, to, it.e.curve});
    }
    rawWalks.push_back(rw);
  }
  S.buildFromWalks(S.vertexSlots(), rawWalks);

  // Reference marks per edge id (buildFromWalks allocates edges in token
  // first-use order over the walks).
  sb.edgeMark.assign(S.edgeCount(), RefEdgeMark{});
  {
    std::map<long long, RefEdgeMark> markOfToken;
    for (int plate = 0; plate < 2; ++plate) {
      for (int i = 1; i <= n - 1; ++i) {
        markOfToken[alphaUp[plate][i].token] = alphaUp[plate][i].mark;
        markOfToken[alphaDown[plate][i].token] = alphaDown[plate][i].mark;
      }
      markOfToken[seamR[plate][0].token] = seamR[plate][0].mark;
      for (int j = 1; j <= n - 1; ++j) {
        markOfToken[seamL[plate][j].token] = seamL[plate][j].mark;
        markOfToken[seamR[plate][j].token] = seamR[plate][j].mark;
      }
      markOfToken[seamL[plate][n].token] = seamL[plate][n].mark;
    }
    std::set<long long> seen;
    int edgeId = 0;
    for (auto& w : rawWalks)
      for (auto& it : w)
        if (seen.insert(it.token).second) {
          auto m = markOfToken.find(it.token);
          if (m != markOfToken.end()) sb.edgeMark[edgeId] = m->second;
          ++edgeId;
        }
    require(edgeId == S.edgeCount(), "edge id reconstruction mismatch");
  }

  sb.faceCell.assign(S.faceCount(), Cell{true, 0});
  sb.facePlate.assign(S.faceCount(), -1);
  for (size_t wi = 0; wi < walks.size(); ++wi) {
    sb.faceCell[wi] = walkCell[wi];
    sb.facePlate[wi] = walkPlate[wi];
  }
  for (int plate = 0; plate < 2; ++plate)
    sb.puncture[plate] = plates[plate].puncture;
  sb.upperAlphaCross.assign(n, -1);

  auto anchorAt = [&](int vertex, int plate, Cell cell) {
    for (int h : S.vertexStar(vertex)) {
      int f = S.face(h);
      if (sb.facePlate[f] == plate && sb.faceCell[f] == cell) return h;
    }
    throw InvariantError("anchor corner not found");
  };

  auto noteNewFace = [&](int e1) {
    int newFace = S.face(S.twin(e1));
    require(newFace != S.face(e1), "strand chord failed to split a disk");
    sb.faceCell.resize(S.faceCount(), Cell{true, 0});
    sb.facePlate.resize(S.faceCount(), -1);
    sb.faceCell[newFace] = sb.faceCell[S.face(e1)];
    sb.facePlate[newFace] = sb.facePlate[S.face(e1)];
  };

  auto insertStrand = [&](int plate, const StrandWord& sw) {
    int s = sw.id;
    int curve = sb.betaCurve[s];
    int anchorH = anchorAt(Pb[s], plate, Cell{true, s + 1});
    for (const Crossing& c : sw.word) {
      auto [fromCell, toCell] = cellsOf(c);
      int F = S.face(anchorH);
      require(sb.facePlate[F] == plate && sb.faceCell[F] == fromCell,
              "strand cursor in unexpected cell");
      int target = -1;
      for (int h : S.faceWalk(F)) {
        const RefEdgeMark& m = sb.edgeMark[h >> 1];
        if (m.valid() && m.plate == plate && m.kind == c.kind &&
            m.index == c.index) {
          require(target == -1, "reference edge seen twice on one face");
          target = h;
        }
      }
      require(target >= 0, "reference edge not on current face");
      auto [mid, cont] = S.splitEdge(target);
      sb.edgeMark.resize(S.edgeCount());
      sb.edgeMark[cont >> 1] = sb.edgeMark[target >> 1];
      int e1 = S.insertChord(anchorH, cont, curve);
      sb.edgeMark.resize(S.edgeCount());
      noteNewFace(e1);
      anchorH = S.twin(target);
      int G = S.face(anchorH);
      require(sb.facePlate[G] == plate && sb.faceCell[G] == toCell,
              "strand crossed into unexpected cell");
      if (plate == 1 && c.kind == RefKind::AlphaUpper && c.index == s)
        sb.upperAlphaCross[s] = mid;
    }
    int endH = anchorAt(Qb[s], plate, Cell{false, s});
    require(S.face(endH) == S.face(anchorH),
            "strand end corner not on the cursor face");
    int e1 = S.insertChord(anchorH, endH, curve);
    sb.edgeMark.resize(S.edgeCount());
    noteNewFace(e1);
  };

  TwistedSide upper = TwistedSide::identity(n);
  for (int s = 1; s <= n - 1; ++s) {
    insertStrand(0, lower.beta[s - 1]);
    insertStrand(1, upper.beta[s - 1]);
    require(sb.upperAlphaCross[s] >= 0, "missing fixed-plate crossing");
  }

  S.validate();
  require(S.vertexCount() - S.edgeCount() + S.faceCount() == 2,
          "scaffolded arrangement is not a sphere");
  return sb;
}

// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FrozenDiagram freezeArrangement(const ScaffoldBuild& sb,
                                const ClosureStructure& closure) {
  const Surface& S = sb.surf;
  const int n = sb.n;
  FrozenDiagram fd;
  fd.strands = n;
  fd.genus = 0;
  fd.closure = closure;
  Surface& T = fd.surf;

  auto isCurveHalf = [&](int h) { return !isScaffold(S.familyOf(h)); };
  auto onCurve = [&](int v) {
    for (int g : S.vertexStar(v))
      if (isCurveHalf(g)) return true;
    return false;
  };

  if (n == 1) {
    // No curves at all: the frozen diagram is a bare sphere with one z and
    // one w in its single region.
    T.addBareFace(2);
    fd.zs.assign(1, Basepoint{});
    fd.ws.assign(1, Basepoint{});
    fd.zs[0].component = fd.ws[0].component = 0;
    return fd;
  }

  const int V = S.vertexSlots();
  std::vector<char> kept(V, 0);
  for (int v = 0; v < V; ++v) {
    if (!S.vertexAlive(v)) continue;
    auto star = S.vertexStar(v);
    if (star.size() != 4) continue;
    bool anyScaffold = false;
    for (int h : star)
      if (!isCurveHalf(h)) anyScaffold = true;
    if (!anyScaffold) kept[v] = 1;
  }

  // Basepoint anchors: breadth-first over scaffold edges to the nearest
  // vertex lying on a curve; the arrival slot fixes the whisker side.
  struct Anchor {
    int vertex;
    int arrival;  // scaffold half-edge pointing into vertex
  };
  auto findAnchor = [&](int puncture) -> Anchor {
    std::set<int> visited{puncture};
    std::deque<int> queue;
    {
      std::vector<int> outs = S.vertexStar(puncture);
      std::sort(outs.begin(), outs.end());
      for (int g : outs) queue.push_back(g);
    }
    while (!queue.empty()) {
      int h = queue.front();
      queue.pop_front();
      if (isCurveHalf(h)) continue;
      int v = S.dest(h);
      if (onCurve(v)) return Anchor{v, h};
      if (!visited.insert(v).second) continue;
      std::vector<int> outs = S.vertexStar(v);
      std::sort(outs.begin(), outs.end());
      for (int g : outs)
        if (g != S.twin(h)) queue.push_back(g);
    }
    throw InvariantError("no curve reachable from a basepoint");
  };

  // plan[v] = list of (outgoing scaffold slot at v, basepoint key);
  // key > 0 is z_key, key < 0 is w_(-key).
  std::map<int, std::vector<std::pair<int, int>>> plan;
  for (int j = 1; j <= n; ++j) {
    Anchor aw = findAnchor(sb.puncture[0][j]);
    plan[aw.vertex].push_back({S.twin(aw.arrival), -j});
    Anchor az = findAnchor(sb.puncture[1][j]);
    plan[az.vertex].push_back({S.twin(az.arrival), +j});
  }

  std::vector<char> significant = kept;
  for (auto& [v, slots] : plan) significant[v] = 1;

  std::vector<int> newVertex(V, -1);
  for (int v = 0; v < V; ++v)
    if (significant[v] && S.vertexAlive(v)) newVertex[v] = T.addVertex();

  for (int c = 0; c < S.curveCount(); ++c) T.addCurve(S.curve(c));
  int whiskerCurve = T.addCurve({CurveFamily::Seam, 100000});

  // Walk each curve; frozen edges join consecutive significant vertices.
  auto forwardStep = [&](int h) {
    int fwd = S.rotateCcw(S.rotateCcw(S.twin(h)));
    require(S.curveOf(fwd) == S.curveOf(h), "curve continuation lost");
    return fwd;
  };
  std::map<int, int> frozenAtSlot;       // old outgoing half -> new half
  std::map<int, int> leftFaceOfNewHalf;  // new half -> old face on its left
  std::set<int> curvesDone;
  for (int h0 = 0; h0 < S.halfEdgeCount(); ++h0) {
    if (!isCurveHalf(h0)) continue;
    int c = S.curveOf(h0);
    if (!curvesDone.insert(c).second) continue;
    int h = h0;
    int guard = 0;
    while (!significant[S.origin(h)]) {
      h = forwardStep(h);
      require(++guard <= S.halfEdgeCount(), "curve has no kept vertex");
    }
    int start = h;
    int cur = h;
    do {
      int walk = cur;
      while (!significant[S.dest(walk)]) {
        walk = forwardStep(walk);
        require(++guard <= 4 * S.halfEdgeCount(), "curve walk stuck");
      }
      int a = newVertex[S.origin(cur)];
      int b = newVertex[S.dest(walk)];
      require(a >= 0 && b >= 0, "run endpoint not significant");
      int e = T.addEdgePair(a, b, c);
      frozenAtSlot[cur] = e;
      frozenAtSlot[S.twin(walk)] = e ^ 1;
      leftFaceOfNewHalf[e] = S.face(cur);
      leftFaceOfNewHalf[e ^ 1] = S.face(S.twin(walk));
      cur = forwardStep(walk);
      require(++guard <= 4 * S.halfEdgeCount(), "curve walk stuck");
    } while (cur != start);
  }

  // Whiskers.
  fd.zs.assign(n, Basepoint{});
  fd.ws.assign(n, Basepoint{});
  std::map<int, std::vector<std::pair<int, int>>> whiskerHalfAtSlot;
  for (auto& [v, slots] : plan) {
    for (auto& [slot, key] : slots) {
      int tip = T.addVertex();
      int e = T.addEdgePair(newVertex[v], tip, whiskerCurve);
      Basepoint bp;
      bp.tipVertex = tip;
      bp.markerVertex = newVertex[v];
      int j = key > 0 ? key : -key;
      bp.component = closure.componentOf[j - 1];
      if (key > 0)
        fd.zs[j - 1] = bp;
      else
        fd.ws[j - 1] = bp;
      whiskerHalfAtSlot[v].push_back({slot, e});
      leftFaceOfNewHalf[e] = S.face(slot);
      leftFaceOfNewHalf[e ^ 1] = S.face(slot);
    }
  }

  // Rotations: old star order with curve slots replaced by frozen halves and
  // whiskers dropped into their scaffold slots.
  std::vector<std::vector<int>> rot(T.vertexSlots());
  for (int v = 0; v < V; ++v) {
    if (newVertex[v] < 0) continue;
    std::vector<int> order;
    auto wit = whiskerHalfAtSlot.find(v);
    for (int h : S.vertexStar(v)) {
      auto it = frozenAtSlot.find(h);
      if (it != frozenAtSlot.end()) {
        order.push_back(it->second);
        continue;
      }
      if (wit != whiskerHalfAtSlot.end())
        for (auto& [slot, e] : wit->second)
          if (slot == h) order.push_back(e);
    }
    require(order.size() >= 2, "frozen vertex lost its spokes");
    rot[newVertex[v]] = order;
  }
  for (auto& [v, list] : whiskerHalfAtSlot)
    for (auto& [slot, e] : list) rot[T.origin(e ^ 1)] = {e ^ 1};

  std::vector<int> nextArr(T.halfEdgeCount(), -1);
  for (auto& order : rot) {
    if (order.empty()) continue;
    int k = static_cast<int>(order.size());
    for (int i = 0; i < k; ++i) nextArr[order[(i + 1) % k] ^ 1] = order[i];
  }
  T.wireFromNextArray(nextArr);

  // Faces := union-find classes of old faces across scaffold edges.
  int oldFaceSlots = 0;
  for (int h = 0; h < S.halfEdgeCount(); ++h)
    oldFaceSlots = std::max(oldFaceSlots, S.face(h) + 1);
  UnionFind uf(oldFaceSlots);
  for (int h = 0; h < S.halfEdgeCount(); h += 2)
    if (!isCurveHalf(h)) uf.unite(S.face(h), S.face(h ^ 1));

  std::vector<int> chiOfClass(oldFaceSlots, 0);
  for (int f = 0; f < oldFaceSlots; ++f)
    if (S.faceAlive(f)) chiOfClass[uf.find(f)] += 1;  // cells
  for (int h = 0; h < S.halfEdgeCount(); h += 2)
    if (!isCurveHalf(h)) chiOfClass[uf.find(S.face(h))] -= 1;  // inner edges
  for (int v = 0; v < V; ++v) {
    if (!S.vertexAlive(v) || onCurve(v)) continue;
    chiOfClass[uf.find(S.face(S.vertexStar(v)[0]))] += 1;  // inner vertices
  }

  std::vector<int> classOfHalf(T.halfEdgeCount(), -1);
  for (int h = 0; h < T.halfEdgeCount(); ++h) {
    auto it = leftFaceOfNewHalf.find(h);
    require(it != leftFaceOfNewHalf.end(), "new half-edge without provenance");
    classOfHalf[h] = uf.find(it->second);
  }
  T.buildFacesFromOrbits(classOfHalf, chiOfClass);

  fd.alphaCurves.clear();
  fd.betaCurves.clear();
  for (int i = 1; i <= n - 1; ++i) {
    fd.alphaCurves.push_back(sb.alphaCurve[i]);
    fd.betaCurves.push_back(sb.betaCurve[i]);
  }
  fd.transverseVertices.assign(std::max(n - 1, 0), -1);
  for (int s = 1; s <= n - 1; ++s)
    fd.transverseVertices[s - 1] = newVertex[sb.upperAlphaCross[s]];

  T.validate();
  return fd;
}

}  // namespace detail
}  // namespace bfh
