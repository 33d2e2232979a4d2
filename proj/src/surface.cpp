#include "braidfloer/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "braidfloer/errors.hpp"

namespace bfh {

int Surface::addVertex() {
  vertexRep_.push_back(-1);
  vertexAlive_.push_back(true);
  return static_cast<int>(vertexRep_.size()) - 1;
}

int Surface::addEdgePair(int va, int vb, int curve) {
  int h = static_cast<int>(next_.size());
  next_.push_back(-1);
  next_.push_back(-1);
  prev_.push_back(-1);
  prev_.push_back(-1);
  origin_.push_back(va);
  origin_.push_back(vb);
  face_.push_back(-1);
  face_.push_back(-1);
  edgeCurve_.push_back(curve);
  if (vertexRep_[va] < 0) vertexRep_[va] = h;
  if (vertexRep_[vb] < 0) vertexRep_[vb] = h + 1;
  return h;
}

int Surface::addCurve(CurveId id) {
  curves_.push_back(id);
  return static_cast<int>(curves_.size()) - 1;
}

int Surface::vertexCount() const {
  int c = 0;
  for (bool a : vertexAlive_) c += a;
  return c;
}

int Surface::edgeCount() const { return static_cast<int>(edgeCurve_.size()); }

int Surface::faceCount() const {
  int c = 0;
  for (bool a : faceAlive_) c += a;
  return c;
}

int Surface::degree(int v) const {
  int h0 = vertexRep_[v];
  int h = h0, d = 0;
  do {
    ++d;
    h = rotateCcw(h);
  } while (h != h0);
  return d;
}

std::vector<int> Surface::vertexStar(int v) const {
  std::vector<int> out;
  int h0 = vertexRep_[v];
  int h = h0;
  do {
    out.push_back(h);
    h = rotateCcw(h);
  } while (h != h0);
  return out;
}

std::vector<int> Surface::faceWalk(int f) const {
  std::vector<int> out;
  for (int rep : faceCycles_[f]) {
    int h = rep;
    do {
      out.push_back(h);
      h = next_[h];
    } while (h != rep);
  }
  return out;
}

int Surface::faceCornerCount(int f) const {
  return static_cast<int>(faceWalk(f).size());
}

void Surface::buildFromWalks(int vertexCount,
                             const std::vector<std::vector<WalkItem>>& walks) {
  while (static_cast<int>(vertexRep_.size()) < vertexCount) addVertex();
  std::map<long long, int> edgeOf;  // token -> half-edge in the token's forward direction
  for (const auto& walk : walks)
    for (const WalkItem& it : walk)
      if (!edgeOf.count(it.token))
        edgeOf[it.token] = addEdgePair(it.from, it.to, it.curve);

  for (const auto& walk : walks) {
    require(!walk.empty(), "empty face walk");
    int f = static_cast<int>(faceCycles_.size());
    faceCycles_.push_back({});
    faceChi_.push_back(1);
    faceAlive_.push_back(true);
    std::vector<int> hs;
    for (const WalkItem& it : walk) {
      int h = edgeOf.at(it.token);
      int forwardFrom = origin_[h];
      bool forward = (it.from == forwardFrom && it.to == origin_[h ^ 1]);
      if (!forward)
        require(it.from == origin_[h ^ 1] && it.to == origin_[h],
                "walk item does not match its edge token");
      hs.push_back(forward ? h : h ^ 1);
    }
    for (size_t i = 0; i < hs.size(); ++i) {
      int a = hs[i], b = hs[(i + 1) % hs.size()];
      require(dest(a) == origin_[b], "face walk is not vertex-continuous");
      require(face_[a] == -1, "edge side used by two walks");
      next_[a] = b;
      prev_[b] = a;
      face_[a] = f;
    }
    faceCycles_[f].push_back(hs[0]);
  }
  for (int h = 0; h < halfEdgeCount(); ++h)
    require(face_[h] >= 0, "edge side not covered by any walk");
  for (int v = 0; v < static_cast<int>(vertexRep_.size()); ++v)
    require(vertexRep_[v] >= 0, "isolated vertex");
  validate();
}

std::pair<int, int> Surface::splitEdge(int h) {
  int ht = twin(h);
  int b = origin_[ht];
  int m = addVertex();
  int curve = curveOf(h);
  // Reuse edge(h) for the first piece, allocate the second.
  int h2 = addEdgePair(m, b, curve);
  int h2t = h2 ^ 1;
  // Order around the walk: ... h -> h2 -> (old next of h) ... and on the twin
  // side ... (old prev of ht) -> h2t -> ht ...
  int hn = next_[h];
  int htp = prev_[ht];
  origin_[ht] = m;
  next_[h] = h2;
  prev_[h2] = h;
  next_[h2] = hn;
  prev_[hn] = h2;
  face_[h2] = face_[h];
  if (htp == h) {
    // h and ht were consecutive (dangling vertex b); keep local wiring sane.
    require(false, "splitEdge on a degenerate loop");
  }
  next_[htp] = h2t;
  prev_[h2t] = htp;
  next_[h2t] = ht;
  prev_[ht] = h2t;
  face_[h2t] = face_[ht];
  vertexRep_[m] = h2;
  if (vertexRep_[b] == ht) vertexRep_[b] = h2t;
  return {m, h2};
}

void Surface::setFaceOnCycle(int h, int f) {
  int cur = h;
  do {
    face_[cur] = f;
    cur = next_[cur];
  } while (cur != h);
}

int Surface::insertChord(int hA, int hB, int curve) {
  require(face_[hA] == face_[hB], "chord corners on different faces");
  require(hA != hB, "degenerate chord");
  int f = face_[hA];
  int va = origin_[hA], vb = origin_[hB];
  int pa = prev_[hA], pb = prev_[hB];
  int e1 = addEdgePair(va, vb, curve);  // va -> vb
  int e2 = e1 ^ 1;
  // Cycle side 1: pa -> e1 -> hB ...; side 2: pb -> e2 -> hA ...
  next_[pa] = e1;
  prev_[e1] = pa;
  next_[e1] = hB;
  prev_[hB] = e1;
  next_[pb] = e2;
  prev_[e2] = pb;
  next_[e2] = hA;
  prev_[hA] = e2;

  // Same cycle or different cycles?  Walk from e1; if we reach e2 the two
  // corners were on different cycles...
  bool sameCycle = true;
  {
    int cur = next_[e1];
    while (cur != e1) {
      if (cur == e2) {
        sameCycle = false;
        break;
      }
      cur = next_[cur];
    }
  }
  if (!sameCycle) {
    // Cycles merged: rebuild the face's cycle list.
    std::vector<int> reps;
    reps.push_back(e1);
    // Collect previous cycles that are still separate (not absorbed).
    for (int rep : faceCycles_[f]) {
      int cur = rep;
      bool inMerged = false;
      do {
        if (cur == e1 || cur == e2) {
          inMerged = true;
          break;
        }
        cur = next_[cur];
      } while (cur != rep);
      if (!inMerged) reps.push_back(rep);
    }
    faceCycles_[f] = reps;
    faceChi_[f] += 1;
    setFaceOnCycle(e1, f);
    return e1;
  }

  // Split: the side of e2 becomes a fresh disk face; extras stay with e1.
  int g = static_cast<int>(faceCycles_.size());
  faceCycles_.push_back({e2});
  faceChi_.push_back(1);
  faceAlive_.push_back(true);
  setFaceOnCycle(e2, g);
  std::vector<char> onE1Cycle;
  {
    // Mark the e1 cycle so old reps lying on it are not listed twice.
    onE1Cycle.assign(next_.size(), 0);
    int cur = e1;
    do {
      onE1Cycle[cur] = 1;
      cur = next_[cur];
    } while (cur != e1);
  }
  std::vector<int> reps;
  reps.push_back(e1);
  for (int rep : faceCycles_[f])
    if (face_[rep] == f && !onE1Cycle[rep]) reps.push_back(rep);
  faceCycles_[f] = reps;
  setFaceOnCycle(e1, f);
  return e1;
}

int Surface::addBareFace(int chi) {
  faceCycles_.push_back({});
  faceChi_.push_back(chi);
  faceAlive_.push_back(true);
  return static_cast<int>(faceCycles_.size()) - 1;
}

void Surface::wireFromNextArray(const std::vector<int>& next) {
  require(next.size() == next_.size(), "next array size mismatch");
  for (int h = 0; h < halfEdgeCount(); ++h) {
    require(next[h] >= 0, "incomplete next array");
    next_[h] = next[h];
    prev_[next[h]] = h;
  }
}

void Surface::buildFacesFromOrbits(const std::vector<int>& classOfHalf,
                                   const std::vector<int>& chiOfClass) {
  faceCycles_.clear();
  faceChi_.clear();
  faceAlive_.clear();
  std::vector<int> faceOfClass(chiOfClass.size(), -1);
  std::vector<char> seen(halfEdgeCount(), 0);
  for (int h = 0; h < halfEdgeCount(); ++h) {
    if (seen[h]) continue;
    int cls = classOfHalf[h];
    if (faceOfClass[cls] < 0) {
      faceOfClass[cls] = static_cast<int>(faceCycles_.size());
      faceCycles_.push_back({});
      faceChi_.push_back(chiOfClass[cls]);
      faceAlive_.push_back(true);
    }
    int f = faceOfClass[cls];
    faceCycles_[f].push_back(h);
    int cur = h;
    do {
      require(!seen[cur], "orbit collision");
      seen[cur] = 1;
      require(classOfHalf[cur] == cls, "orbit crosses face classes");
      face_[cur] = f;
      cur = next_[cur];
    } while (cur != h);
  }
}

void Surface::validate() const {
  int H = halfEdgeCount();
  for (int h = 0; h < H; ++h) {
    require(next_[h] >= 0 && prev_[h] >= 0, "unwired half-edge");
    require(prev_[next_[h]] == h && next_[prev_[h]] == h,
            "next/prev not inverse");
    require(origin_[next_[h]] == origin_[h ^ 1], "next does not continue");
    require(face_[next_[h]] == face_[h], "face changes along next");
  }
  // Faces: cycles must cover half-edges exactly once.
  std::vector<char> seen(H, 0);
  for (int f = 0; f < static_cast<int>(faceCycles_.size()); ++f) {
    if (!faceAlive_[f]) continue;
    for (int rep : faceCycles_[f]) {
      int h = rep;
      do {
        require(face_[h] == f, "cycle rep face mismatch");
        require(!seen[h], "half-edge on two cycles");
        seen[h] = 1;
        h = next_[h];
      } while (h != rep);
    }
  }
  for (int h = 0; h < H; ++h) require(seen[h], "half-edge on no cycle");
  for (int f = 0; f < static_cast<int>(faceCycles_.size()); ++f)
    if (faceAlive_[f])
      require(faceChi_[f] == 2 - static_cast<int>(faceCycles_[f].size()),
              "face chi inconsistent with cycle count");
  // Vertex stars close up.
  for (int v = 0; v < static_cast<int>(vertexRep_.size()); ++v) {
    if (!vertexAlive_[v]) continue;
    int h0 = vertexRep_[v];
    require(origin_[h0] == v, "vertex rep mismatch");
    int h = h0;
    int guard = 0;
    do {
      require(origin_[h] == v, "star leaves vertex");
      h = rotateCcw(h);
      require(++guard < H + 1, "vertex star does not close");
    } while (h != h0);
  }
}

int Surface::totalChi() const {
  int c = 0;
  for (int f = 0; f < static_cast<int>(faceChi_.size()); ++f)
    if (faceAlive_[f]) c += faceChi_[f];
  return c;
}

std::string Surface::dump() const {
  std::ostringstream out;
  out << "V=" << vertexCount() << " E=" << edgeCount() << " F=" << faceCount()
      << " chi(V-E+F)=" << vertexCount() - edgeCount() + faceCount() << "\n";
  return out.str();
}

}  // namespace bfh
