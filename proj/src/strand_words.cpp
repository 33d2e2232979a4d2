#include "braidfloer/strand_words.hpp"

#include <algorithm>
#include <sstream>

#include "braidfloer/errors.hpp"

namespace bfh {

std::pair<Cell, Cell> cellsOf(const Crossing& c) {
  Cell from{}, to{};
  switch (c.kind) {
    case RefKind::AlphaUpper:
      from = Cell{true, c.index};
      to = Cell{true, c.index + 1};
      break;
    case RefKind::AlphaLower:
      from = Cell{false, c.index};
      to = Cell{false, c.index + 1};
      break;
    case RefKind::SeamLeft:
      from = Cell{true, c.index};
      to = Cell{false, c.index};
      break;
    case RefKind::SeamRight:
      from = Cell{true, c.index + 1};
      to = Cell{false, c.index + 1};
      break;
  }
  if (!c.forward) std::swap(from, to);
  return {from, to};
}

TwistedSide TwistedSide::identity(int n) {
  require(n >= 1, "strand count must be positive");
  TwistedSide side;
  side.strands = n;
  for (int s = 1; s <= n - 1; ++s) {
    StrandWord w;
    w.id = s;
    // The base pushoff crosses the upper alpha half westward, then dives
    // through the row piece left of the pivot.
    w.word.push_back(Crossing{RefKind::AlphaUpper, s, false});
    w.word.push_back(Crossing{RefKind::SeamLeft, s, true});
    side.beta.push_back(std::move(w));
  }
  return side;
}

void TwistedSide::validate() const {
  for (const StrandWord& s : beta) {
    Cell cur = s.startCell();
    for (const Crossing& c : s.word) {
      auto [from, to] = cellsOf(c);
      require(from == cur, "strand word discontinuous at " + debugString(c) +
                               " in " + debugString(s));
      cur = to;
    }
    require(cur == s.endCell(),
            "strand word ends in the wrong cell: " + debugString(s));
  }
}

namespace {

// Replacement rules for a crossing of the twisted row arc, stated for a
// downward traversal.  An upward crossing uses the reversed rule with all
// directions flipped.
std::vector<Crossing> twistReplacement(const Crossing& c, int arc, int sign) {
  const int i = arc;
  std::vector<Crossing> out;
  bool left = (c.kind == RefKind::SeamLeft);
  if (sign > 0) {
    if (left) {
      out = {Crossing{RefKind::SeamRight, i - 1, true},
             Crossing{RefKind::AlphaLower, i, true},
             Crossing{RefKind::SeamRight, i, false},
             Crossing{RefKind::SeamLeft, i + 1, true},
             Crossing{RefKind::AlphaLower, i, false}};
    } else {
      out = {Crossing{RefKind::AlphaUpper, i, false},
             Crossing{RefKind::SeamRight, i - 1, true},
             Crossing{RefKind::SeamLeft, i, false},
             Crossing{RefKind::AlphaUpper, i, true},
             Crossing{RefKind::SeamLeft, i + 1, true}};
    }
  } else {
    if (left) {
      out = {Crossing{RefKind::AlphaUpper, i, true},
             Crossing{RefKind::SeamLeft, i + 1, true},
             Crossing{RefKind::SeamRight, i, false},
             Crossing{RefKind::AlphaUpper, i, false},
             Crossing{RefKind::SeamRight, i - 1, true}};
    } else {
      out = {Crossing{RefKind::SeamLeft, i + 1, true},
             Crossing{RefKind::AlphaLower, i, false},
             Crossing{RefKind::SeamLeft, i, false},
             Crossing{RefKind::SeamRight, i - 1, true},
             Crossing{RefKind::AlphaLower, i, true}};
    }
  }
  if (!c.forward) {
    std::reverse(out.begin(), out.end());
    for (Crossing& x : out) x.forward = !x.forward;
  }
  return out;
}

bool sameEdge(const Crossing& a, const Crossing& b) {
  return a.kind == b.kind && a.index == b.index;
}

bool isAlphaKind(RefKind k) {
  return k == RefKind::AlphaUpper || k == RefKind::AlphaLower;
}

RefKind oppositeAtPivot(RefKind k) {
  switch (k) {
    case RefKind::AlphaUpper:
      return RefKind::AlphaLower;
    case RefKind::AlphaLower:
      return RefKind::AlphaUpper;
    case RefKind::SeamLeft:
      return RefKind::SeamRight;
    case RefKind::SeamRight:
      return RefKind::SeamLeft;
  }
  return k;
}

// All four edges meeting at pivot i carry index i.
bool pivotTriple(const Crossing& a, const Crossing& b, const Crossing& c) {
  if (a.index != b.index || b.index != c.index) return false;
  if (a.kind != oppositeAtPivot(c.kind)) return false;
  return isAlphaKind(a.kind) != isAlphaKind(b.kind);
}

// A strand passing a pivot diagonally can cross either the upper or the
// lower alpha stem; both routes are minimal and isotopic across the pivot.
// Canonical form routes every diagonal pass through the upper half.
bool diagonalLowerPass(const Crossing& a, const Crossing& b, Crossing* outA,
                       Crossing* outB) {
  if (a.index != b.index) return false;
  bool aAlpha = isAlphaKind(a.kind);
  bool bAlpha = isAlphaKind(b.kind);
  if (aAlpha == bAlpha) return false;
  const Crossing& alpha = aAlpha ? a : b;
  const Crossing& seam = aAlpha ? b : a;
  if (alpha.kind != RefKind::AlphaLower) return false;
  // The pair must chain through a lower cell and wrap the pivot, which is
  // automatic once both letters share the pivot index and one is the lower
  // alpha stem adjacent to the seam piece crossed.
  Crossing newAlpha{RefKind::AlphaUpper, alpha.index, alpha.forward};
  Crossing newSeam{oppositeAtPivot(seam.kind), seam.index, seam.forward};
  // Rerouting swaps which curve is crossed first.
  if (aAlpha) {
    *outA = newSeam;
    *outB = newAlpha;
  } else {
    *outA = newAlpha;
    *outB = newSeam;
  }
  return true;
}

}  // namespace

void TwistedSide::applyTwist(int arc, int sign) {
  require(arc >= 1 && arc <= strands - 1, "twist arc index out of range");
  require(sign == 1 || sign == -1, "twist sign must be +-1");
  for (StrandWord& s : beta) {
    std::vector<Crossing> next;
    next.reserve(s.word.size() * 3);
    for (const Crossing& c : s.word) {
      bool onTwistedSeam =
          (c.kind == RefKind::SeamLeft && c.index == arc) ||
          (c.kind == RefKind::SeamRight && c.index == arc);
      if (onTwistedSeam) {
        auto repl = twistReplacement(c, arc, sign);
        next.insert(next.end(), repl.begin(), repl.end());
      } else {
        next.push_back(c);
      }
    }
    s.word = std::move(next);
  }
}

int TwistedSide::reduce() {
  int removed = 0;
  for (StrandWord& s : beta) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Crossing>& w = s.word;
      for (size_t k = 0; k + 1 < w.size(); ++k) {
        if (sameEdge(w[k], w[k + 1])) {
          require(w[k].forward != w[k + 1].forward,
                  "adjacent same-direction crossings of one edge");
          w.erase(w.begin() + k, w.begin() + k + 2);
          removed += 2;
          changed = true;
          break;
        }
        if (k + 2 < w.size() && pivotTriple(w[k], w[k + 1], w[k + 2])) {
          Cell before = cellsOf(w[k]).first;
          Cell after = cellsOf(w[k + 2]).second;
          Crossing repl{oppositeAtPivot(w[k + 1].kind), w[k].index, true};
          if (!(cellsOf(repl).first == before)) repl.forward = false;
          require(cellsOf(repl).first == before && cellsOf(repl).second == after,
                  "pivot triple does not wrap");
          w[k] = repl;
          w.erase(w.begin() + k + 1, w.begin() + k + 3);
          removed += 2;
          changed = true;
          break;
        }
        Crossing ca, cb;
        if (diagonalLowerPass(w[k], w[k + 1], &ca, &cb)) {
          w[k] = ca;
          w[k + 1] = cb;
          changed = true;
          break;
        }
      }
    }
  }
  return removed;
}

int TwistedSide::alphaHitsUpper(int arc) const {
  int c = 0;
  for (const StrandWord& s : beta)
    for (const Crossing& x : s.word)
      if (x.kind == RefKind::AlphaUpper && x.index == arc) ++c;
  return c;
}

int TwistedSide::alphaHitsLower(int arc) const {
  int c = 0;
  for (const StrandWord& s : beta)
    for (const Crossing& x : s.word)
      if (x.kind == RefKind::AlphaLower && x.index == arc) ++c;
  return c;
}

int TwistedSide::alphaHits(int arc) const {
  return alphaHitsUpper(arc) + alphaHitsLower(arc);
}

int TwistedSide::seamHitsLeft(int arcIndex) const {
  int c = 0;
  for (const StrandWord& s : beta)
    for (const Crossing& x : s.word)
      if (x.kind == RefKind::SeamLeft && x.index == arcIndex) ++c;
  return c;
}

int TwistedSide::seamHitsRight(int arcIndex) const {
  int c = 0;
  for (const StrandWord& s : beta)
    for (const Crossing& x : s.word)
      if (x.kind == RefKind::SeamRight && x.index == arcIndex) ++c;
  return c;
}

int TwistedSide::seamHits(int arcIndex) const {
  return seamHitsLeft(arcIndex) + seamHitsRight(arcIndex);
}

int TwistedSide::twistedVertexCount() const {
  int c = 0;
  for (const StrandWord& s : beta)
    for (const Crossing& x : s.word)
      if (isAlphaKind(x.kind)) ++c;
  return c;
}

std::string debugString(const Crossing& c) {
  std::ostringstream out;
  switch (c.kind) {
    case RefKind::AlphaUpper:
      out << "Au";
      break;
    case RefKind::AlphaLower:
      out << "Al";
      break;
    case RefKind::SeamLeft:
      out << "Sl";
      break;
    case RefKind::SeamRight:
      out << "Sr";
      break;
  }
  out << c.index << (c.forward ? "+" : "-");
  return out.str();
}

std::string debugString(const StrandWord& s) {
  std::ostringstream out;
  out << "b" << s.id << ":[";
  for (size_t i = 0; i < s.word.size(); ++i) {
    if (i) out << ' ';
    out << debugString(s.word[i]);
  }
  out << ']';
  return out.str();
}

}  // namespace bfh
