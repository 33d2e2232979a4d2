#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bfh {

// Combinatorics of the twisted side of the splitting sphere.
//
// The twisted disk carries n punctures on a horizontal row.  The reference
// complex consists of the vertical alpha arcs (arc i crosses the row at a
// pivot point between punctures i and i+1) and the row itself, split into
// seam pieces.  Cells of the complex are U(j) / L(j), the parts of the
// upper/lower half-disk between arcs j-1 and j.
//
// Each beta strand is stored as its ordered crossing sequence with the
// reference edges.  A half-twist is a local substitution on that word; a
// trivial bigon is an adjacent cancelling pair (or a wrap around a pivot).

enum class RefKind : std::uint8_t {
  AlphaUpper,  // upper half of alpha arc i, separates U(i) | U(i+1)
  AlphaLower,  // lower half of alpha arc i, separates L(i) | L(i+1)
  SeamLeft,    // row piece left of pivot j (touches puncture j):  U(j) | L(j)
  SeamRight,   // row piece right of pivot j (touches puncture j+1): U(j+1) | L(j+1)
};

struct Crossing {
  RefKind kind;
  int index;     // alpha arcs: 1..n-1; SeamLeft: 1..n; SeamRight: 0..n-1
  bool forward;  // alpha: crossing west->east; seam: crossing downward

  bool operator==(const Crossing&) const = default;
};

struct Cell {
  bool upper;
  int j;  // 1..n
  bool operator==(const Cell&) const = default;
};

// (from, to) cells of a crossing traversed in its stored direction.
std::pair<Cell, Cell> cellsOf(const Crossing& c);

// One beta strand of the twisted side.
struct StrandWord {
  int id = 0;  // strand index s in 1..n-1
  std::vector<Crossing> word;

  Cell startCell() const { return Cell{true, id + 1}; }
  Cell endCell() const { return Cell{false, id}; }
};

// The full twisted-side state: one word per beta strand.
struct TwistedSide {
  int strands = 1;  // n
  std::vector<StrandWord> beta;

  static TwistedSide identity(int n);

  // Checks cell continuity of every word, including the fixed endpoints.
  void validate() const;

  // Substitutes the half-twist along arc i (sign +-1) into every word.
  // Does not reduce.
  void applyTwist(int arc, int sign);

  // Removes trivial bigons: cancels adjacent opposite crossings of the
  // same reference edge and unwraps pivot triples, innermost first, until
  // no move applies.  Returns the number of crossings removed.
  int reduce();

  // Intersection tallies.
  int alphaHits(int arc) const;        // A_i
  int alphaHitsUpper(int arc) const;   // A_i^+
  int alphaHitsLower(int arc) const;   // A_i^-
  int seamHits(int arcIndex) const;    // crossings with row arc j, j in 0..n
  int seamHitsLeft(int arcIndex) const;
  int seamHitsRight(int arcIndex) const;
  // Total alpha/beta intersections of the twisted side.
  int twistedVertexCount() const;
};

std::string debugString(const Crossing& c);
std::string debugString(const StrandWord& s);

}  // namespace bfh
