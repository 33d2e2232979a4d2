#pragma once

// Internal: builds the scaffolded sphere arrangement from strand words and
// freezes it into the pure alpha/beta diagram.

#include <map>
#include <vector>

#include "braidfloer/diagram.hpp"
#include "braidfloer/strand_words.hpp"
#include "braidfloer/surface.hpp"

namespace bfh {
namespace detail {

struct RefEdgeMark {
  int plate = -1;  // 0 = twisted (lower, w side), 1 = fixed (upper, z side)
  RefKind kind = RefKind::AlphaUpper;
  int index = -1;
  bool valid() const { return plate >= 0; }
};

struct ScaffoldBuild {
  Surface surf;
  int n = 1;
  std::vector<RefEdgeMark> edgeMark;          // by edge id
  std::vector<Cell> faceCell;                 // by face id (plate from context)
  std::vector<int> facePlate;                 // by face id
  std::vector<int> puncture[2];               // [plate][j], j in 1..n (index 0 unused)
  std::vector<int> alphaCurve, betaCurve;     // curve ids by strand index 1..n-1
  std::vector<int> upperAlphaCross;           // old vertex id per strand 1..n-1
};

// Builds the reference complex for both plates and inserts all strands:
// the twisted side from `lower`, the fixed side from the identity words.
ScaffoldBuild buildArrangement(const TwistedSide& lower);

// Drops seams and equator, keeps basepoints as whisker slits.
FrozenDiagram freezeArrangement(const ScaffoldBuild& sb,
                                const ClosureStructure& closure);

}  // namespace detail
}  // namespace bfh
