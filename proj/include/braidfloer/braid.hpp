#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bfh {

// A braid word: strand count plus a sequence of signed Artin letters.
// Letter k (1-based, sign carried) stands for the generator swapping
// strands k and k+1.  The strand count is explicit input so identity
// braids on several strands are expressible.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // value in {+-1, ..., +-(strands-1)}, never 0

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

// Cycle decomposition of the permutation induced by a braid word.
struct ClosureStructure {
  std::vector<int> permutation;             // 0-based: strand i ends at permutation[i]
  std::vector<std::vector<int>> components; // cycles, each sorted, strands 0-based
  int componentCount() const { return static_cast<int>(components.size()); }
  // componentOf[i] = index of the cycle containing strand i
  std::vector<int> componentOf;
};

// Parses whitespace/comma separated tokens: "3" / "-3" / "s3" / "S3".
// Throws ParseError naming the offending token and its position.
BraidWord parseBraidWord(const std::string& text, int strands);

std::string serializeBraidWord(const BraidWord& w);

ClosureStructure closureStructure(const BraidWord& w);

// Reverses the letter order and flips every sign.  The closure of the
// result is the mirror of the closure of the input.
BraidWord reverseInvert(const BraidWord& w);

// Words related to w by random conjugations and positive stabilizations;
// entry k is obtained from entry k-1 by one more move, entry 0 is w itself.
// All closures are isotopic links.
std::vector<BraidWord> markovVariants(const BraidWord& w, std::uint64_t seed,
                                      int moves);

}  // namespace bfh
