#include "braidfloer/braid.hpp"

#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "braidfloer/errors.hpp"

namespace bfh {

namespace {

void checkLetter(int letter, int strands, int position) {
  if (letter == 0)
    throw ParseError("letter 0 at position " + std::to_string(position) +
                     ": generator indices start at 1");
  int idx = letter < 0 ? -letter : letter;
  if (idx > strands - 1)
    throw ParseError("letter " + std::to_string(letter) + " at position " +
                     std::to_string(position) + " out of range for " +
                     std::to_string(strands) + " strands");
}

}  // namespace

BraidWord parseBraidWord(const std::string& text, int strands) {
  if (strands < 1) throw ParseError("strand count must be positive");
  BraidWord w;
  w.strands = strands;
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream in(normalized);
  std::string tok;
  int position = 0;
  while (in >> tok) {
    ++position;
    int sign = 1;
    std::string digits = tok;
    if (digits[0] == 's') {
      digits = digits.substr(1);
    } else if (digits[0] == 'S') {
      sign = -1;
      digits = digits.substr(1);
    }
    if (!digits.empty() && digits[0] == '-') {
      sign = -sign;
      digits = digits.substr(1);
    }
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed token '" + tok + "' at position " +
                       std::to_string(position));
    long value = 0;
    try {
      value = std::stol(digits);
    } catch (const std::exception&) {
      throw ParseError("malformed token '" + tok + "' at position " +
                       std::to_string(position));
    }
    int letter = static_cast<int>(sign * value);
    checkLetter(letter, strands, position);
    w.letters.push_back(letter);
  }
  return w;
}

std::string serializeBraidWord(const BraidWord& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    out << w.letters[i];
  }
  return out.str();
}

ClosureStructure closureStructure(const BraidWord& w) {
  int n = w.strands;
  ClosureStructure cs;
  cs.permutation.resize(n);
  std::iota(cs.permutation.begin(), cs.permutation.end(), 0);
  // positions[p] = strand currently at position p; apply transpositions in
  // word order, then read off where each strand ends.
  std::vector<int> positions(n);
  std::iota(positions.begin(), positions.end(), 0);
  for (int letter : w.letters) {
    int i = (letter < 0 ? -letter : letter) - 1;
    std::swap(positions[i], positions[i + 1]);
  }
  for (int p = 0; p < n; ++p) cs.permutation[positions[p]] = p;

  cs.componentOf.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (cs.componentOf[start] >= 0) continue;
    std::vector<int> cycle;
    int cur = start;
    while (cs.componentOf[cur] < 0) {
      cs.componentOf[cur] = static_cast<int>(cs.components.size());
      cycle.push_back(cur);
      cur = cs.permutation[cur];
    }
    std::sort(cycle.begin(), cycle.end());
    cs.components.push_back(std::move(cycle));
  }
  return cs;
}

BraidWord reverseInvert(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (int& l : out.letters) l = -l;
  return out;
}

std::vector<BraidWord> markovVariants(const BraidWord& w, std::uint64_t seed,
                                      int moves) {
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> chain;
  chain.push_back(w);
  for (int step = 0; step < moves; ++step) {
    BraidWord next = chain.back();
    bool canConjugate = next.strands >= 2;
    bool stabilize = !canConjugate || (rng() % 3 == 0);
    if (stabilize) {
      next.letters.push_back(next.strands);  // positive stabilization
      next.strands += 1;
    } else {
      std::uniform_int_distribution<int> pick(1, next.strands - 1);
      int i = pick(rng);
      int s = (rng() % 2 == 0) ? 1 : -1;
      next.letters.insert(next.letters.begin(), s * i);
      next.letters.push_back(-s * i);
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace bfh
