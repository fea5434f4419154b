#pragma once

#include <string>
#include <vector>

#include "memoryless/alphabet.hpp"
#include "memoryless/instruction.hpp"

namespace memoryless {

// Reflected mixed-radix Gray order of A^n: register n varies fastest and runs
// descending whenever the Gray position of the more significant prefix is odd.
struct GraySequence {
  explicit GraySequence(const Alphabet& alphabet) : alphabet(alphabet) {}

  Alphabet alphabet;
  std::vector<StateIndex> order;     // canonical index at each Gray position
  std::vector<StateIndex> position;  // Gray position of each canonical index

  // 1-based Gray labels.
  StateIndex label(StateIndex index) const { return position[index] + 1; }
  StateIndex from_label(StateIndex label) const { return order[label - 1]; }
};

GraySequence gray_sequence(const Alphabet& alphabet);

// 1-based lexicographic labels.
inline StateIndex lex_label(StateIndex index) { return index + 1; }
inline StateIndex from_lex_label(StateIndex label) { return label - 1; }

enum class LabelStyle { Canonical, Lexicographic, Gray };

// Label of a canonical index: 0-based index, 1-based lexicographic, or 1-based
// Gray position.
StateIndex state_label(StateIndex index, LabelStyle style, const GraySequence& gray);

// Cycle notation such as "(1,2,3)(6,7)"; "()" for the identity.
std::string format_cycles(const Permutation& f, LabelStyle style);

// The q^n - 1 adjacent transpositions of the Gray order, as instructions.
std::vector<Instruction> coxeter_instructions(const Alphabet& alphabet);

}  // namespace memoryless
