#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "memoryless/alphabet.hpp"
#include "memoryless/bigint.hpp"
#include "memoryless/permutation.hpp"

namespace memoryless {

// A permutation of A^n that rewrites a single register j. table()[s] is the new
// value of register j on input state s. The identity is an instruction too and
// carries reg() == 0 with an empty table.
class Instruction {
 public:
  static Instruction identity(const Alphabet& alphabet);

  // Validates the fiber bijection: for every assignment of the other registers,
  // x_j -> table is a permutation of A. A table that never changes register j
  // yields the identity instruction.
  static Instruction from_table(const Alphabet& alphabet, int reg, std::vector<Value> table);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int reg() const noexcept { return reg_; }
  bool is_identity() const noexcept { return reg_ == 0; }
  std::span<const Value> table() const noexcept { return table_; }

  StateIndex operator()(StateIndex s) const noexcept {
    return is_identity() ? s : alphabet_.with_coordinate(s, reg_, table_[s]);
  }

  Permutation to_permutation() const;

  friend bool operator==(const Instruction& a, const Instruction& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.reg_ == b.reg_ && a.table_ == b.table_;
  }

 private:
  friend void for_each_instruction(const Alphabet&, const std::function<void(const Instruction&)>&, std::uint64_t);

  Instruction(const Alphabet& alphabet, int reg, std::vector<Value> table)
      : alphabet_(alphabet), reg_(reg), table_(std::move(table)) {}

  Alphabet alphabet_;
  int reg_;
  std::vector<Value> table_;
};

// Present iff f updates at most one register.
std::optional<Instruction> as_instruction(const Permutation& f);

struct Program {
  explicit Program(const Alphabet& alphabet) : alphabet(alphabet) {}
  Program(const Alphabet& alphabet, std::vector<Instruction> steps);

  Alphabet alphabet;
  std::vector<Instruction> steps;

  std::size_t length() const noexcept { return steps.size(); }
};

// n * ((q!)^(q^(n-1)) - 1): number of non-identity instructions.
BigInt instruction_count(const Alphabet& alphabet);

// Visits every non-identity instruction once: ascending register, then
// ascending table in lexicographic order. Throws TooLargeError when the count
// exceeds cap.
void for_each_instruction(const Alphabet& alphabet, const std::function<void(const Instruction&)>& visit,
                          std::uint64_t cap = kDefaultCap);

std::vector<Instruction> enumerate_instructions(const Alphabet& alphabet, std::uint64_t cap = kDefaultCap);

}  // namespace memoryless
