#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "memoryless/alphabet.hpp"

namespace memoryless {

// A bijection of A^n stored as a dense image table: images()[s] is the index of
// f(state(s)).
class Permutation {
 public:
  explicit Permutation(const Alphabet& alphabet);  // identity

  // Validates that images is a bijection of {0, ..., q^n - 1}.
  static Permutation from_images(const Alphabet& alphabet, std::vector<StateIndex> images);
  static Permutation from_cycles(const Alphabet& alphabet, const std::vector<std::vector<StateIndex>>& cycles);
  static Permutation transposition(const Alphabet& alphabet, StateIndex a, StateIndex b);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  StateIndex degree() const noexcept { return static_cast<StateIndex>(images_.size()); }
  std::span<const StateIndex> images() const noexcept { return images_; }
  StateIndex operator()(StateIndex s) const noexcept { return images_[s]; }

  // f_j(s): value of register j in the image of s.
  Value coordinate(StateIndex s, int reg) const noexcept { return alphabet_.coordinate(images_[s], reg); }

  bool is_identity() const noexcept;
  // Index of the first state that is not fixed, or degree() for the identity.
  StateIndex first_moved() const noexcept;

  friend bool operator==(const Permutation& f, const Permutation& g) noexcept {
    return f.alphabet_ == g.alphabet_ && f.images_ == g.images_;
  }

 private:
  Permutation(const Alphabet& alphabet, std::vector<StateIndex> images) noexcept
      : alphabet_(alphabet), images_(std::move(images)) {}

  friend Permutation compose(const Permutation& f, const Permutation& g);
  friend Permutation inverse(const Permutation& f);

  Alphabet alphabet_;
  std::vector<StateIndex> images_;
};

// f o g: apply g first, then f.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
Permutation power(const Permutation& f, std::int64_t exponent);
// h^-1 o g o h.
Permutation conjugate(const Permutation& h, const Permutation& g);

struct CycleDecomposition {
  // Each cycle starts at its smallest point; cycles are sorted by that point.
  std::vector<std::vector<StateIndex>> cycles;
  int sign = 1;
};

CycleDecomposition cycle_decomposition(const Permutation& f);
int sign(const Permutation& f);
// Least common multiple of the cycle lengths.
std::uint64_t order(const Permutation& f);

// Registers j (1-based, ascending) whose coordinate function differs from x_j.
std::vector<int> updated_registers(const Permutation& f);

// Registers k (ascending) on which the coordinate function f_j depends.
std::vector<int> essential_variables(const Permutation& f, int reg);

// Largest essential arity over all coordinate functions.
int arity(const Permutation& f);

// Membership in U = Sym(A) wr Sym(n).
bool is_unary_permutation(const Permutation& f);

}  // namespace memoryless
