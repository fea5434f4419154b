#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace memoryless {

using StateIndex = std::uint32_t;
using Value = std::uint16_t;

// Default guard for anything enumerated element by element.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// The state space A^n with A = {0, ..., q-1}. Registers are numbered 1..n and
// register 1 is the most significant digit of the canonical index.
class Alphabet {
 public:
  Alphabet(int q, int n);

  int q() const noexcept { return q_; }
  int n() const noexcept { return n_; }
  StateIndex size() const noexcept { return size_; }

  // q^(n-j): the index step of register j.
  StateIndex stride(int reg) const noexcept { return strides_[reg]; }

  Value coordinate(StateIndex s, int reg) const noexcept {
    return static_cast<Value>((s / strides_[reg]) % static_cast<StateIndex>(q_));
  }

  StateIndex with_coordinate(StateIndex s, int reg, Value v) const noexcept {
    return s - coordinate(s, reg) * strides_[reg] + v * strides_[reg];
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.q_ == b.q_ && a.n_ == b.n_;
  }

 private:
  int q_;
  int n_;
  StateIndex size_;
  std::vector<StateIndex> strides_;  // 1-based; strides_[0] = q^n
};

// A point of A^n; coords[0] is register 1.
using State = std::vector<Value>;

StateIndex state_index(std::span<const Value> state, const Alphabet& alphabet);
State index_state(StateIndex index, const Alphabet& alphabet);

// Throws AlphabetMismatchError unless a == b.
void require_same(const Alphabet& a, const Alphabet& b);

}  // namespace memoryless
