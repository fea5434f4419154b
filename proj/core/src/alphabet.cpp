#include "memoryless/alphabet.hpp"

#include <limits>
#include <string>

#include "memoryless/error.hpp"

namespace memoryless {

Alphabet::Alphabet(int q, int n) : q_(q), n_(n), size_(1) {
  if (q < 2) throw InvalidArgumentError("alphabet size q must be at least 2, got " + std::to_string(q));
  if (n < 1) throw InvalidArgumentError("register count n must be at least 1, got " + std::to_string(n));
  if (q > std::numeric_limits<Value>::max()) throw InvalidArgumentError("alphabet size q too large");
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::uint64_t>(q);
    if (size > std::numeric_limits<StateIndex>::max()) {
      throw TooLargeError("q^n exceeds the state index range for q=" + std::to_string(q) +
                          ", n=" + std::to_string(n));
    }
  }
  size_ = static_cast<StateIndex>(size);
  strides_.assign(static_cast<std::size_t>(n) + 1, 1);
  for (int j = n - 1; j >= 0; --j) strides_[j] = strides_[j + 1] * static_cast<StateIndex>(q);
}

StateIndex state_index(std::span<const Value> state, const Alphabet& alphabet) {
  if (state.size() != static_cast<std::size_t>(alphabet.n())) {
    throw InvalidStateError("state has " + std::to_string(state.size()) + " coordinates, expected " +
                            std::to_string(alphabet.n()));
  }
  StateIndex index = 0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] >= alphabet.q()) {
      throw InvalidStateError("coordinate " + std::to_string(i + 1) + " has value " + std::to_string(state[i]) +
                              " >= q=" + std::to_string(alphabet.q()));
    }
    index = index * static_cast<StateIndex>(alphabet.q()) + state[i];
  }
  return index;
}

State index_state(StateIndex index, const Alphabet& alphabet) {
  if (index >= alphabet.size()) {
    throw InvalidStateError("state index " + std::to_string(index) + " out of range");
  }
  State state(static_cast<std::size_t>(alphabet.n()));
  for (int j = 1; j <= alphabet.n(); ++j) state[j - 1] = alphabet.coordinate(index, j);
  return state;
}

void require_same(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) {
    throw AlphabetMismatchError("alphabet mismatch: (q=" + std::to_string(a.q()) + ", n=" + std::to_string(a.n()) +
                                ") vs (q=" + std::to_string(b.q()) + ", n=" + std::to_string(b.n()) + ")");
  }
}

}  // namespace memoryless
