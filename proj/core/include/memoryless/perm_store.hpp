#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "memoryless/alphabet.hpp"

namespace memoryless {

// Interning table for image arrays of one fixed degree. Arrays live back to
// back in one arena; an open-addressing index keyed by a 64-bit hash resolves
// collisions by full comparison. Ids are dense and assigned in insertion order.
class PermutationStore {
 public:
  using Id = std::uint32_t;
  static constexpr Id kNone = std::numeric_limits<Id>::max();

  explicit PermutationStore(StateIndex degree);

  std::pair<Id, bool> insert(std::span<const StateIndex> images);
  Id find(std::span<const StateIndex> images) const;

  std::span<const StateIndex> get(Id id) const {
    return {arena_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }
  std::size_t size() const noexcept { return hashes_.size(); }
  StateIndex degree() const noexcept { return degree_; }

 private:
  static std::uint64_t hash(std::span<const StateIndex> images) noexcept;
  std::size_t probe(std::span<const StateIndex> images, std::uint64_t h) const;
  void grow();

  StateIndex degree_;
  std::vector<StateIndex> arena_;
  std::vector<std::uint64_t> hashes_;
  std::vector<Id> slots_;
};

}  // namespace memoryless
