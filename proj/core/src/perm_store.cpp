#include "memoryless/perm_store.hpp"

#include <algorithm>

namespace memoryless {

PermutationStore::PermutationStore(StateIndex degree) : degree_(degree), slots_(1024, kNone) {}

std::uint64_t PermutationStore::hash(std::span<const StateIndex> images) noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (StateIndex x : images) {
    h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ULL;
  }
  h ^= h >> 31;
  return h;
}

std::size_t PermutationStore::probe(std::span<const StateIndex> images, std::uint64_t h) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = h & mask;
  while (true) {
    const Id id = slots_[slot];
    if (id == kNone) return slot;
    if (hashes_[id] == h && std::equal(images.begin(), images.end(), get(id).begin())) return slot;
    slot = (slot + 1) & mask;
  }
}

void PermutationStore::grow() {
  std::vector<Id> bigger(slots_.size() * 2, kNone);
  const std::size_t mask = bigger.size() - 1;
  for (Id id = 0; id < hashes_.size(); ++id) {
    std::size_t slot = hashes_[id] & mask;
    while (bigger[slot] != kNone) slot = (slot + 1) & mask;
    bigger[slot] = id;
  }
  slots_ = std::move(bigger);
}

std::pair<PermutationStore::Id, bool> PermutationStore::insert(std::span<const StateIndex> images) {
  const std::uint64_t h = hash(images);
  std::size_t slot = probe(images, h);
  if (slots_[slot] != kNone) return {slots_[slot], false};
  const Id id = static_cast<Id>(hashes_.size());
  arena_.insert(arena_.end(), images.begin(), images.end());
  hashes_.push_back(h);
  slots_[slot] = id;
  if (hashes_.size() * 2 > slots_.size()) grow();
  return {id, true};
}

PermutationStore::Id PermutationStore::find(std::span<const StateIndex> images) const {
  return slots_[probe(images, hash(images))];
}

}  // namespace memoryless
