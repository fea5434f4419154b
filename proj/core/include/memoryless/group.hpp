#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "memoryless/alphabet.hpp"
#include "memoryless/bigint.hpp"
#include "memoryless/permutation.hpp"

namespace memoryless {

// Stabilizer chain with a verified strong generating set. Level k holds base
// point b_k, the strong generators fixing b_0..b_{k-1} that were introduced at
// that level, and one coset representative u_y (with u_y(b_k) = y) per orbit
// point y of b_k.
class GroupChain {
 public:
  struct Level {
    StateIndex base_point = 0;
    std::vector<Permutation> generators;
    std::vector<StateIndex> orbit;  // in discovery order, starts with base_point
    std::vector<int> rep_index;     // per point: index into reps, or -1
    std::vector<Permutation> reps;
    std::vector<Permutation> inverse_reps;
  };

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  StateIndex degree() const noexcept { return alphabet_.size(); }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<StateIndex> base() const;
  std::vector<Permutation> strong_generators() const;
  // Input generators, identity elements dropped.
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  BigInt order() const;
  bool contains(const Permutation& g) const;

 private:
  friend GroupChain build_chain(const Alphabet& alphabet, const std::vector<Permutation>& gens);
  explicit GroupChain(const Alphabet& alphabet) : alphabet_(alphabet) {}

  using Images = std::vector<StateIndex>;
  std::size_t sift_level(Images& g, std::size_t from) const;
  void add_generator(std::size_t level, const Images& g);
  void add_to_orbit(std::size_t level, const Images& h);
  Permutation wrap(Images images) const;

  Alphabet alphabet_;
  std::vector<Level> levels_;
  std::vector<Permutation> generators_;
};

// Deterministic Schreier-Sims; base points are chosen as the first point moved
// by the element that forces a new level.
GroupChain build_chain(const std::vector<Permutation>& gens);
GroupChain build_chain(const Alphabet& alphabet, const std::vector<Permutation>& gens);

inline BigInt group_order(const GroupChain& chain) { return chain.order(); }
bool is_member(const Permutation& g, const GroupChain& chain);

enum class GroupTag { Symmetric, Alternating, AffineOverGF2, Other };

struct GroupIdentity {
  GroupTag tag = GroupTag::Other;
  BigInt order;
};

std::string to_string(GroupTag tag);

BigInt symmetric_order(const Alphabet& alphabet);
BigInt alternating_order(const Alphabet& alphabet);
// |AGL(n, 2)| = 2^n * prod_{i<n} (2^n - 2^i).
BigInt affine_gf2_order(int n);

GroupIdentity identify_group(const GroupChain& chain, const Alphabet& alphabet);

bool is_transitive(const GroupChain& chain);
bool is_2transitive(const GroupChain& chain);

// Orbits of <gens> on {0, ..., q^n - 1}, each sorted, ordered by least point.
std::vector<std::vector<StateIndex>> orbits(const Alphabet& alphabet, const std::vector<Permutation>& gens);

// Visits every element once as a product of transversal representatives.
// Throws TooLargeError (with the exact order) when the order exceeds cap.
void for_each_element(const GroupChain& chain, const std::function<void(const Permutation&)>& visit,
                      std::uint64_t cap = kDefaultCap);
std::vector<Permutation> elements(const GroupChain& chain, std::uint64_t cap = kDefaultCap);

// Small generating sets for Sym(A^n) and Alt(A^n) on the canonical indices.
std::vector<Permutation> symmetric_group_generators(const Alphabet& alphabet);
std::vector<Permutation> alternating_group_generators(const Alphabet& alphabet);

}  // namespace memoryless
