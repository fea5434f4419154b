#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "memoryless/alphabet.hpp"
#include "memoryless/bigint.hpp"
#include "memoryless/group.hpp"
#include "memoryless/instruction.hpp"
#include "memoryless/perm_store.hpp"
#include "memoryless/permutation.hpp"

namespace memoryless {

struct ExactRational {
  BigInt numerator;
  BigInt denominator = 1;

  std::string str() const;
  friend bool operator==(const ExactRational&, const ExactRational&) = default;
};

// Exact distances from the identity in the Cayley graph of <set> with
// generators set (left multiplication), so distance(f) = L(f, set).
class ComplexityTable {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& instruction_set() const noexcept { return description_; }
  const std::vector<Instruction>& instructions() const noexcept { return instructions_; }

  std::size_t size() const noexcept { return store_.size(); }
  std::uint32_t diameter() const noexcept { return static_cast<std::uint32_t>(histogram_.size()) - 1; }
  // histogram()[d] = number of elements at distance d.
  const std::vector<std::uint64_t>& histogram() const noexcept { return histogram_; }
  ExactRational mean() const;

  std::optional<std::uint32_t> distance(const Permutation& f) const;
  Permutation element(PermutationStore::Id id) const;
  std::uint32_t distance_at(PermutationStore::Id id) const { return distances_[id]; }

 private:
  friend ComplexityTable complexity_table(const Alphabet&, const std::optional<std::vector<Instruction>>&,
                                          std::uint64_t);
  ComplexityTable(const Alphabet& alphabet, std::string description, std::vector<Instruction> instructions)
      : alphabet_(alphabet),
        description_(std::move(description)),
        instructions_(std::move(instructions)),
        store_(alphabet.size()) {}

  Alphabet alphabet_;
  std::string description_;
  std::vector<Instruction> instructions_;
  PermutationStore store_;
  std::vector<std::uint16_t> distances_;
  std::vector<std::uint64_t> histogram_;
};

// Breadth-first search over <set>; set = nullopt means every instruction, which
// needs q^n <= 9. Throws TooLargeError when |<set>| exceeds cap.
ComplexityTable complexity_table(const Alphabet& alphabet, const std::optional<std::vector<Instruction>>& set,
                                 std::uint64_t cap = kDefaultCap);

std::vector<Instruction> all_instructions(const Alphabet& alphabet, std::uint64_t cap = kDefaultCap);
std::vector<Instruction> even_instructions(const Alphabet& alphabet, std::uint64_t cap = kDefaultCap);

struct InternalComputability {
  bool internally_computable = false;
  BigInt group_order;
  BigInt computable_order;  // |<G ∩ I>|
  std::vector<Permutation> instruction_elements;  // non-identity, in enumeration order
};

InternalComputability internal_computability(const std::vector<Permutation>& gens, std::uint64_t cap = kDefaultCap);

struct FastnessReport {
  Permutation g;
  std::vector<Instruction> J;
  std::vector<Instruction> K;
  std::uint32_t lJ = 0;
  std::uint32_t lK = 0;
  bool fast = false;
};

// L(g, J) and L(g, K) by bidirectional search. Requires J ⊆ K (PreconditionError)
// and g ∈ <J> (NotComputableError).
FastnessReport fastness(const Permutation& g, const std::vector<Instruction>& J, const std::vector<Instruction>& K,
                        std::uint64_t node_cap = kDefaultCap);

// L(g) == L(h^-1 g h) over all instructions; h must be unary (PreconditionError).
bool conjugacy_complexity_check(const Permutation& g, const Permutation& h);
bool conjugacy_complexity_check(const Permutation& g, const Permutation& h, const ComplexityTable& full);

// Controlled instructions "apply tau to register j when registers K hold a" for
// every register j, (l-1)-subset K of the others, assignment a, and tau in
// {(0 1), (0 1 ... q-1)}. They generate the group of all l-ary instructions.
std::vector<Instruction> lary_generators(const Alphabet& alphabet, int l);

GroupIdentity lary_group(const Alphabet& alphabet, int l);

// y_2 <- y_2 + y_{l+1}; y_1 <- y_1 + ... + y_l (mod q): each step is l-ary but
// the composite is not. Requires 2 <= l <= n - 1.
Program lary_closure_counterexample(const Alphabet& alphabet, int l);

}  // namespace memoryless
