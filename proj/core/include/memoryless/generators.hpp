#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "memoryless/alphabet.hpp"
#include "memoryless/graycode.hpp"
#include "memoryless/group.hpp"
#include "memoryless/instruction.hpp"

namespace memoryless {

enum class FamilyTarget { Symmetric, Alternating };

std::string to_string(FamilyTarget target);

// How often each displayed branch of a case formula fired while building one
// generator. Every state matches exactly one branch (or the fallback).
struct CaseAudit {
  std::vector<std::string> branches;  // last entry is "otherwise" when present
  std::vector<std::size_t> hits;
};

// n instructions, pis[r - 1] updating register r.
struct GeneratorFamily {
  GeneratorFamily(const Alphabet& alphabet, FamilyTarget target) : alphabet(alphabet), target(target) {}

  Alphabet alphabet;
  FamilyTarget target;
  std::string construction;
  LabelStyle labels = LabelStyle::Lexicographic;  // 1-based numbering the construction is defined over
  std::vector<Instruction> pis;
  std::vector<CaseAudit> audits;
};

// Throws UnsupportedCaseError for q = n = 2.
GeneratorFamily sym_generators(const Alphabet& alphabet);
// Throws UnsupportedCaseError for q = 2.
GeneratorFamily alt_generators(const Alphabet& alphabet);

struct FamilyReport {
  bool instructions_ok = false;  // pis[r-1] is a non-identity instruction on register r
  bool parity_ok = false;        // all even for Alt; some odd generator for Sym
  bool generation_ok = false;    // generated group has the target identity
  bool one_per_register = false;
  bool transitive = false;
  GroupIdentity identity;
  BigInt expected_order;

  bool passed() const { return instructions_ok && parity_ok && generation_ok && one_per_register; }
};

FamilyReport verify_family(const GeneratorFamily& family);

struct UnaryObstruction {
  int reg = 0;
  bool partition_preserved = false;  // every generator maps x_r-classes to x_r-classes
};

// If some generator updating register r only reads register r, returns r and
// checks that the whole set preserves the partition of A^n by coordinate r.
std::optional<UnaryObstruction> unary_obstruction(const std::vector<Instruction>& gens);

}  // namespace memoryless
