#include "memoryless/instruction.hpp"

#include <string>

#include "memoryless/error.hpp"

namespace memoryless {

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

Instruction Instruction::identity(const Alphabet& alphabet) { return Instruction(alphabet, 0, {}); }

Instruction Instruction::from_table(const Alphabet& alphabet, int reg, std::vector<Value> table) {
  if (reg < 1 || reg > alphabet.n()) {
    throw InvalidArgumentError("register " + std::to_string(reg) + " out of range 1.." + std::to_string(alphabet.n()));
  }
  if (table.size() != alphabet.size()) {
    throw InvalidArgumentError("instruction table needs " + std::to_string(alphabet.size()) + " entries, got " +
                               std::to_string(table.size()));
  }
  const StateIndex stride = alphabet.stride(reg);
  const auto q = static_cast<StateIndex>(alphabet.q());
  bool trivial = true;
  std::vector<bool> seen(q);
  for (StateIndex s = 0; s < alphabet.size(); ++s) {
    if (table[s] >= q) {
      throw InvalidArgumentError("table entry " + std::to_string(table[s]) + " at state " + std::to_string(s) +
                                 " is not below q=" + std::to_string(q));
    }
    if (table[s] != alphabet.coordinate(s, reg)) trivial = false;
    if (alphabet.coordinate(s, reg) != 0) continue;
    std::fill(seen.begin(), seen.end(), false);
    for (StateIndex v = 0; v < q; ++v) {
      Value out = table[s + v * stride];
      if (out < q && seen[out]) {
        throw InvalidArgumentError("register " + std::to_string(reg) + " update is not a bijection on the fiber of state " +
                                   std::to_string(s));
      }
      if (out < q) seen[out] = true;
    }
  }
  if (trivial) return identity(alphabet);
  return Instruction(alphabet, reg, std::move(table));
}

Permutation Instruction::to_permutation() const {
  std::vector<StateIndex> images(alphabet_.size());
  for (StateIndex s = 0; s < images.size(); ++s) images[s] = (*this)(s);
  return Permutation::from_images(alphabet_, std::move(images));
}

std::optional<Instruction> as_instruction(const Permutation& f) {
  auto regs = updated_registers(f);
  if (regs.empty()) return Instruction::identity(f.alphabet());
  if (regs.size() > 1) return std::nullopt;
  const int reg = regs.front();
  std::vector<Value> table(f.degree());
  for (StateIndex s = 0; s < f.degree(); ++s) table[s] = f.coordinate(s, reg);
  return Instruction::from_table(f.alphabet(), reg, std::move(table));
}

Program::Program(const Alphabet& alphabet, std::vector<Instruction> steps) : alphabet(alphabet), steps(std::move(steps)) {
  for (const auto& step : this->steps) require_same(alphabet, step.alphabet());
}

BigInt instruction_count(const Alphabet& alphabet) {
  BigInt per_register = boost::multiprecision::pow(factorial(static_cast<std::uint64_t>(alphabet.q())),
                                                   static_cast<unsigned>(alphabet.size() / alphabet.q()));
  return alphabet.n() * (per_register - 1);
}

void for_each_instruction(const Alphabet& alphabet, const std::function<void(const Instruction&)>& visit,
                          std::uint64_t cap) {
  const BigInt count = instruction_count(alphabet);
  if (count > cap) {
    throw TooLargeError("instruction set has " + to_string(count) + " elements, above the cap of " + std::to_string(cap));
  }
  const StateIndex size = alphabet.size();
  const auto q = static_cast<Value>(alphabet.q());
  for (int reg = 1; reg <= alphabet.n(); ++reg) {
    const StateIndex stride = alphabet.stride(reg);
    // Position s belongs to the fiber whose representative zeroes register reg.
    auto fiber_of = [&](StateIndex s) { return s - alphabet.coordinate(s, reg) * stride; };
    std::vector<Value> table(size, 0);
    std::vector<std::uint64_t> used(size, 0);  // bitmask of values taken, per fiber representative
    // Depth-first over positions in index order with ascending values yields
    // tables in lexicographic order.
    std::vector<int> next(size + 1, 0);
    StateIndex pos = 0;
    next[0] = 0;
    while (true) {
      if (pos == size) {
        bool trivial = true;
        for (StateIndex s = 0; s < size && trivial; ++s) trivial = table[s] == alphabet.coordinate(s, reg);
        if (!trivial) visit(Instruction(alphabet, reg, table));
        if (pos == 0) break;
        --pos;
        used[fiber_of(pos)] &= ~(std::uint64_t{1} << table[pos]);
        continue;
      }
      const StateIndex fiber = fiber_of(pos);
      int v = next[pos];
      while (v < q && (used[fiber] >> v & 1U)) ++v;
      if (v >= q) {
        if (pos == 0) break;
        --pos;
        used[fiber_of(pos)] &= ~(std::uint64_t{1} << table[pos]);
        continue;
      }
      table[pos] = static_cast<Value>(v);
      used[fiber] |= std::uint64_t{1} << v;
      next[pos] = v + 1;
      ++pos;
      next[pos] = 0;
    }
  }
}

std::vector<Instruction> enumerate_instructions(const Alphabet& alphabet, std::uint64_t cap) {
  std::vector<Instruction> result;
  for_each_instruction(alphabet, [&](const Instruction& g) { result.push_back(g); }, cap);
  return result;
}

}  // namespace memoryless
