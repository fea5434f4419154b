#include "memoryless/analysis.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "memoryless/error.hpp"
#include "memoryless/synthesis.hpp"

namespace memoryless {

std::string ExactRational::str() const {
  if (denominator == 1) return numerator.str();
  return numerator.str() + "/" + denominator.str();
}

ExactRational ComplexityTable::mean() const {
  BigInt total = 0;
  BigInt count = 0;
  for (std::size_t d = 0; d < histogram_.size(); ++d) {
    total += BigInt(histogram_[d]) * d;
    count += histogram_[d];
  }
  BigInt g = boost::multiprecision::gcd(total, count);
  if (g == 0) g = 1;
  return {total / g, count / g};
}

std::optional<std::uint32_t> ComplexityTable::distance(const Permutation& f) const {
  require_same(alphabet_, f.alphabet());
  const auto id = store_.find(f.images());
  if (id == PermutationStore::kNone) return std::nullopt;
  return distances_[id];
}

Permutation ComplexityTable::element(PermutationStore::Id id) const {
  auto images = store_.get(id);
  return Permutation::from_images(alphabet_, std::vector<StateIndex>(images.begin(), images.end()));
}

std::vector<Instruction> all_instructions(const Alphabet& alphabet, std::uint64_t cap) {
  return enumerate_instructions(alphabet, cap);
}

std::vector<Instruction> even_instructions(const Alphabet& alphabet, std::uint64_t cap) {
  std::vector<Instruction> result;
  for_each_instruction(
      alphabet,
      [&](const Instruction& g) {
        if (sign(g.to_permutation()) == 1) result.push_back(g);
      },
      cap);
  return result;
}

ComplexityTable complexity_table(const Alphabet& alphabet, const std::optional<std::vector<Instruction>>& set,
                                 std::uint64_t cap) {
  std::vector<Instruction> instructions;
  std::string description;
  BigInt order;
  if (set) {
    for (const auto& g : *set) {
      require_same(alphabet, g.alphabet());
      if (!g.is_identity()) instructions.push_back(g);
    }
    description = "explicit(" + std::to_string(instructions.size()) + ")";
    std::vector<Permutation> perms;
    for (const auto& g : instructions) perms.push_back(g.to_permutation());
    order = build_chain(alphabet, perms).order();
    if (order > cap) {
      throw TooLargeError("generated group has order " + to_string(order) + ", above the cap of " + std::to_string(cap));
    }
  } else {
    if (alphabet.size() > 9) {
      throw TooLargeError("full instruction-set search needs q^n <= 9, got q^n=" + std::to_string(alphabet.size()));
    }
    order = symmetric_order(alphabet);
    if (order > cap) {
      throw TooLargeError("Sym(A^n) has order " + to_string(symmetric_order(alphabet)) + ", above the cap of " +
                          std::to_string(cap));
    }
    instructions = enumerate_instructions(alphabet);
    description = "ALL";
  }

  ComplexityTable table(alphabet, std::move(description), std::move(instructions));
  const StateIndex degree = alphabet.size();
  std::vector<std::vector<StateIndex>> tables;
  for (const auto& g : table.instructions_) {
    Permutation p = g.to_permutation();
    tables.emplace_back(p.images().begin(), p.images().end());
  }

  Permutation identity(alphabet);
  table.store_.insert(identity.images());
  table.distances_.push_back(0);
  table.histogram_.push_back(1);
  // Every element is reached once the store holds the whole group.
  const auto group_size = static_cast<std::size_t>(order);
  std::vector<StateIndex> scratch(degree);
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  std::uint16_t depth = 0;
  while (level_begin < level_end && table.store_.size() < group_size) {
    if (depth == std::numeric_limits<std::uint16_t>::max()) throw TooLargeError("Cayley graph depth overflow");
    ++depth;
    std::uint64_t found = 0;
    for (std::size_t id = level_begin; id < level_end; ++id) {
      for (const auto& g : tables) {
        auto current = table.store_.get(static_cast<PermutationStore::Id>(id));
        for (StateIndex s = 0; s < degree; ++s) scratch[s] = g[current[s]];
        if (table.store_.insert(scratch).second) {
          table.distances_.push_back(depth);
          ++found;
        }
      }
      if (table.store_.size() == group_size) break;
    }
    level_begin = level_end;
    level_end = table.store_.size();
    if (found > 0) table.histogram_.push_back(found);
  }
  return table;
}

InternalComputability internal_computability(const std::vector<Permutation>& gens, std::uint64_t cap) {
  if (gens.empty()) throw InvalidArgumentError("internal computability needs at least one generator");
  const Alphabet& alphabet = gens.front().alphabet();
  const GroupChain group = build_chain(alphabet, gens);
  InternalComputability result;
  result.group_order = group.order();
  for_each_element(
      group,
      [&](const Permutation& g) {
        if (!g.is_identity() && as_instruction(g)) result.instruction_elements.push_back(g);
      },
      cap);
  result.computable_order = build_chain(alphabet, result.instruction_elements).order();
  result.internally_computable = result.computable_order == result.group_order;
  return result;
}

FastnessReport fastness(const Permutation& g, const std::vector<Instruction>& J, const std::vector<Instruction>& K,
                        std::uint64_t node_cap) {
  for (const auto& j : J) {
    if (std::find(K.begin(), K.end(), j) == K.end()) {
      throw PreconditionError("fastness needs J to be a subset of K");
    }
  }
  std::vector<Permutation> j_perms;
  for (const auto& j : J) j_perms.push_back(j.to_permutation());
  if (!build_chain(g.alphabet(), j_perms).contains(g)) {
    throw NotComputableError("g is not in the group generated by J");
  }
  auto program_j = shortest_program(g, J, node_cap);
  auto program_k = shortest_program(g, K, node_cap);
  if (!program_j || !program_k) throw NotComputableError("search found no program for g");
  FastnessReport report{g, J, K, static_cast<std::uint32_t>(program_j->length()),
                        static_cast<std::uint32_t>(program_k->length()), false};
  report.fast = report.lJ == report.lK;
  return report;
}

bool conjugacy_complexity_check(const Permutation& g, const Permutation& h) {
  if (!is_unary_permutation(h)) throw PreconditionError("h is not a unary permutation");
  const Permutation conjugated = conjugate(h, g);
  return optimal_program(g).length() == optimal_program(conjugated).length();
}

bool conjugacy_complexity_check(const Permutation& g, const Permutation& h, const ComplexityTable& full) {
  if (!is_unary_permutation(h)) throw PreconditionError("h is not a unary permutation");
  if (full.instruction_set() != "ALL") throw PreconditionError("conjugacy check needs the full instruction set table");
  const auto lg = full.distance(g);
  const auto lc = full.distance(conjugate(h, g));
  if (!lg || !lc) throw NotComputableError("permutation missing from the complexity table");
  return *lg == *lc;
}

namespace {

// Visits each k-subset of pool in lexicographic order.
void for_each_subset(const std::vector<int>& pool, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == k) {
      visit(chosen);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Instruction> lary_generators(const Alphabet& alphabet, int l) {
  const int n = alphabet.n();
  const int q = alphabet.q();
  if (l < 2 || l > n) {
    throw InvalidArgumentError("l must satisfy 2 <= l <= n, got l=" + std::to_string(l));
  }
  std::vector<std::vector<int>> taus;
  std::vector<int> swap01(static_cast<std::size_t>(q));
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  taus.push_back(swap01);
  if (q > 2) {
    std::vector<int> cycle(static_cast<std::size_t>(q));
    for (int v = 0; v < q; ++v) cycle[v] = (v + 1) % q;
    taus.push_back(cycle);
  }

  std::vector<Instruction> gens;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> others;
    for (int k = 1; k <= n; ++k) {
      if (k != j) others.push_back(k);
    }
    for_each_subset(others, l - 1, [&](const std::vector<int>& controls) {
      StateIndex assignments = 1;
      for (std::size_t c = 0; c < controls.size(); ++c) assignments *= static_cast<StateIndex>(q);
      for (StateIndex code = 0; code < assignments; ++code) {
        // Digits of code give the control values, first control most significant.
        std::vector<Value> wanted(controls.size());
        StateIndex rest = code;
        for (std::size_t c = controls.size(); c-- > 0;) {
          wanted[c] = static_cast<Value>(rest % static_cast<StateIndex>(q));
          rest /= static_cast<StateIndex>(q);
        }
        for (const auto& tau : taus) {
          std::vector<Value> table(alphabet.size());
          for (StateIndex s = 0; s < alphabet.size(); ++s) {
            bool active = true;
            for (std::size_t c = 0; c < controls.size() && active; ++c) {
              active = alphabet.coordinate(s, controls[c]) == wanted[c];
            }
            const Value x = alphabet.coordinate(s, j);
            table[s] = active ? static_cast<Value>(tau[x]) : x;
          }
          gens.push_back(Instruction::from_table(alphabet, j, std::move(table)));
        }
      }
    });
  }
  return gens;
}

GroupIdentity lary_group(const Alphabet& alphabet, int l) {
  std::vector<Permutation> perms;
  for (const auto& g : lary_generators(alphabet, l)) perms.push_back(g.to_permutation());
  return identify_group(build_chain(alphabet, perms), alphabet);
}

Program lary_closure_counterexample(const Alphabet& alphabet, int l) {
  const int n = alphabet.n();
  if (l < 1 || l > n) throw InvalidArgumentError("l must satisfy 1 <= l <= n, got l=" + std::to_string(l));
  if (l == 1 || l == n) {
    throw UnsupportedCaseError("no counterexample for l=" + std::to_string(l) +
                               ": the l-ary permutations form a group when l is 1 or n");
  }
  const int q = alphabet.q();
  std::vector<Value> second(alphabet.size());
  std::vector<Value> first(alphabet.size());
  for (StateIndex s = 0; s < alphabet.size(); ++s) {
    second[s] = static_cast<Value>((alphabet.coordinate(s, 2) + alphabet.coordinate(s, l + 1)) % q);
    int sum = 0;
    for (int i = 1; i <= l; ++i) sum += alphabet.coordinate(s, i);
    first[s] = static_cast<Value>(sum % q);
  }
  Program program(alphabet, {Instruction::from_table(alphabet, 2, std::move(second)),
                             Instruction::from_table(alphabet, 1, std::move(first))});
  const Permutation composite = program_to_perm(program);
  if (static_cast<int>(essential_variables(composite, 1).size()) <= l) {
    throw ConstructionError("composite unexpectedly stays l-ary");
  }
  return program;
}

}  // namespace memoryless
