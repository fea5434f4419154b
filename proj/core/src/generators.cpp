#include "memoryless/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "memoryless/error.hpp"

namespace memoryless {

std::string to_string(FamilyTarget target) {
  return target == FamilyTarget::Symmetric ? "Symmetric" : "Alternating";
}

namespace {

// One row of a displayed case formula: when the predicate holds, register r
// takes the returned value.
struct Branch {
  std::string name;
  std::function<bool(const State&)> when;
  std::function<int(const State&)> value;
};

// Every register other than r holds v (registers are 1-based).
bool others_all(const State& a, int r, int v) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(i) + 1 != r && a[i] != v) return false;
  }
  return true;
}

bool rest_zero(const State& a) { return others_all(a, 1, 0); }

int mod(int x, int q) { return ((x % q) + q) % q; }

// Evaluates the branches on every state, aborting when a state matches two
// branches or (without a fallback) none.
Instruction build_from_cases(const Alphabet& alphabet, int reg, const std::vector<Branch>& branches,
                             const std::optional<Branch>& otherwise, CaseAudit& audit) {
  audit.branches.clear();
  for (const auto& b : branches) audit.branches.push_back(b.name);
  if (otherwise) audit.branches.push_back(otherwise->name);
  audit.hits.assign(audit.branches.size(), 0);

  std::vector<Value> table(alphabet.size());
  for (StateIndex s = 0; s < alphabet.size(); ++s) {
    const State a = index_state(s, alphabet);
    std::optional<std::size_t> chosen;
    for (std::size_t b = 0; b < branches.size(); ++b) {
      if (!branches[b].when(a)) continue;
      if (chosen) {
        throw ConstructionError("register " + std::to_string(reg) + ": state " + std::to_string(s) +
                                " matches both '" + branches[*chosen].name + "' and '" + branches[b].name + "'");
      }
      chosen = b;
    }
    int value = 0;
    if (chosen) {
      value = branches[*chosen].value(a);
      ++audit.hits[*chosen];
    } else if (otherwise) {
      value = otherwise->value(a);
      ++audit.hits.back();
    } else {
      throw ConstructionError("register " + std::to_string(reg) + ": state " + std::to_string(s) +
                              " matches no branch");
    }
    if (value < 0 || value >= alphabet.q()) {
      throw ConstructionError("register " + std::to_string(reg) + ": branch value " + std::to_string(value) +
                              " outside the alphabet at state " + std::to_string(s));
    }
    table[s] = static_cast<Value>(value);
  }
  try {
    auto g = Instruction::from_table(alphabet, reg, std::move(table));
    if (g.is_identity()) throw ConstructionError("register " + std::to_string(reg) + ": construction is the identity");
    return g;
  } catch (const InvalidArgumentError& e) {
    throw ConstructionError("register " + std::to_string(reg) + ": case formula is not a bijection (" + e.what() + ")");
  }
}

// a -> a + 1 unless every other register is q-1, where the fiber runs
// q-1 -> q-2 -> ... -> 0 -> q-1 instead. Shared by the odd-q constructions.
std::vector<Branch> odd_pattern(int r, int q) {
  return {
      {"a_r=q-1, some other != q-1", [=](const State& a) { return a[r - 1] == q - 1 && !others_all(a, r, q - 1); },
       [](const State&) { return 0; }},
      {"a_r!=q-1, some other != q-1", [=](const State& a) { return a[r - 1] != q - 1 && !others_all(a, r, q - 1); },
       [=](const State& a) { return a[r - 1] + 1; }},
      {"a_r=0, others = q-1", [=](const State& a) { return a[r - 1] == 0 && others_all(a, r, q - 1); },
       [=](const State&) { return q - 1; }},
  };
}

Branch odd_pattern_otherwise(int r) {
  return {"otherwise", nullptr, [=](const State& a) { return a[r - 1] - 1; }};
}

// q-cycles on every fiber except the one where the others are all q-1, which
// carries the cycle 0 -> 1 -> ... -> q-3 -> 0 with q-2 and q-1 fixed.
std::vector<Branch> short_last_fiber_pattern(int r, int q) {
  return {
      {"a_r=q-1, some other != q-1", [=](const State& a) { return a[r - 1] == q - 1 && !others_all(a, r, q - 1); },
       [](const State&) { return 0; }},
      {"a_r!=q-1, some other != q-1", [=](const State& a) { return a[r - 1] != q - 1 && !others_all(a, r, q - 1); },
       [=](const State& a) { return a[r - 1] + 1; }},
      {"a_r<q-3, others = q-1", [=](const State& a) { return a[r - 1] < q - 3 && others_all(a, r, q - 1); },
       [=](const State& a) { return a[r - 1] + 1; }},
      {"a_r=q-3, others = q-1", [=](const State& a) { return a[r - 1] == q - 3 && others_all(a, r, q - 1); },
       [](const State&) { return 0; }},
  };
}

Branch identity_otherwise(int r) {
  return {"otherwise", nullptr, [=](const State& a) { return a[r - 1]; }};
}

// The 3-cycle 0 -> 1 -> 2 -> 0 of register 1 on the fiber where registers
// 2..n are zero.
std::vector<Branch> zero_fiber_three_cycle() {
  return {
      {"a=0", [](const State& a) { return a[0] == 0 && rest_zero(a); }, [](const State&) { return 1; }},
      {"a_1=1, rest 0", [](const State& a) { return a[0] == 1 && rest_zero(a); }, [](const State&) { return 2; }},
      {"a_1=2, rest 0", [](const State& a) { return a[0] == 2 && rest_zero(a); }, [](const State&) { return 0; }},
  };
}

template <typename... Extra>
std::vector<Branch> concat(std::vector<Branch> head, Extra&&... extra) {
  (head.push_back(std::forward<Extra>(extra)), ...);
  return head;
}

void add(GeneratorFamily& family, int reg, const std::vector<Branch>& branches, const std::optional<Branch>& otherwise) {
  CaseAudit audit;
  family.pis.push_back(build_from_cases(family.alphabet, reg, branches, otherwise, audit));
  family.audits.push_back(std::move(audit));
}

// Binary alphabet, Gray labels: the generator on register n is the
// transposition of Gray labels 1 and 2; on register p < n it is the full flip of
// register p minus its first transposition of Gray-adjacent words.
GeneratorFamily binary_sym_family(const Alphabet& alphabet) {
  GeneratorFamily family(alphabet, FamilyTarget::Symmetric);
  family.construction = "binary, Gray-code ordering";
  family.labels = LabelStyle::Gray;
  const GraySequence gray = gray_sequence(alphabet);
  const int n = alphabet.n();
  for (int reg = 1; reg <= n; ++reg) {
    std::vector<std::vector<StateIndex>> cycles;
    if (reg == n) {
      cycles.push_back({gray.order[0], gray.order[1]});
    } else {
      // Flip pairs ordered by least Gray label.
      std::vector<std::pair<StateIndex, StateIndex>> pairs;
      for (StateIndex s = 0; s < alphabet.size(); ++s) {
        if (alphabet.coordinate(s, reg) != 0) continue;
        StateIndex t = s + alphabet.stride(reg);
        StateIndex ls = gray.label(s);
        StateIndex lt = gray.label(t);
        pairs.emplace_back(std::min(ls, lt), std::max(ls, lt));
      }
      std::sort(pairs.begin(), pairs.end());
      bool removed = false;
      for (const auto& [lo, hi] : pairs) {
        if (!removed && hi == lo + 1) {
          removed = true;
          continue;
        }
        cycles.push_back({gray.from_label(lo), gray.from_label(hi)});
      }
      if (!removed) throw ConstructionError("no Gray-adjacent pair for register " + std::to_string(reg));
    }
    auto g = as_instruction(Permutation::from_cycles(alphabet, cycles));
    if (!g || g->reg() != reg) throw ConstructionError("binary generator is not an instruction on its register");
    family.pis.push_back(std::move(*g));
    CaseAudit audit;
    audit.branches = {"cycle listing"};
    audit.hits = {alphabet.size()};
    family.audits.push_back(std::move(audit));
  }
  return family;
}

GeneratorFamily odd_sym_family(const Alphabet& alphabet) {
  const int q = alphabet.q();
  GeneratorFamily family(alphabet, FamilyTarget::Symmetric);
  family.construction = "odd q > 2";
  add(family, 1,
      {
          {"a_1 in {0,1}, rest 0", [](const State& a) { return a[0] <= 1 && rest_zero(a); },
           [](const State& a) { return 1 - a[0]; }},
          {"a_1>1, rest 0", [](const State& a) { return a[0] > 1 && rest_zero(a); }, [](const State& a) { return a[0]; }},
          {"a_1=q-1, rest not 0", [=](const State& a) { return a[0] == q - 1 && !rest_zero(a); },
           [](const State&) { return 0; }},
      },
      Branch{"otherwise", nullptr, [](const State& a) { return a[0] + 1; }});
  for (int r = 2; r <= alphabet.n(); ++r) add(family, r, odd_pattern(r, q), odd_pattern_otherwise(r));
  return family;
}

GeneratorFamily even_sym_family(const Alphabet& alphabet) {
  const int q = alphabet.q();
  GeneratorFamily family(alphabet, FamilyTarget::Symmetric);
  family.construction = "even q > 2";
  add(family, 1,
      {
          {"a_1 in {0,1}, rest 0", [](const State& a) { return a[0] <= 1 && rest_zero(a); },
           [](const State& a) { return 1 - a[0]; }},
          {"a_1>1, rest 0", [](const State& a) { return a[0] > 1 && rest_zero(a); }, [](const State& a) { return a[0]; }},
          {"a_1=0, rest not 0", [](const State& a) { return a[0] == 0 && !rest_zero(a); },
           [](const State& a) { return a[0]; }},
          {"a_1=q-1, rest not 0", [=](const State& a) { return a[0] == q - 1 && !rest_zero(a); },
           [](const State&) { return 1; }},
      },
      Branch{"otherwise", nullptr, [](const State& a) { return a[0] + 1; }});
  for (int r = 2; r <= alphabet.n(); ++r) {
    add(family, r,
        {
            {"a_r!=q-1, some other != q-1", [=](const State& a) { return a[r - 1] != q - 1 && !others_all(a, r, q - 1); },
             [=](const State& a) { return a[r - 1] + 1; }},
            {"a_r<q-2, others = q-1", [=](const State& a) { return a[r - 1] < q - 2 && others_all(a, r, q - 1); },
             [=](const State& a) { return a[r - 1] + 1; }},
            {"a_r=q-1, some other != q-1", [=](const State& a) { return a[r - 1] == q - 1 && !others_all(a, r, q - 1); },
             [](const State&) { return 0; }},
            {"a_r=q-2, others = q-1", [=](const State& a) { return a[r - 1] == q - 2 && others_all(a, r, q - 1); },
             [](const State&) { return 0; }},
            {"a = (q-1,...,q-1)", [=](const State& a) { return a[r - 1] == q - 1 && others_all(a, r, q - 1); },
             [=](const State& a) { return a[r - 1]; }},
        },
        std::nullopt);
  }
  return family;
}

// Ternary alphabet, lexicographic labels. Register n carries the single
// 3-cycle (0..00, 0..01, 0..02); every other register p carries a 3-cycle
// x -> x + e^p on each fiber, reversed on the lexicographically last fiber.
GeneratorFamily ternary_alt_family(const Alphabet& alphabet) {
  const int n = alphabet.n();
  GeneratorFamily family(alphabet, FamilyTarget::Alternating);
  if (n == 2) {
    family.construction = "q = 3, n = 2";
    add(family, 1,
        {{"a_2=2", [](const State& a) { return a[1] == 2; }, [](const State& a) { return a[0]; }}},
        Branch{"otherwise", nullptr, [](const State& a) { return mod(a[0] + 1, 3); }});
    add(family, 2,
        {{"a_1=0", [](const State& a) { return a[0] == 0; }, [](const State& a) { return mod(a[1] + 2, 3); }}},
        Branch{"otherwise", nullptr, [](const State& a) { return mod(a[1] + 1, 3); }});
    return family;
  }
  family.construction = "q = 3, lexicographic ordering";
  for (int r = 1; r <= n; ++r) {
    if (r == n) {
      add(family, r,
          {{"others 0", [=](const State& a) { return others_all(a, r, 0); },
            [=](const State& a) { return mod(a[r - 1] + 1, 3); }}},
          identity_otherwise(r));
    } else {
      add(family, r,
          {{"others 2 (last fiber)", [=](const State& a) { return others_all(a, r, 2); },
            [=](const State& a) { return mod(a[r - 1] - 1, 3); }}},
          Branch{"otherwise", nullptr, [=](const State& a) { return mod(a[r - 1] + 1, 3); }});
    }
  }
  return family;
}

// q = 1 or 5 (mod 6).
GeneratorFamily alt_1_5_family(const Alphabet& alphabet) {
  const int q = alphabet.q();
  GeneratorFamily family(alphabet, FamilyTarget::Alternating);
  family.construction = "q = 1 or 5 (mod 6)";
  add(family, 1,
      concat(zero_fiber_three_cycle(),
             Branch{"a_1>2, rest 0", [](const State& a) { return a[0] > 2 && rest_zero(a); },
                    [](const State& a) { return a[0]; }},
             Branch{"a_1=q-1, rest not 0", [=](const State& a) { return a[0] == q - 1 && !rest_zero(a); },
                    [](const State&) { return 0; }}),
      Branch{"otherwise", nullptr, [](const State& a) { return a[0] + 1; }});
  for (int r = 2; r <= alphabet.n(); ++r) add(family, r, odd_pattern(r, q), odd_pattern_otherwise(r));
  return family;
}

// q = 0 or 2 (mod 6), q > 2.
GeneratorFamily alt_0_2_family(const Alphabet& alphabet) {
  const int q = alphabet.q();
  GeneratorFamily family(alphabet, FamilyTarget::Alternating);
  family.construction = "q = 0 or 2 (mod 6)";
  add(family, 1,
      concat(zero_fiber_three_cycle(),
             Branch{"a_1>2, rest 0", [](const State& a) { return a[0] > 2 && rest_zero(a); },
                    [](const State& a) { return a[0]; }},
             Branch{"a_1=0, rest not 0", [](const State& a) { return a[0] == 0 && !rest_zero(a); },
                    [](const State& a) { return a[0]; }},
             Branch{"a_1=q-1, rest not 0", [=](const State& a) { return a[0] == q - 1 && !rest_zero(a); },
                    [](const State&) { return 1; }}),
      Branch{"otherwise", nullptr, [](const State& a) { return a[0] + 1; }});
  for (int r = 2; r <= alphabet.n(); ++r) add(family, r, short_last_fiber_pattern(r, q), identity_otherwise(r));
  return family;
}

// q = 3 (mod 6), q > 3.
GeneratorFamily alt_3_family(const Alphabet& alphabet) {
  const int q = alphabet.q();
  GeneratorFamily family(alphabet, FamilyTarget::Alternating);
  family.construction = "q = 3 (mod 6)";
  add(family, 1,
      concat(zero_fiber_three_cycle(),
             Branch{"a_1>2, rest 0", [](const State& a) { return a[0] > 2 && rest_zero(a); },
                    [](const State& a) { return a[0]; }},
             Branch{"a_1 in {0,1}, rest not 0", [](const State& a) { return a[0] <= 1 && !rest_zero(a); },
                    [](const State& a) { return a[0]; }},
             Branch{"a_1=q-1, rest not 0", [=](const State& a) { return a[0] == q - 1 && !rest_zero(a); },
                    [](const State&) { return 2; }}),
      Branch{"otherwise", nullptr, [](const State& a) { return a[0] + 1; }});
  for (int r = 2; r <= alphabet.n(); ++r) add(family, r, odd_pattern(r, q), odd_pattern_otherwise(r));
  return family;
}

// q = 4. Off the zero fiber register 1 runs a -> 3 - a, i.e. (0 3)(1 2).
GeneratorFamily alt_4_family(const Alphabet& alphabet) {
  GeneratorFamily family(alphabet, FamilyTarget::Alternating);
  family.construction = "q = 4";
  add(family, 1,
      concat(zero_fiber_three_cycle(),
             Branch{"a_1=3, rest 0", [](const State& a) { return a[0] == 3 && rest_zero(a); },
                    [](const State& a) { return a[0]; }}),
      Branch{"otherwise", nullptr, [](const State& a) { return 3 - a[0]; }});
  for (int r = 2; r <= alphabet.n(); ++r) {
    add(family, r,
        {
            {"a_r=3, some other != 3", [=](const State& a) { return a[r - 1] == 3 && !others_all(a, r, 3); },
             [](const State&) { return 0; }},
            {"a_r!=3, some other != 3", [=](const State& a) { return a[r - 1] != 3 && !others_all(a, r, 3); },
             [=](const State& a) { return a[r - 1] + 1; }},
            {"a_r in {0,1}, others = 3", [=](const State& a) { return a[r - 1] <= 1 && others_all(a, r, 3); },
             [=](const State& a) { return 1 - a[r - 1]; }},
        },
        identity_otherwise(r));
  }
  return family;
}

// q = 4 (mod 6), q > 4. On the zero fiber register 1 carries (0 1)(3 4 5) and
// fixes 2 and 6..q-1.
GeneratorFamily alt_4_mod_6_family(const Alphabet& alphabet) {
  const int q = alphabet.q();
  GeneratorFamily family(alphabet, FamilyTarget::Alternating);
  family.construction = "q = 4 (mod 6), q > 4";
  add(family, 1,
      {
          {"a_1 in {0,1}, rest 0", [](const State& a) { return a[0] <= 1 && rest_zero(a); },
           [](const State& a) { return 1 - a[0]; }},
          {"a_1=3, rest 0", [](const State& a) { return a[0] == 3 && rest_zero(a); }, [](const State&) { return 4; }},
          {"a_1=4, rest 0", [](const State& a) { return a[0] == 4 && rest_zero(a); }, [](const State&) { return 5; }},
          {"a_1=5, rest 0", [](const State& a) { return a[0] == 5 && rest_zero(a); }, [](const State&) { return 3; }},
          {"a_1=2 or a_1>5, rest 0", [](const State& a) { return (a[0] == 2 || a[0] > 5) && rest_zero(a); },
           [](const State& a) { return a[0]; }},
          {"a_1=q-1, rest not 0", [=](const State& a) { return a[0] == q - 1 && !rest_zero(a); },
           [](const State&) { return 0; }},
      },
      Branch{"otherwise", nullptr, [](const State& a) { return a[0] + 1; }});
  for (int r = 2; r <= alphabet.n(); ++r) add(family, r, short_last_fiber_pattern(r, q), identity_otherwise(r));
  return family;
}

}  // namespace

GeneratorFamily sym_generators(const Alphabet& alphabet) {
  const int q = alphabet.q();
  if (q == 2 && alphabet.n() == 2) {
    throw UnsupportedCaseError("Sym(A^n) is not generated by n instructions when q = n = 2");
  }
  if (alphabet.n() < 2) throw UnsupportedCaseError("generator families need n >= 2");
  if (q == 2) return binary_sym_family(alphabet);
  return q % 2 == 1 ? odd_sym_family(alphabet) : even_sym_family(alphabet);
}

GeneratorFamily alt_generators(const Alphabet& alphabet) {
  const int q = alphabet.q();
  if (q == 2) throw UnsupportedCaseError("Alt(A^n) is not generated by n instructions when q = 2");
  if (alphabet.n() < 2) throw UnsupportedCaseError("generator families need n >= 2");
  if (q == 3) return ternary_alt_family(alphabet);
  if (q == 4) return alt_4_family(alphabet);
  switch (q % 6) {
    case 1:
    case 5:
      return alt_1_5_family(alphabet);
    case 0:
    case 2:
      return alt_0_2_family(alphabet);
    case 3:
      return alt_3_family(alphabet);
    default:
      return alt_4_mod_6_family(alphabet);
  }
}

FamilyReport verify_family(const GeneratorFamily& family) {
  const Alphabet& a = family.alphabet;
  FamilyReport report;

  report.instructions_ok = true;
  std::set<int> registers;
  for (std::size_t i = 0; i < family.pis.size(); ++i) {
    const auto& g = family.pis[i];
    if (!(g.alphabet() == a) || g.is_identity() || g.reg() != static_cast<int>(i) + 1) report.instructions_ok = false;
    if (!g.is_identity()) registers.insert(g.reg());
  }
  report.one_per_register =
      family.pis.size() == static_cast<std::size_t>(a.n()) && registers.size() == static_cast<std::size_t>(a.n());

  std::vector<Permutation> perms;
  for (const auto& g : family.pis) perms.push_back(g.to_permutation());
  const bool all_even = std::all_of(perms.begin(), perms.end(), [](const Permutation& p) { return sign(p) == 1; });
  report.parity_ok = family.target == FamilyTarget::Alternating ? all_even : !all_even;

  const GroupChain chain = build_chain(a, perms);
  report.identity = identify_group(chain, a);
  report.transitive = is_transitive(chain);
  const GroupTag wanted = family.target == FamilyTarget::Symmetric ? GroupTag::Symmetric : GroupTag::Alternating;
  report.expected_order = family.target == FamilyTarget::Symmetric ? symmetric_order(a) : alternating_order(a);
  report.generation_ok = report.identity.tag == wanted && report.identity.order == report.expected_order;
  return report;
}

std::optional<UnaryObstruction> unary_obstruction(const std::vector<Instruction>& gens) {
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    const Permutation p = g.to_permutation();
    const auto vars = essential_variables(p, g.reg());
    if (vars.size() != 1 || vars.front() != g.reg()) continue;

    UnaryObstruction found;
    found.reg = g.reg();
    found.partition_preserved = true;
    const Alphabet& a = g.alphabet();
    for (const auto& h : gens) {
      const Permutation hp = h.to_permutation();
      // x ~ y iff x_r = y_r: the image's coordinate r must depend on x_r alone.
      std::vector<int> block_image(static_cast<std::size_t>(a.q()), -1);
      for (StateIndex s = 0; s < a.size(); ++s) {
        const Value from = a.coordinate(s, found.reg);
        const Value to = hp.coordinate(s, found.reg);
        if (block_image[from] < 0) {
          block_image[from] = to;
        } else if (block_image[from] != to) {
          found.partition_preserved = false;
        }
      }
    }
    return found;
  }
  return std::nullopt;
}

}  // namespace memoryless
