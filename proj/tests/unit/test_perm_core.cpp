#include <doctest.h>

#include <random>
#include <sstream>

#include "memoryless/alphabet.hpp"
#include "memoryless/error.hpp"
#include "memoryless/instruction.hpp"
#include "memoryless/permutation.hpp"
#include "memoryless/text_format.hpp"
#include "support/oracles.hpp"

using namespace memoryless;

namespace {

// The six instructions of GF(2)^2 in algebraic form.
std::vector<Permutation> gf2_instructions(const Alphabet& a) {
  using oracle::Digits;
  return {
      oracle::from_rule(a, [](Digits x) { return Digits{(x[0] + 1) % 2, x[1]}; }),
      oracle::from_rule(a, [](Digits x) { return Digits{(x[0] + x[1]) % 2, x[1]}; }),
      oracle::from_rule(a, [](Digits x) { return Digits{(x[0] + x[1] + 1) % 2, x[1]}; }),
      oracle::from_rule(a, [](Digits x) { return Digits{x[0], (x[1] + 1) % 2}; }),
      oracle::from_rule(a, [](Digits x) { return Digits{x[0], (x[0] + x[1]) % 2}; }),
      oracle::from_rule(a, [](Digits x) { return Digits{x[0], (x[0] + x[1] + 1) % 2}; }),
  };
}

Permutation swap_perm(const Alphabet& a) {
  return oracle::from_rule(a, [](oracle::Digits x) { return oracle::Digits{x[1], x[0]}; });
}

}  // namespace

TEST_CASE("alphabet rejects invalid parameters") {
  CHECK_THROWS_AS(Alphabet(1, 2), InvalidArgumentError);
  CHECK_THROWS_AS(Alphabet(2, 0), InvalidArgumentError);
  CHECK_THROWS_AS(Alphabet(2, 33), TooLargeError);
  CHECK_THROWS_AS(Alphabet(65536, 2), InvalidArgumentError);
  CHECK(Alphabet(3, 4).size() == 81);
}

TEST_CASE("state indexing") {
  const Alphabet a22(2, 2), a32(3, 2);
  CHECK(state_index(State{0, 0}, a22) == 0);
  CHECK(state_index(State{1, 0}, a22) == 2);
  CHECK(state_index(State{2, 1}, a32) == 7);
  CHECK_THROWS_AS(state_index(State{3, 0}, a32), InvalidStateError);
  CHECK_THROWS_AS(state_index(State{0}, a32), InvalidStateError);
  CHECK_THROWS_AS(index_state(9, a32), InvalidStateError);

  for (int q = 2; q <= 5; ++q)
    for (int n = 1; n <= 4; ++n) {
      const Alphabet a(q, n);
      for (StateIndex s = 0; s < a.size(); ++s) {
        const State st = index_state(s, a);
        REQUIRE(state_index(st, a) == s);
        const auto d = oracle::digits(s, q, n);
        for (int r = 1; r <= n; ++r) {
          REQUIRE(st[r - 1] == d[r - 1]);
          REQUIRE(a.coordinate(s, r) == d[r - 1]);
        }
      }
    }
}

TEST_CASE("permutation construction validates") {
  const Alphabet a(2, 2);
  CHECK_THROWS_AS(Permutation::from_images(a, {0, 1, 2}), InvalidArgumentError);
  CHECK_THROWS_AS(Permutation::from_images(a, {0, 1, 1, 3}), InvalidArgumentError);
  CHECK_THROWS_AS(Permutation::from_images(a, {0, 1, 2, 4}), InvalidArgumentError);
  CHECK_THROWS_AS(Permutation::from_cycles(a, {{0, 1}, {1, 2}}), InvalidArgumentError);
  CHECK(Permutation(a).is_identity());
}

TEST_CASE("compose applies the right operand first") {
  const Alphabet a(3, 2);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Permutation f = oracle::random_perm(a, rng), g = oracle::random_perm(a, rng);
    const Permutation fg = compose(f, g);
    for (StateIndex s = 0; s < a.size(); ++s) REQUIRE(fg(s) == f(g(s)));
    CHECK(compose(Permutation(a), f) == f);
    CHECK(compose(f, inverse(f)).is_identity());
    CHECK(compose(inverse(f), f).is_identity());
  }
  CHECK_THROWS_AS(compose(Permutation(a), Permutation(Alphabet(2, 3))), AlphabetMismatchError);
}

TEST_CASE("xor swap composes to the swap") {
  const Alphabet a(2, 2);
  using oracle::Digits;
  const auto s1 = oracle::from_rule(a, [](Digits x) { return Digits{(x[0] + x[1]) % 2, x[1]}; });
  const auto s2 = oracle::from_rule(a, [](Digits x) { return Digits{x[0], (x[0] + x[1]) % 2}; });
  CHECK(compose(s1, compose(s2, s1)) == swap_perm(a));
}

TEST_CASE("two transpositions through e0 give the 3-cycle") {
  const Alphabet a(3, 2);
  const StateIndex e0 = state_index(State{0, 0}, a), e1 = state_index(State{1, 0}, a),
                   e2 = state_index(State{0, 1}, a);
  const Permutation t01 = Permutation::transposition(a, e0, e1), t02 = Permutation::transposition(a, e0, e2);
  CHECK(compose(t02, t01) == Permutation::from_cycles(a, {{e0, e1, e2}}));
}

TEST_CASE("cycle decomposition and sign") {
  const Alphabet a(3, 2);
  const auto id = cycle_decomposition(Permutation(a));
  CHECK(id.cycles.empty());
  CHECK(id.sign == 1);
  const auto t = cycle_decomposition(Permutation::transposition(a, 2, 7));
  REQUIRE(t.cycles.size() == 1);
  CHECK(t.cycles[0] == std::vector<StateIndex>{2, 7});
  CHECK(t.sign == -1);

  // (1 2 3)(6 7) in Gray labels: 1=00 2=01 3=02 6=10 7=20.
  const Permutation g = Permutation::from_cycles(a, {{0, 1, 2}, {3, 6}});
  const auto cd = cycle_decomposition(g);
  CHECK(cd.cycles == std::vector<std::vector<StateIndex>>{{0, 1, 2}, {3, 6}});
  CHECK(cd.sign == -1);
  CHECK(order(g) == 6);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Permutation f = oracle::random_perm(a, rng), h = oracle::random_perm(a, rng);
    REQUIRE(sign(f) == oracle::sign_by_inversions(oracle::images_of(f)));
    REQUIRE(sign(compose(f, h)) == sign(f) * sign(h));
    const auto dec = cycle_decomposition(f);
    int parity = 1;
    for (const auto& c : dec.cycles) {
      REQUIRE(c.size() >= 2);
      if (c.size() % 2 == 0) parity = -parity;
    }
    REQUIRE(parity == dec.sign);
  }
}

TEST_CASE("power and order") {
  const Alphabet a(3, 2);
  const Permutation g = Permutation::from_cycles(a, {{0, 1, 2}, {3, 6}});
  CHECK(power(g, 6).is_identity());
  CHECK(power(g, -1) == inverse(g));
  CHECK(power(g, 0).is_identity());
  CHECK(power(g, 7) == g);
}

TEST_CASE("updated registers") {
  const Alphabet a(2, 2);
  CHECK(updated_registers(Permutation(a)).empty());
  CHECK(updated_registers(gf2_instructions(a)[1]) == std::vector<int>{1});
  CHECK(updated_registers(swap_perm(a)) == std::vector<int>{1, 2});
  std::mt19937_64 rng(5);
  const Alphabet b(3, 3);
  for (int i = 0; i < 20; ++i) {
    const Permutation f = oracle::random_perm(b, rng);
    const auto regs = updated_registers(f);
    const auto expect = oracle::changed_registers(oracle::images_of(f), 3, 3);
    REQUIRE(std::set<int>(regs.begin(), regs.end()) == expect);
  }
}

TEST_CASE("as_instruction") {
  const Alphabet a(2, 2);
  for (const auto& g : gf2_instructions(a)) {
    const auto ins = as_instruction(g);
    REQUIRE(ins.has_value());
    CHECK(ins->to_permutation() == g);
    CHECK_FALSE(ins->is_identity());
  }
  CHECK_FALSE(as_instruction(swap_perm(a)).has_value());
  const auto id = as_instruction(Permutation(a));
  REQUIRE(id.has_value());
  CHECK(id->is_identity());
  CHECK(id->reg() == 0);
  CHECK(id->to_permutation().is_identity());
}

TEST_CASE("instruction tables are validated") {
  const Alphabet a(3, 2);
  CHECK_THROWS_AS(Instruction::from_table(a, 3, std::vector<Value>(9, 0)), InvalidArgumentError);
  CHECK_THROWS_AS(Instruction::from_table(a, 1, std::vector<Value>(8, 0)), InvalidArgumentError);
  // Fiber x2 = 0 maps x1 = 0 and 1 both to 0.
  std::vector<Value> bad{0, 1, 2, 0, 1, 2, 2, 0, 1};
  CHECK_THROWS_AS(Instruction::from_table(a, 1, bad), InvalidArgumentError);
  std::vector<Value> value_range{0, 1, 3, 0, 1, 2, 0, 1, 2};
  CHECK_THROWS_AS(Instruction::from_table(a, 2, value_range), InvalidArgumentError);
  // The table of the identity yields the identity instruction.
  std::vector<Value> trivial{0, 0, 0, 1, 1, 1, 2, 2, 2};
  CHECK(Instruction::from_table(a, 1, trivial).is_identity());
}

TEST_CASE("as_instruction agrees with the fiber definition") {
  for (const auto& images : oracle::all_instructions_brute(2, 2))
    REQUIRE(as_instruction(oracle::perm(Alphabet(2, 2), images)).has_value());

  const Alphabet a(3, 2);
  std::mt19937_64 rng(17);
  std::vector<Permutation> samples;
  for (const auto& images : oracle::all_instructions_brute(3, 2)) samples.push_back(oracle::perm(a, images));
  CHECK(samples.size() == 431);
  for (int i = 0; i < 500; ++i) samples.push_back(oracle::random_perm(a, rng));
  for (const auto& f : samples) {
    const bool expect = oracle::is_instruction(oracle::images_of(f), 3, 2);
    const auto ins = as_instruction(f);
    REQUIRE(ins.has_value() == expect);
    if (!ins) continue;
    REQUIRE(ins->to_permutation() == f);
    if (ins->is_identity()) continue;
    for (StateIndex s = 0; s < a.size(); ++s)
      for (Value v = 0; v < 3; ++v) {
        const StateIndex t = a.with_coordinate(s, ins->reg(), v);
        if (t != s) REQUIRE(ins->table()[t] != ins->table()[s]);
      }
  }
}

TEST_CASE("essential variables and arity") {
  const Alphabet a(2, 2);
  CHECK(essential_variables(Permutation(a), 1) == std::vector<int>{1});
  CHECK(essential_variables(Permutation(a), 2) == std::vector<int>{2});
  CHECK(essential_variables(gf2_instructions(a)[1], 1) == std::vector<int>{1, 2});
  CHECK(arity(gf2_instructions(a)[1]) == 2);
  CHECK(arity(gf2_instructions(a)[0]) == 1);

  // y2 <- y2 + y3; y1 <- y1 + y2 over GF(2)^3.
  const Alphabet b(2, 3);
  using oracle::Digits;
  const auto s1 = oracle::from_rule(b, [](Digits x) { return Digits{x[0], (x[1] + x[2]) % 2, x[2]}; });
  const auto s2 = oracle::from_rule(b, [](Digits x) { return Digits{(x[0] + x[1]) % 2, x[1], x[2]}; });
  const Permutation composite = compose(s2, s1);
  CHECK(essential_variables(composite, 1) == std::vector<int>{1, 2, 3});
  CHECK(arity(composite) == 3);

  std::mt19937_64 rng(23);
  const Alphabet c(3, 3);
  for (int i = 0; i < 10; ++i) {
    const Permutation f = oracle::random_perm(c, rng);
    for (int j = 1; j <= 3; ++j) {
      const auto ev = essential_variables(f, j);
      REQUIRE(std::set<int>(ev.begin(), ev.end()) == oracle::essential(oracle::images_of(f), 3, 3, j));
    }
  }
}

TEST_CASE("unary permutations") {
  const Alphabet a(2, 2);
  CHECK(is_unary_permutation(swap_perm(a)));
  CHECK_FALSE(is_unary_permutation(gf2_instructions(a)[1]));
  CHECK(is_unary_permutation(gf2_instructions(a)[0]));
  CHECK(is_unary_permutation(Permutation(a)));
  const auto U = oracle::all_unary(a);
  CHECK(U.size() == 8);
  std::set<oracle::Images> unary_set;
  for (const auto& u : U) {
    REQUIRE(is_unary_permutation(u));
    unary_set.insert(oracle::images_of(u));
  }
  CHECK(unary_set.size() == 8);
  for (const auto& f : oracle::all_permutations(4))
    REQUIRE(is_unary_permutation(oracle::perm(a, f)) == (unary_set.count(f) == 1));

  const Alphabet b(3, 2);
  CHECK(oracle::all_unary(b).size() == 72);
  std::set<oracle::Images> unary_b;
  for (const auto& u : oracle::all_unary(b)) unary_b.insert(oracle::images_of(u));
  CHECK(unary_b.size() == 72);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const Permutation f = oracle::random_perm(b, rng);
    REQUIRE(is_unary_permutation(f) == (unary_b.count(oracle::images_of(f)) == 1));
  }
}

TEST_CASE("conjugation by the variable swap") {
  const Alphabet a(2, 2);
  const auto h = swap_perm(a);
  const auto g = gf2_instructions(a)[0];  // (x1 + 1, x2)
  CHECK(conjugate(h, g) == gf2_instructions(a)[3]);  // (x1, x2 + 1)
  CHECK(conjugate(Permutation(a), g) == g);
  const Permutation c = conjugate(h, g);
  const Permutation hinv = inverse(h);
  for (StateIndex s = 0; s < a.size(); ++s) CHECK(c(s) == hinv(g(h(s))));
}

TEST_CASE("instruction enumeration") {
  CHECK(instruction_count(Alphabet(2, 2)) == 6);
  CHECK(instruction_count(Alphabet(2, 3)) == 45);
  CHECK(instruction_count(Alphabet(3, 2)) == 430);
  CHECK(instruction_count(Alphabet(4, 3)) == 3 * (boost::multiprecision::pow(BigInt(24), 16) - 1));

  for (auto [q, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Alphabet a(q, n);
    const auto list = enumerate_instructions(a);
    REQUIRE(BigInt(list.size()) == instruction_count(a));
    std::set<oracle::Images> seen;
    int last_reg = 0;
    for (const auto& g : list) {
      REQUIRE_FALSE(g.is_identity());
      REQUIRE(g.reg() >= last_reg);
      last_reg = g.reg();
      REQUIRE(seen.insert(oracle::images_of(g.to_permutation())).second);
    }
    // Within a register the tables ascend lexicographically.
    for (std::size_t i = 1; i < list.size(); ++i)
      if (list[i].reg() == list[i - 1].reg())
        REQUIRE(std::lexicographical_compare(list[i - 1].table().begin(), list[i - 1].table().end(),
                                             list[i].table().begin(), list[i].table().end()));
    if (a.size() <= 9) {
      const auto brute = oracle::all_instructions_brute(q, n);
      std::set<oracle::Images> expect(brute.begin(), brute.end());
      expect.erase(oracle::identity(a.size()));
      CHECK(seen == expect);
    }
  }
  CHECK_THROWS_AS(enumerate_instructions(Alphabet(3, 3)), TooLargeError);
  try {
    enumerate_instructions(Alphabet(2, 4), 10);
    FAIL("expected TooLargeError");
  } catch (const TooLargeError& e) {
    CHECK(std::string(e.what()).find("1020") != std::string::npos);
  }
}

TEST_CASE("unary conjugation maps instructions to instructions") {
  // Exhaustive at q=2, n=2.
  const Alphabet a(2, 2);
  const auto instructions = enumerate_instructions(a);
  for (const auto& h : oracle::all_unary(a))
    for (const auto& g : instructions) REQUIRE(as_instruction(conjugate(h, g.to_permutation())).has_value());

  // Sampled at q=3, n=2.
  const Alphabet b(3, 2);
  const auto ins_b = enumerate_instructions(b);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const auto h = oracle::random_unary(b, rng);
    for (const auto& g : ins_b) REQUIRE(as_instruction(conjugate(h, g.to_permutation())).has_value());
  }
}

TEST_CASE("non-unary conjugation breaks some instruction") {
  const Alphabet a(2, 2);
  const auto instructions = enumerate_instructions(a);
  for (const auto& images : oracle::all_permutations(4)) {
    const auto h = oracle::perm(a, images);
    if (is_unary_permutation(h)) continue;
    bool witness = false;
    for (const auto& g : instructions)
      if (updated_registers(conjugate(h, g.to_permutation())).size() >= 2) witness = true;
    REQUIRE(witness);
  }
  const Alphabet b(3, 2);
  const auto ins_b = enumerate_instructions(b);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const auto h = oracle::random_perm(b, rng);
    if (is_unary_permutation(h)) continue;
    bool witness = false;
    for (const auto& g : ins_b)
      if (updated_registers(conjugate(h, g.to_permutation())).size() >= 2) {
        witness = true;
        break;
      }
    REQUIRE(witness);
  }
}

TEST_CASE("even q: instructions that read at most n-1 registers are even") {
  const Alphabet a(2, 3);
  int checked = 0;
  for (const auto& g : enumerate_instructions(a)) {
    if (arity(g.to_permutation()) <= 2) {
      REQUIRE(sign(g.to_permutation()) == 1);
      ++checked;
    }
  }
  CHECK(checked > 0);

  // q=4, n=3: random instructions whose register-j update ignores one other register.
  const Alphabet b(4, 3);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const int j = 1 + static_cast<int>(rng() % 3);
    int ignored = 1 + static_cast<int>(rng() % 3);
    if (ignored == j) ignored = ignored % 3 + 1;
    std::vector<std::vector<int>> fiber_perm(16);
    std::vector<Value> table(b.size());
    for (StateIndex s = 0; s < b.size(); ++s) {
      // Key the fiber permutation by the registers other than j and ignored.
      int key = 0;
      for (int r = 1; r <= 3; ++r)
        if (r != j && r != ignored) key = key * 4 + b.coordinate(s, r);
      auto& p = fiber_perm[key];
      if (p.empty()) {
        p = {0, 1, 2, 3};
        std::shuffle(p.begin(), p.end(), rng);
      }
      table[s] = static_cast<Value>(p[b.coordinate(s, j)]);
    }
    const auto g = Instruction::from_table(b, j, table);
    REQUIRE(arity(g.to_permutation()) <= 2);
    REQUIRE(sign(g.to_permutation()) == 1);
  }
}

TEST_CASE("text formats round trip") {
  const Alphabet a(3, 2);
  std::mt19937_64 rng(43);
  const Permutation f = oracle::random_perm(a, rng);
  const std::string text = format_permutation(f);
  CHECK(parse_permutation(text) == f);

  const auto list = enumerate_instructions(a);
  const Program p(a, {list[5], list[300], Instruction::identity(a)});
  const Program back = parse_program(format_program(p));
  REQUIRE(back.length() == 3);
  CHECK(back.steps[0] == p.steps[0]);
  CHECK(back.steps[1] == p.steps[1]);
  CHECK(back.steps[2].is_identity());

  CHECK(format_permutation(Permutation(Alphabet(2, 2))) == "2 2\n0 1 2 3\n");

  std::istringstream two("2 1\n1 0\n\n2 1\n0 1\n");
  CHECK(parse_permutations(two).size() == 2);
}

TEST_CASE("parsers report line and column") {
  auto fails_at = [](const std::string& text, std::size_t line, bool program) {
    try {
      if (program)
        parse_program(text);
      else
        parse_permutation(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      return true;
    }
    return false;
  };
  CHECK(fails_at("2 2\n0 1 2 2\n", 2, false));
  CHECK(fails_at("2 2\n0 1 2\n", 2, false));
  CHECK(fails_at("2 x\n0 1 2 3\n", 1, false));
  CHECK(fails_at("1 2\n0\n", 1, false));
  CHECK(fails_at("2 2 1\n3 0 1 1 0\n", 2, true));
  CHECK(fails_at("2 2 1\n1 0 1 0 1\n", 2, true));
  CHECK(fails_at("2 2 2\n1 1 0 0 1\n", 3, true));
  CHECK(fails_at("2 2\n0 1 2 3 4\n", 2, false));
}
