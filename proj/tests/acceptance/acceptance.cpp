// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "memoryless/analysis.hpp"
#include "memoryless/generators.hpp"
#include "memoryless/graycode.hpp"
#include "memoryless/group.hpp"
#include "memoryless/synthesis.hpp"
#include "memoryless/text_format.hpp"
#include "memoryless_cli/cli.hpp"

using namespace memoryless;

namespace {

struct Cli {
  int code;
  std::string out;
};

Cli cli(std::vector<std::string> args) {
  args.insert(args.begin(), "memoryless");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str() + err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

bool ends_ok(const Cli& r) { return r.code == 0 && r.out.size() >= 3 && r.out.substr(r.out.size() - 3) == "OK\n"; }

// Collects failure notes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Permutation swap_perm(const Alphabet& a) {
  std::vector<StateIndex> images(a.size());
  for (StateIndex s = 0; s < a.size(); ++s)
    images[s] = a.with_coordinate(a.with_coordinate(s, 1, a.coordinate(s, 2)), 2, a.coordinate(s, 1));
  return Permutation::from_images(a, images);
}

Permutation random_perm(const Alphabet& a, std::mt19937_64& rng) {
  std::vector<StateIndex> images(a.size());
  for (StateIndex s = 0; s < a.size(); ++s) images[s] = s;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(a, images);
}

Permutation random_unary(const Alphabet& a, std::mt19937_64& rng) {
  std::vector<std::vector<Value>> sigma(a.n(), std::vector<Value>(a.q()));
  for (auto& s : sigma) {
    for (int v = 0; v < a.q(); ++v) s[v] = static_cast<Value>(v);
    std::shuffle(s.begin(), s.end(), rng);
  }
  std::vector<int> pi(a.n());
  for (int i = 0; i < a.n(); ++i) pi[i] = i + 1;
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<StateIndex> images(a.size());
  for (StateIndex s = 0; s < a.size(); ++s) {
    StateIndex t = 0;
    for (int r = 1; r <= a.n(); ++r) t = a.with_coordinate(t, pi[r - 1], sigma[r - 1][a.coordinate(s, r)]);
    images[s] = t;
  }
  return Permutation::from_images(a, images);
}

std::vector<Permutation> all_permutations(const Alphabet& a) {
  std::vector<StateIndex> images(a.size());
  for (StateIndex s = 0; s < a.size(); ++s) images[s] = s;
  std::vector<Permutation> result;
  do result.push_back(Permutation::from_images(a, images));
  while (std::next_permutation(images.begin(), images.end()));
  return result;
}

void criterion1(Check& c) {
  for (int q : {2, 3}) {
    const Alphabet a(q, 2);
    std::istringstream text(format_permutation(swap_perm(a)));
    const Cli r = [&] {
      std::vector<std::string> args{"memoryless", "optimal", "--input", "-"};
      std::vector<const char*> argv;
      for (const auto& s : args) argv.push_back(s.c_str());
      std::ostringstream out, err;
      const int code = cli::run(static_cast<int>(argv.size()), argv.data(), text, out, err);
      return Cli{code, out.str() + err.str()};
    }();
    const std::string header = std::to_string(q) + " 2 3\n";
    c.expect(r.code == 0 && r.out.rfind(header, 0) == 0, "optimal swap length != 3 at q=" + std::to_string(q));
    c.expect(optimal_program(swap_perm(a)).length() == 3, "optimal_program(swap) != 3 at q=" + std::to_string(q));
  }
}

void criterion2(Check& c) {
  for (auto [q, n, d] : {std::tuple{2, 2, 3}, {2, 3, 5}, {3, 2, 3}}) {
    const Cli r = cli({"diameter", "--q", std::to_string(q), "--n", std::to_string(n)});
    c.expect(r.code == 0 && r.out.rfind("diameter " + std::to_string(d) + "\n", 0) == 0,
             "diameter at q=" + std::to_string(q) + ",n=" + std::to_string(n));
  }
}

void criterion3(Check& c) {
  std::mt19937_64 rng(2024);
  for (int q = 2; q <= 5; ++q)
    for (int n = 2; n <= 4; ++n) {
      const Alphabet a(q, n);
      int bad = 0;
      for (int t = 0; t < 100; ++t) {
        const Permutation f = random_perm(a, rng);
        const Program p = synthesize(f);
        if (p.length() > static_cast<std::size_t>(2 * n - 1) || !(program_to_perm(p) == f)) ++bad;
      }
      c.expect(bad == 0, std::to_string(bad) + " bad programs at q=" + std::to_string(q) + ",n=" + std::to_string(n));
    }
}

void criterion4(Check& c) {
  for (auto [q, n] : {std::pair{2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}, {6, 2}, {4, 3}}) {
    const Cli r = cli({"generators", "--q", std::to_string(q), "--n", std::to_string(n), "--group", "sym"});
    const Alphabet a(q, n);
    c.expect(ends_ok(r) && has(r.out, "order: " + to_string(symmetric_order(a)) + "\n"),
             "sym family at q=" + std::to_string(q) + ",n=" + std::to_string(n));
  }
  // q=3,4,5,7 with q^n <= 64; q=9,10 (and q=6,8 for the 0/2 mod 6 case) at n=2.
  std::vector<std::string> cases;
  for (auto [q, n] : {std::pair{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {7, 2}, {6, 2}, {8, 2}, {9, 2}, {10, 2}}) {
    const Cli r = cli({"generators", "--q", std::to_string(q), "--n", std::to_string(n), "--group", "alt"});
    const Alphabet a(q, n);
    c.expect(ends_ok(r) && has(r.out, "order: " + to_string(alternating_order(a)) + "\n") &&
                 has(r.out, "parity_ok: yes"),
             "alt family at q=" + std::to_string(q) + ",n=" + std::to_string(n));
    const auto family = alt_generators(a);
    if (std::find(cases.begin(), cases.end(), family.construction) == cases.end())
      cases.push_back(family.construction);
  }
  c.expect(cases.size() >= 6, "fewer than six Alt constructions exercised");
  c.note("Alt constructions: " + std::to_string(cases.size()));
  c.expect(cli({"generators", "--q", "2", "--n", "2", "--group", "sym"}).code == 1, "q=n=2 Sym not rejected");
  c.expect(cli({"generators", "--q", "2", "--n", "3", "--group", "alt"}).code == 1, "q=2 Alt not rejected");
}

void criterion5(Check& c) {
  struct Case {
    int q, n, l;
    const char* expect;
    const char* order;
  };
  for (const Case& k : {Case{2, 3, 2, "affine", "1344"}, Case{2, 4, 2, "affine", "322560"},
                        Case{2, 4, 3, "alt", nullptr}, Case{3, 3, 2, "sym", nullptr}, Case{4, 3, 2, "alt", nullptr}}) {
    const Cli r = cli({"lary-group", "--q", std::to_string(k.q), "--n", std::to_string(k.n), "--l",
                       std::to_string(k.l), "--expect", k.expect});
    bool ok = ends_ok(r);
    if (k.order) ok = ok && has(r.out, std::string("order: ") + k.order + "\n");
    c.expect(ok, "l-ary group at q=" + std::to_string(k.q) + ",n=" + std::to_string(k.n) + ",l=" + std::to_string(k.l));
  }
}

void criterion6(Check& c) {
  const Alphabet a(3, 2);
  const GraySequence gray = gray_sequence(a);
  const Permutation g = Permutation::from_cycles(
      a, {{gray.from_label(1), gray.from_label(2), gray.from_label(3)}, {gray.from_label(6), gray.from_label(7)}});
  const auto cyclic = internal_computability({g});
  auto listed = [&](const Permutation& p) {
    return std::find(cyclic.instruction_elements.begin(), cyclic.instruction_elements.end(), p) !=
           cyclic.instruction_elements.end();
  };
  c.expect(cyclic.internally_computable && listed(power(g, 2)) && listed(power(g, 3)), "cyclic example");
  const Cli r1 = cli({"internal", "--group", "alt", "--q", "2", "--n", "2", "--expect", "no"});
  c.expect(ends_ok(r1) && has(r1.out, "computable_order: 4\n"), "Alt(GF(2)^2)");
  c.expect(ends_ok(cli({"internal", "--group", "alt", "--q", "2", "--n", "3", "--expect", "no"})), "Alt(GF(2)^3)");
  c.expect(ends_ok(cli({"internal", "--group", "alt", "--q", "3", "--n", "2", "--expect", "yes"})), "Alt({0,1,2}^2)");
}

void criterion7(Check& c) {
  const Alphabet a(3, 2);
  const Permutation g = Permutation::from_cycles(a, {{0, a.stride(1), a.stride(2)}});
  const FastnessReport r = fastness(g, even_instructions(a), all_instructions(a));
  c.expect(r.lK == 2, "L(g, all) != 2");
  c.expect(r.lJ >= 3, "L(g, even) < 3");
  c.note("L(g, even instructions) = " + std::to_string(r.lJ));
}

void criterion8(Check& c) {
  const Alphabet a(2, 2);
  const auto instructions = enumerate_instructions(a);
  int unary = 0, non_unary = 0;
  for (const auto& h : all_permutations(a)) {
    if (is_unary_permutation(h)) {
      ++unary;
      for (const auto& g : instructions)
        c.expect(as_instruction(conjugate(h, g.to_permutation())).has_value(), "unary conjugate not an instruction");
    } else {
      ++non_unary;
      bool witness = false;
      for (const auto& g : instructions)
        if (!as_instruction(conjugate(h, g.to_permutation()))) witness = true;
      c.expect(witness, "non-unary permutation without witness");
    }
  }
  c.note("unary " + std::to_string(unary) + ", non-unary " + std::to_string(non_unary));
}

std::string gray_words(const Alphabet& a) {
  const GraySequence g = gray_sequence(a);
  std::string text;
  for (StateIndex s : g.order) {
    if (!text.empty()) text += ',';
    for (int r = 1; r <= a.n(); ++r) text += std::to_string(a.coordinate(s, r));
  }
  return text;
}

void criterion9(Check& c) {
  c.expect(gray_words(Alphabet(2, 3)) == "000,001,011,010,110,111,101,100", "binary Gray listing");
  c.expect(gray_words(Alphabet(3, 2)) == "00,01,02,12,11,10,20,21,22", "ternary Gray listing");
  for (auto [q, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Cli r = cli({"coxeter", "--q", std::to_string(q), "--n", std::to_string(n)});
    c.expect(ends_ok(r) && has(r.out, "minimal: yes"), "coxeter set at q=" + std::to_string(q) + ",n=" + std::to_string(n));
  }
}

void criterion10(Check& c) {
  std::mt19937_64 rng(1234);
  for (auto [q, n] : {std::pair{2, 2}, {3, 2}}) {
    const Alphabet a(q, n);
    const ComplexityTable full = complexity_table(a, std::nullopt);
    int bad = 0;
    for (int t = 0; t < 50; ++t) {
      const Permutation g = random_perm(a, rng);
      const Permutation h = random_unary(a, rng);
      if (full.distance(g) != full.distance(conjugate(h, g))) ++bad;
    }
    c.expect(bad == 0, "U-conjugacy changed L at q=" + std::to_string(q));
  }
  const Alphabet b(2, 3);
  for (const auto& g : enumerate_instructions(b))
    if (arity(g.to_permutation()) <= 2) c.expect(sign(g.to_permutation()) == 1, "odd binary instruction at q=2,n=3");
  const ComplexityTable t = complexity_table(b, std::nullopt);
  c.note("mean L at q=2,n=3 = " + t.mean().str() + " (2n-3 = 3)");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "swap complexity is 3", 10, criterion1},
      {2, "exhaustive diameters equal 2n-1", 300, criterion2},
      {3, "synthesizer stays within 2n-1", 300, criterion3},
      {4, "n-instruction generating families", 600, criterion4},
      {5, "l-ary groups", 600, criterion5},
      {6, "internal computability", 600, criterion6},
      {7, "alternating group is not fast", 600, criterion7},
      {8, "unary conjugation", 600, criterion8},
      {9, "Gray code and Coxeter set", 600, criterion9},
      {10, "property suites", 600, criterion10},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < criterion.budget_seconds, "over time budget");
    std::ostringstream line;
    line << (check.ok() ? "PASS" : "FAIL") << " criterion " << criterion.id << ": " << criterion.title << " ("
         << static_cast<long long>(seconds * 1000) << " ms)";
    for (const auto& n : check.notes()) line << "; " << n;
    for (const auto& f : check.failures()) line << "; " << f;
    std::cout << line.str() << std::endl;
    if (!check.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
