#include "memoryless_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "memoryless/analysis.hpp"
#include "memoryless/error.hpp"
#include "memoryless/generators.hpp"
#include "memoryless/graycode.hpp"
#include "memoryless/group.hpp"
#include "memoryless/instruction.hpp"
#include "memoryless/permutation.hpp"
#include "memoryless/synthesis.hpp"
#include "memoryless/text_format.hpp"

namespace memoryless::cli {
namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string labels = "paper";
  std::optional<std::uint64_t> cap;
  int q = 2;
  int n = 2;
  int l = 2;
  std::string input;
  std::string output;
  std::string program;
  std::string target;
  std::vector<std::string> cycles;
  std::string group;
  std::string set = "all";
  std::string set_j = "even";
  std::string set_k = "all";
  std::string expect;
  bool show_program = false;
};

class Context {
 public:
  Context(const Options& options, std::istream& in, std::ostream& out) : options_(options), in_(in), out_(out) {}

  const Options& options() const { return options_; }
  std::ostream& out() { return out_; }

  std::uint64_t cap() const {
    if (options_.cap) return *options_.cap;
    if (const char* env = std::getenv("MEMORYLESS_CAP"); env != nullptr && *env != '\0') {
      std::size_t used = 0;
      unsigned long long value = 0;
      try {
        value = std::stoull(env, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != std::string(env).size() || value == 0)
        throw UsageError(std::string("MEMORYLESS_CAP must be a positive integer, got '") + env + "'");
      return value;
    }
    return kDefaultCap;
  }

  bool canonical() const { return options_.labels == "canonical"; }
  // Style for plain lexicographic listings.
  LabelStyle lex_style() const { return canonical() ? LabelStyle::Canonical : LabelStyle::Lexicographic; }

  Alphabet alphabet() const { return Alphabet(options_.q, options_.n); }

  std::string read_text(const std::string& path) {
    if (path == "-") {
      std::ostringstream buffer;
      buffer << in_.rdbuf();
      return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw InvalidArgumentError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }

  std::vector<Permutation> read_permutations(const std::string& path) {
    std::istringstream text(read_text(path));
    try {
      return parse_permutations(text);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), path + ": " + e.message());
    }
  }

  Program read_program(const std::string& path) {
    std::istringstream text(read_text(path));
    try {
      return parse_program(text);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), path + ": " + e.message());
    }
  }

  // Permutations from --input (records) and --cycles (notation over --q/--n).
  std::vector<Permutation> permutations() {
    std::vector<Permutation> result;
    if (!options_.input.empty()) result = read_permutations(options_.input);
    for (const auto& text : options_.cycles) result.push_back(parse_cycle_text(text));
    return result;
  }

  Permutation single_permutation() {
    auto perms = permutations();
    if (perms.size() != 1) throw UsageError("expected exactly one permutation from --input or --cycles");
    return perms.front();
  }

  void emit(const std::string& text) {
    if (options_.output.empty() || options_.output == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(options_.output);
    if (!file) throw InvalidArgumentError("cannot write '" + options_.output + "'");
    file << text;
  }

 private:
  Permutation parse_cycle_text(const std::string& text) const {
    const Alphabet a = alphabet();
    const StateIndex offset = canonical() ? 0 : 1;
    std::vector<std::vector<StateIndex>> cycles;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
      throw InvalidArgumentError("cycle notation '" + text + "' at offset " + std::to_string(i) + ": " + why);
    };
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != '(') fail("expected '('");
      ++i;
      std::vector<StateIndex> cycle;
      while (true) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        if (i >= text.size()) fail("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a label");
        std::uint64_t label = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          label = label * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (label > a.size() + 1) fail("label out of range");
          ++i;
        }
        if (label < offset || label - offset >= a.size()) fail("label out of range");
        cycle.push_back(static_cast<StateIndex>(label - offset));
      }
      if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(a, cycles);
  }

  const Options& options_;
  std::istream& in_;
  std::ostream& out_;
};

const char* yes_no(bool value) { return value ? "yes" : "no"; }

int verdict(Context& ctx, bool ok) {
  ctx.out() << (ok ? "OK" : "FAIL") << '\n';
  return ok ? kOk : kDomainError;
}

bool expectation_met(const Options& options, bool value) {
  if (options.expect.empty()) return true;
  return (options.expect == "yes") == value;
}

std::vector<Instruction> instruction_set(const Alphabet& a, const std::string& name, std::uint64_t cap) {
  if (name == "all") return all_instructions(a, cap);
  if (name == "even") return even_instructions(a, cap);
  if (name == "coxeter") return coxeter_instructions(a);
  throw UsageError("unknown instruction set '" + name + "'");
}

std::string state_digits(const Alphabet& a, StateIndex s) {
  std::string text;
  for (int r = 1; r <= a.n(); ++r) {
    if (a.q() > 10 && r > 1) text += ',';
    text += std::to_string(a.coordinate(s, r));
  }
  return text;
}

int cmd_synthesize(Context& ctx) {
  const Permutation f = ctx.single_permutation();
  ctx.emit(format_program(synthesize(f)));
  return kOk;
}

int cmd_optimal(Context& ctx) {
  const Permutation f = ctx.single_permutation();
  ctx.emit(format_program(optimal_program(f)));
  return kOk;
}

int cmd_verify(Context& ctx) {
  const auto& o = ctx.options();
  if (o.program.empty()) throw UsageError("verify needs --program");
  const Program program = ctx.read_program(o.program);
  std::optional<Permutation> target;
  if (!o.target.empty()) {
    auto perms = ctx.read_permutations(o.target);
    if (perms.size() != 1) throw UsageError("--target must hold exactly one permutation");
    target = perms.front();
  } else if (!o.cycles.empty()) {
    target = ctx.single_permutation();
  } else {
    throw UsageError("verify needs --target or --cycles");
  }
  const Alphabet& a = program.alphabet;
  auto& out = ctx.out();
  out << "q: " << a.q() << '\n';
  out << "n: " << a.n() << '\n';
  out << "length: " << program.length() << '\n';
  out << "bound: " << 2 * a.n() - 1 << '\n';
  out << "within_bound: " << yes_no(program.length() <= static_cast<std::size_t>(2 * a.n() - 1)) << '\n';
  const bool same_alphabet = a == target->alphabet();
  out << "same_alphabet: " << yes_no(same_alphabet) << '\n';
  const bool computes = same_alphabet && program_to_perm(program) == *target;
  out << "computes_target: " << yes_no(computes) << '\n';
  return verdict(ctx, computes);
}

int cmd_complexity(Context& ctx) {
  const auto& o = ctx.options();
  const Permutation f = ctx.single_permutation();
  const Alphabet& a = f.alphabet();
  const auto steps = instruction_set(a, o.set, ctx.cap());
  const auto program = shortest_program(f, steps, ctx.cap());
  if (!program) throw NotComputableError("permutation is not generated by the '" + o.set + "' instruction set");
  auto& out = ctx.out();
  out << "set: " << o.set << '\n';
  out << "complexity: " << program->length() << '\n';
  if (o.show_program) out << format_program(*program);
  return kOk;
}

int cmd_diameter(Context& ctx) {
  const auto& o = ctx.options();
  const Alphabet a = ctx.alphabet();
  std::optional<std::vector<Instruction>> set;
  if (o.set != "all") set = instruction_set(a, o.set, ctx.cap());
  const ComplexityTable table = complexity_table(a, set, ctx.cap());
  auto& out = ctx.out();
  out << "diameter " << table.diameter() << '\n';
  out << "elements " << table.size() << '\n';
  out << "mean " << table.mean().str() << '\n';
  out << "mean_reference_2n-3 " << 2 * a.n() - 3 << '\n';
  out << "distance\tcount\n";
  const auto& histogram = table.histogram();
  for (std::size_t d = 0; d < histogram.size(); ++d) out << d << '\t' << histogram[d] << '\n';
  return kOk;
}

int cmd_generators(Context& ctx) {
  const auto& o = ctx.options();
  const Alphabet a = ctx.alphabet();
  GeneratorFamily family = [&] {
    if (o.group == "sym") return sym_generators(a);
    if (o.group == "alt") return alt_generators(a);
    throw UsageError("--group must be sym or alt");
  }();
  const LabelStyle style = ctx.canonical() ? LabelStyle::Canonical : family.labels;
  auto& out = ctx.out();
  out << "group: " << o.group << '\n';
  out << "q: " << a.q() << '\n';
  out << "n: " << a.n() << '\n';
  out << "construction: " << family.construction << '\n';
  out << "labels: "
      << (style == LabelStyle::Canonical ? "canonical" : style == LabelStyle::Gray ? "gray" : "lexicographic") << '\n';
  for (const auto& g : family.pis)
    out << "register_" << g.reg() << ": " << format_cycles(g.to_permutation(), style) << '\n';
  out << "program:\n";
  out << format_program(Program(a, family.pis));
  const FamilyReport report = verify_family(family);
  out << "report:\n";
  for (std::size_t i = 0; i < family.audits.size(); ++i) {
    const auto& audit = family.audits[i];
    out << "cases_register_" << i + 1 << ":";
    for (std::size_t b = 0; b < audit.branches.size(); ++b)
      out << (b == 0 ? " " : "; ") << audit.branches[b] << " = " << audit.hits[b];
    out << '\n';
  }
  out << "instructions_ok: " << yes_no(report.instructions_ok) << '\n';
  out << "one_per_register: " << yes_no(report.one_per_register) << '\n';
  out << "parity_ok: " << yes_no(report.parity_ok) << '\n';
  out << "transitive: " << yes_no(report.transitive) << '\n';
  out << "identity: " << to_string(report.identity.tag) << '\n';
  out << "order: " << to_string(report.identity.order) << '\n';
  out << "expected_order: " << to_string(report.expected_order) << '\n';
  out << "generation_ok: " << yes_no(report.generation_ok) << '\n';
  return verdict(ctx, report.passed());
}

int cmd_gray(Context& ctx) {
  const Alphabet a = ctx.alphabet();
  const GraySequence gray = gray_sequence(a);
  auto& out = ctx.out();
  out << "position\tlabel\tindex\tstate\n";
  for (StateIndex p = 0; p < a.size(); ++p) {
    const StateIndex s = gray.order[p];
    out << p << '\t' << p + 1 << '\t' << s << '\t' << state_digits(a, s) << '\n';
  }
  return kOk;
}

int cmd_coxeter(Context& ctx) {
  const Alphabet a = ctx.alphabet();
  const LabelStyle style = ctx.canonical() ? LabelStyle::Canonical : LabelStyle::Gray;
  const auto set = coxeter_instructions(a);
  auto& out = ctx.out();
  out << "k\tregister\ttransposition\n";
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < set.size(); ++k) {
    perms.push_back(set[k].to_permutation());
    out << k + 1 << '\t' << set[k].reg() << '\t' << format_cycles(perms.back(), style) << '\n';
  }
  const bool all_instructions_ok =
      std::all_of(perms.begin(), perms.end(), [](const Permutation& p) { return as_instruction(p).has_value(); });
  const GroupChain chain = build_chain(a, perms);
  const bool generates = chain.order() == symmetric_order(a);
  bool minimal = true;
  for (std::size_t skip = 0; skip < perms.size() && minimal; ++skip) {
    std::vector<Permutation> rest;
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (k != skip) rest.push_back(perms[k]);
    if (orbits(a, rest).size() > 1) continue;
    if (build_chain(a, rest).order() == symmetric_order(a)) minimal = false;
  }
  const std::uint64_t expected = a.size() - 1;
  out << "count: " << set.size() << '\n';
  out << "expected_count: " << expected << '\n';
  out << "all_instructions: " << yes_no(all_instructions_ok) << '\n';
  out << "generates_symmetric: " << yes_no(generates) << '\n';
  out << "minimal: " << yes_no(minimal) << '\n';
  return verdict(ctx, set.size() == expected && all_instructions_ok && generates && minimal);
}

GroupTag parse_tag(const std::string& name) {
  if (name == "sym") return GroupTag::Symmetric;
  if (name == "alt") return GroupTag::Alternating;
  if (name == "affine") return GroupTag::AffineOverGF2;
  if (name == "other") return GroupTag::Other;
  throw UsageError("--expect must be sym, alt, affine or other");
}

int cmd_lary_group(Context& ctx) {
  const auto& o = ctx.options();
  const Alphabet a = ctx.alphabet();
  if (o.l < 1 || o.l > a.n()) throw UsageError("--l must satisfy 1 <= l <= n");
  std::optional<GroupTag> expected;
  if (!o.expect.empty()) expected = parse_tag(o.expect);
  auto& out = ctx.out();
  out << "q: " << a.q() << '\n';
  out << "n: " << a.n() << '\n';
  out << "l: " << o.l << '\n';
  if (o.l == 1) throw UnsupportedCaseError("l = 1: unary instructions generate a proper subgroup; use l >= 2");
  out << "generators: " << lary_generators(a, o.l).size() << '\n';
  const GroupIdentity identity = lary_group(a, o.l);
  out << "group: " << to_string(identity.tag) << '\n';
  out << "order: " << to_string(identity.order) << '\n';
  if (o.l < a.n()) {
    const Program witness = lary_closure_counterexample(a, o.l);
    int worst = 0;
    for (const auto& step : witness.steps) worst = std::max(worst, arity(step.to_permutation()));
    out << "closure_witness_step_arity: " << worst << '\n';
    out << "closure_witness_arity: " << arity(program_to_perm(witness)) << '\n';
  }
  return verdict(ctx, !expected || *expected == identity.tag);
}

int cmd_internal(Context& ctx) {
  const auto& o = ctx.options();
  std::vector<Permutation> gens;
  if (!o.group.empty()) {
    const Alphabet a = ctx.alphabet();
    if (o.group == "alt")
      gens = alternating_group_generators(a);
    else if (o.group == "sym")
      gens = symmetric_group_generators(a);
    else
      throw UsageError("--group must be sym or alt");
  }
  for (auto& p : ctx.permutations()) gens.push_back(std::move(p));
  if (gens.empty()) throw UsageError("internal needs generators via --input, --cycles or --group");
  const InternalComputability result = internal_computability(gens, ctx.cap());
  const LabelStyle style = ctx.lex_style();
  auto& out = ctx.out();
  out << "group_order: " << to_string(result.group_order) << '\n';
  out << "computable_order: " << to_string(result.computable_order) << '\n';
  out << "instruction_elements: " << result.instruction_elements.size() << '\n';
  for (const auto& e : result.instruction_elements) out << "element: " << format_cycles(e, style) << '\n';
  out << "internally_computable: " << yes_no(result.internally_computable) << '\n';
  return verdict(ctx, expectation_met(o, result.internally_computable));
}

int cmd_fastness(Context& ctx) {
  const auto& o = ctx.options();
  const Permutation g = ctx.single_permutation();
  const Alphabet& a = g.alphabet();
  const auto J = instruction_set(a, o.set_j, ctx.cap());
  const auto K = instruction_set(a, o.set_k, ctx.cap());
  const FastnessReport report = fastness(g, J, K, ctx.cap());
  auto& out = ctx.out();
  out << "J: " << o.set_j << '\n';
  out << "K: " << o.set_k << '\n';
  out << "L_J: " << report.lJ << '\n';
  out << "L_K: " << report.lK << '\n';
  out << "fast: " << yes_no(report.fast) << '\n';
  return verdict(ctx, expectation_met(o, report.fast));
}

int cmd_conjugacy_check(Context& ctx) {
  const auto perms = ctx.permutations();
  if (perms.size() != 2) throw UsageError("conjugacy-check needs two permutations g then h");
  const Permutation& g = perms[0];
  const Permutation& h = perms[1];
  require_same(g.alphabet(), h.alphabet());
  if (!is_unary_permutation(h)) throw PreconditionError("h is not a unary permutation");
  const auto steps = all_instructions(g.alphabet(), ctx.cap());
  const auto lg = shortest_program(g, steps, ctx.cap());
  const auto lc = shortest_program(conjugate(h, g), steps, ctx.cap());
  auto& out = ctx.out();
  out << "L_g: " << lg->length() << '\n';
  out << "L_conjugate: " << lc->length() << '\n';
  const bool preserved = lg->length() == lc->length();
  out << "preserved: " << yes_no(preserved) << '\n';
  return verdict(ctx, preserved);
}

int cmd_swap_demo(Context& ctx) {
  const Alphabet a = ctx.alphabet();
  if (a.n() < 2) throw UsageError("swap-demo needs n >= 2");
  const int q = a.q();
  auto step = [&](int reg, auto rule) {
    std::vector<Value> table(a.size());
    for (StateIndex s = 0; s < a.size(); ++s)
      table[s] = static_cast<Value>(rule(a.coordinate(s, 1), a.coordinate(s, 2)) % q);
    return Instruction::from_table(a, reg, std::move(table));
  };
  const Program program(a, {step(1, [&](int y1, int y2) { return y1 + y2; }),
                            step(2, [&](int y1, int y2) { return y1 - y2 + q; }),
                            step(1, [&](int y1, int y2) { return y1 - y2 + q; })});
  std::vector<StateIndex> images(a.size());
  for (StateIndex s = 0; s < a.size(); ++s)
    images[s] = a.with_coordinate(a.with_coordinate(s, 1, a.coordinate(s, 2)), 2, a.coordinate(s, 1));
  const Permutation swap = Permutation::from_images(a, std::move(images));
  auto& out = ctx.out();
  out << "y_1 <- y_1 + y_2\n";
  out << "y_2 <- y_1 - y_2\n";
  out << "y_1 <- y_1 - y_2\n";
  out << "program:\n" << format_program(program);
  out << "report:\n";
  const bool computes = program_to_perm(program) == swap;
  out << "length: " << program.length() << '\n';
  out << "computes_swap: " << yes_no(computes) << '\n';
  bool optimal_ok = true;
  if (a.size() <= 9) {
    const std::size_t best = optimal_program(swap).length();
    out << "optimal_length: " << best << '\n';
    optimal_ok = best == program.length();
  } else {
    out << "optimal_length: skipped\n";
  }
  return verdict(ctx, computes && optimal_ok);
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Memoryless computation in permutation groups", "memoryless"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  auto add_labels = [&](CLI::App* sub) {
    sub->add_option("--labels", o.labels, "State labels in listings: paper (1-based) or canonical (0-based)")
        ->check(CLI::IsMember({"paper", "canonical"}));
    sub->add_option("--cap", o.cap, "Enumeration cap (overrides MEMORYLESS_CAP)")->check(CLI::PositiveNumber);
  };
  auto add_qn = [&](CLI::App* sub, bool required) {
    auto* q = sub->add_option("--q", o.q, "Alphabet size")->check(CLI::Range(2, 65535));
    auto* n = sub->add_option("--n", o.n, "Number of registers")->check(CLI::Range(1, 32));
    if (required) {
      q->required();
      n->required();
    }
  };
  auto add_perm_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Permutation file ('-' for stdin)");
    sub->add_option("--cycles", o.cycles, "Permutation in cycle notation over --q/--n, e.g. '(1,2,3)(6,7)'");
    add_qn(sub, false);
  };
  const std::vector<std::string> sets{"all", "even", "coxeter"};

  auto* synth = app.add_subcommand("synthesize", "Program of at most 2n-1 instructions for a permutation");
  add_perm_input(synth);
  synth->add_option("--output,-o", o.output, "Output file");
  add_labels(synth);

  auto* optimal = app.add_subcommand("optimal", "Shortest program over all instructions (q^n <= 9)");
  add_perm_input(optimal);
  optimal->add_option("--output,-o", o.output, "Output file");
  add_labels(optimal);

  auto* verify = app.add_subcommand("verify", "Check that a program computes a target permutation");
  verify->add_option("--program,-p", o.program, "Program file ('-' for stdin)");
  verify->add_option("--target,-t", o.target, "Target permutation file");
  verify->add_option("--cycles", o.cycles, "Target in cycle notation over --q/--n");
  add_qn(verify, false);
  add_labels(verify);

  auto* complexity = app.add_subcommand("complexity", "L(f) over an instruction set");
  add_perm_input(complexity);
  complexity->add_option("--set", o.set, "Instruction set")->check(CLI::IsMember(sets));
  complexity->add_flag("--show-program", o.show_program, "Also print a shortest program");
  add_labels(complexity);

  auto* diameter = app.add_subcommand("diameter", "Exhaustive complexity distribution");
  add_qn(diameter, true);
  diameter->add_option("--set", o.set, "Instruction set")->check(CLI::IsMember(sets));
  add_labels(diameter);

  auto* generators = app.add_subcommand("generators", "n-instruction generating family for Sym or Alt");
  add_qn(generators, true);
  generators->add_option("--group", o.group, "sym or alt")->required()->check(CLI::IsMember({"sym", "alt"}));
  add_labels(generators);

  auto* gray = app.add_subcommand("gray", "Reflected Gray ordering of A^n");
  add_qn(gray, true);
  add_labels(gray);

  auto* coxeter = app.add_subcommand("coxeter", "Adjacent transpositions of the Gray ordering");
  add_qn(coxeter, true);
  add_labels(coxeter);

  auto* lary = app.add_subcommand("lary-group", "Group generated by l-ary instructions");
  add_qn(lary, true);
  lary->add_option("--l", o.l, "Arity bound")->required();
  lary->add_option("--expect", o.expect, "Expected identity: sym, alt, affine or other");
  add_labels(lary);

  auto* internal = app.add_subcommand("internal", "Internal computability of a permutation group");
  add_perm_input(internal);
  internal->add_option("--group", o.group, "Use Sym(A^n) or Alt(A^n) over --q/--n")
      ->check(CLI::IsMember({"sym", "alt"}));
  internal->add_option("--expect", o.expect, "Expected verdict")->check(CLI::IsMember({"yes", "no"}));
  add_labels(internal);

  auto* fast = app.add_subcommand("fastness", "Compare L(g, J) with L(g, K)");
  add_perm_input(fast);
  fast->add_option("--J", o.set_j, "Smaller instruction set")->check(CLI::IsMember(sets));
  fast->add_option("--K", o.set_k, "Larger instruction set")->check(CLI::IsMember(sets));
  fast->add_option("--expect", o.expect, "Expected verdict")->check(CLI::IsMember({"yes", "no"}));
  add_labels(fast);

  auto* conj = app.add_subcommand("conjugacy-check", "L(g) against L(h^-1 g h) for unary h");
  add_perm_input(conj);
  add_labels(conj);

  auto* swap = app.add_subcommand("swap-demo", "Three-instruction swap of registers 1 and 2");
  add_qn(swap, false);
  add_labels(swap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Context ctx(o, in, out);
  try {
    if (*synth) return cmd_synthesize(ctx);
    if (*optimal) return cmd_optimal(ctx);
    if (*verify) return cmd_verify(ctx);
    if (*complexity) return cmd_complexity(ctx);
    if (*diameter) return cmd_diameter(ctx);
    if (*generators) return cmd_generators(ctx);
    if (*gray) return cmd_gray(ctx);
    if (*coxeter) return cmd_coxeter(ctx);
    if (*lary) return cmd_lary_group(ctx);
    if (*internal) return cmd_internal(ctx);
    if (*fast) return cmd_fastness(ctx);
    if (*conj) return cmd_conjugacy_check(ctx);
    if (*swap) return cmd_swap_demo(ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kDomainError;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(argc, argv, std::cin, out, err);
}

}  // namespace memoryless::cli
