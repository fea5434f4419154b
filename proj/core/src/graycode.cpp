#include "memoryless/graycode.hpp"

#include <algorithm>
#include <sstream>

#include "memoryless/error.hpp"

namespace memoryless {

GraySequence gray_sequence(const Alphabet& alphabet) {
  const auto q = static_cast<StateIndex>(alphabet.q());
  // Build the order register by register; prefix holds the Gray order of the
  // first k registers as canonical indices over A^k.
  std::vector<StateIndex> prefix{0};
  for (int k = 1; k <= alphabet.n(); ++k) {
    std::vector<StateIndex> next;
    next.reserve(prefix.size() * q);
    for (std::size_t p = 0; p < prefix.size(); ++p) {
      for (StateIndex d = 0; d < q; ++d) {
        StateIndex digit = (p % 2 == 0) ? d : q - 1 - d;
        next.push_back(prefix[p] * q + digit);
      }
    }
    prefix = std::move(next);
  }
  GraySequence seq(alphabet);
  seq.order = std::move(prefix);
  seq.position.assign(alphabet.size(), 0);
  for (StateIndex i = 0; i < seq.order.size(); ++i) seq.position[seq.order[i]] = i;
  return seq;
}

std::vector<Instruction> coxeter_instructions(const Alphabet& alphabet) {
  const GraySequence seq = gray_sequence(alphabet);
  std::vector<Instruction> result;
  result.reserve(alphabet.size() - 1);
  for (StateIndex i = 0; i + 1 < alphabet.size(); ++i) {
    auto instruction = as_instruction(Permutation::transposition(alphabet, seq.order[i], seq.order[i + 1]));
    if (!instruction) throw ConstructionError("adjacent Gray states differ in more than one register");
    result.push_back(std::move(*instruction));
  }
  return result;
}

StateIndex state_label(StateIndex index, LabelStyle style, const GraySequence& gray) {
  switch (style) {
    case LabelStyle::Canonical:
      return index;
    case LabelStyle::Lexicographic:
      return lex_label(index);
    case LabelStyle::Gray:
      return gray.label(index);
  }
  return index;
}

std::string format_cycles(const Permutation& f, LabelStyle style) {
  const GraySequence gray = gray_sequence(f.alphabet());
  auto cycles = cycle_decomposition(f).cycles;
  if (cycles.empty()) return "()";
  // Relabel, rotate each cycle to start at its least label, order by that label.
  for (auto& cycle : cycles) {
    for (auto& point : cycle) point = state_label(point, style, gray);
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  }
  std::sort(cycles.begin(), cycles.end());
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? "," : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

}  // namespace memoryless
