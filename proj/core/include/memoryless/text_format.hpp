#pragma once

#include <istream>
#include <string>
#include <vector>

#include "memoryless/instruction.hpp"
#include "memoryless/permutation.hpp"

namespace memoryless {

// Permutation text format:
//   q n
//   f(0) f(1) ... f(q^n - 1)
// Program text format:
//   q n L
//   j t_0 t_1 ... t_{q^n - 1}     (L lines; j is the 1-based register)
// Blank lines are skipped. Violations raise ParseError with line and column.

std::string format_permutation(const Permutation& f);
std::string format_program(const Program& program);

Permutation parse_permutation(std::istream& in);
Program parse_program(std::istream& in);

// Zero or more permutation records back to back, all over the same alphabet.
std::vector<Permutation> parse_permutations(std::istream& in);

Permutation parse_permutation(const std::string& text);
Program parse_program(const std::string& text);

}  // namespace memoryless
