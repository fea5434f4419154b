#include "memoryless/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "memoryless/error.hpp"

namespace memoryless {
namespace {

struct Token {
  std::string text;
  std::size_t column;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split into tokens; nullopt at end of input.
  std::optional<std::vector<Token>> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      std::vector<Token> tokens;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
      }
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  std::size_t line() const { return line_number_; }

  [[noreturn]] void fail(std::size_t column, const std::string& what) const { throw ParseError(line_number_, column, what); }

  std::uint64_t number(const Token& token) const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
    if (ec != std::errc() || ptr != token.text.data() + token.text.size()) {
      fail(token.column, "expected a non-negative integer, got '" + token.text + "'");
    }
    return value;
  }

  std::vector<Token> require_line(const char* what) {
    auto tokens = next();
    if (!tokens) throw ParseError(line_number_ + 1, 1, std::string("unexpected end of input, expected ") + what);
    return *tokens;
  }

  void expect_count(const std::vector<Token>& tokens, std::size_t count, const char* what) const {
    if (tokens.size() != count) {
      std::size_t column = tokens.size() > count ? tokens[count].column : 1;
      fail(column, std::string(what) + ": expected " + std::to_string(count) + " fields, got " +
                       std::to_string(tokens.size()));
    }
  }

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
};

Alphabet read_alphabet(const LineReader& reader, const Token& q_token, const Token& n_token) {
  auto q = reader.number(q_token);
  auto n = reader.number(n_token);
  if (q < 2) reader.fail(q_token.column, "q must be at least 2");
  if (n < 1) reader.fail(n_token.column, "n must be at least 1");
  try {
    return Alphabet(static_cast<int>(q), static_cast<int>(n));
  } catch (const Error& e) {
    reader.fail(q_token.column, e.what());
  }
}

Permutation read_permutation_body(LineReader& reader, const Alphabet& alphabet) {
  auto tokens = reader.require_line("permutation images");
  reader.expect_count(tokens, alphabet.size(), "permutation images");
  std::vector<StateIndex> images(alphabet.size());
  std::vector<bool> seen(alphabet.size(), false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto value = reader.number(tokens[i]);
    if (value >= alphabet.size()) reader.fail(tokens[i].column, "image " + tokens[i].text + " out of range");
    if (seen[value]) reader.fail(tokens[i].column, "image " + tokens[i].text + " repeated; not a bijection");
    seen[value] = true;
    images[i] = static_cast<StateIndex>(value);
  }
  return Permutation::from_images(alphabet, std::move(images));
}

}  // namespace

std::string format_permutation(const Permutation& f) {
  std::ostringstream out;
  out << f.alphabet().q() << ' ' << f.alphabet().n() << '\n';
  for (StateIndex s = 0; s < f.degree(); ++s) out << (s ? " " : "") << f(s);
  out << '\n';
  return out.str();
}

std::string format_program(const Program& program) {
  const Alphabet& a = program.alphabet;
  std::ostringstream out;
  out << a.q() << ' ' << a.n() << ' ' << program.length() << '\n';
  for (const auto& step : program.steps) {
    if (step.is_identity()) {
      out << 1;
      for (StateIndex s = 0; s < a.size(); ++s) out << ' ' << a.coordinate(s, 1);
    } else {
      out << step.reg();
      for (Value v : step.table()) out << ' ' << v;
    }
    out << '\n';
  }
  return out.str();
}

Permutation parse_permutation(std::istream& in) {
  LineReader reader(in);
  auto header = reader.require_line("header 'q n'");
  reader.expect_count(header, 2, "permutation header");
  Alphabet alphabet = read_alphabet(reader, header[0], header[1]);
  Permutation f = read_permutation_body(reader, alphabet);
  if (auto extra = reader.next()) reader.fail((*extra)[0].column, "unexpected trailing content");
  return f;
}

std::vector<Permutation> parse_permutations(std::istream& in) {
  LineReader reader(in);
  std::vector<Permutation> result;
  while (auto header = reader.next()) {
    reader.expect_count(*header, 2, "permutation header");
    Alphabet alphabet = read_alphabet(reader, (*header)[0], (*header)[1]);
    if (!result.empty() && !(result.front().alphabet() == alphabet)) {
      reader.fail((*header)[0].column, "alphabet differs from the first permutation");
    }
    result.push_back(read_permutation_body(reader, alphabet));
  }
  return result;
}

Program parse_program(std::istream& in) {
  LineReader reader(in);
  auto header = reader.require_line("header 'q n L'");
  reader.expect_count(header, 3, "program header");
  Alphabet alphabet = read_alphabet(reader, header[0], header[1]);
  const auto length = reader.number(header[2]);
  Program program(alphabet);
  for (std::uint64_t k = 0; k < length; ++k) {
    auto tokens = reader.require_line("instruction line");
    reader.expect_count(tokens, alphabet.size() + 1, "instruction line");
    auto reg = reader.number(tokens[0]);
    if (reg < 1 || reg > static_cast<std::uint64_t>(alphabet.n())) {
      reader.fail(tokens[0].column, "register " + tokens[0].text + " out of range 1.." + std::to_string(alphabet.n()));
    }
    std::vector<Value> table(alphabet.size());
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      auto value = reader.number(tokens[i]);
      if (value >= static_cast<std::uint64_t>(alphabet.q())) {
        reader.fail(tokens[i].column, "value " + tokens[i].text + " is not below q=" + std::to_string(alphabet.q()));
      }
      table[i - 1] = static_cast<Value>(value);
    }
    try {
      program.steps.push_back(Instruction::from_table(alphabet, static_cast<int>(reg), std::move(table)));
    } catch (const InvalidArgumentError& e) {
      reader.fail(tokens[0].column, e.what());
    }
  }
  if (auto extra = reader.next()) reader.fail((*extra)[0].column, "unexpected trailing content");
  return program;
}

Permutation parse_permutation(const std::string& text) {
  std::istringstream in(text);
  return parse_permutation(in);
}

Program parse_program(const std::string& text) {
  std::istringstream in(text);
  return parse_program(in);
}

}  // namespace memoryless
