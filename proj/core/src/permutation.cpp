#include "memoryless/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "memoryless/error.hpp"

namespace memoryless {

Permutation::Permutation(const Alphabet& alphabet) : alphabet_(alphabet), images_(alphabet.size()) {
  std::iota(images_.begin(), images_.end(), StateIndex{0});
}

Permutation Permutation::from_images(const Alphabet& alphabet, std::vector<StateIndex> images) {
  if (images.size() != alphabet.size()) {
    throw InvalidArgumentError("permutation needs " + std::to_string(alphabet.size()) + " images, got " +
                               std::to_string(images.size()));
  }
  std::vector<bool> seen(images.size(), false);
  for (StateIndex s = 0; s < images.size(); ++s) {
    StateIndex t = images[s];
    if (t >= images.size()) {
      throw InvalidArgumentError("image " + std::to_string(t) + " of state " + std::to_string(s) + " out of range");
    }
    if (seen[t]) throw InvalidArgumentError("image " + std::to_string(t) + " repeated; not a bijection");
    seen[t] = true;
  }
  return Permutation(alphabet, std::move(images));
}

Permutation Permutation::from_cycles(const Alphabet& alphabet, const std::vector<std::vector<StateIndex>>& cycles) {
  std::vector<StateIndex> images(alphabet.size());
  std::iota(images.begin(), images.end(), StateIndex{0});
  std::vector<bool> used(alphabet.size(), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      StateIndex a = cycle[i];
      if (a >= alphabet.size()) throw InvalidArgumentError("cycle point " + std::to_string(a) + " out of range");
      if (used[a]) throw InvalidArgumentError("cycles are not disjoint at point " + std::to_string(a));
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(alphabet, std::move(images));
}

Permutation Permutation::transposition(const Alphabet& alphabet, StateIndex a, StateIndex b) {
  return from_cycles(alphabet, {{a, b}});
}

bool Permutation::is_identity() const noexcept { return first_moved() == degree(); }

StateIndex Permutation::first_moved() const noexcept {
  for (StateIndex s = 0; s < images_.size(); ++s) {
    if (images_[s] != s) return s;
  }
  return degree();
}

Permutation compose(const Permutation& f, const Permutation& g) {
  require_same(f.alphabet_, g.alphabet_);
  std::vector<StateIndex> images(g.images_.size());
  for (std::size_t s = 0; s < images.size(); ++s) images[s] = f.images_[g.images_[s]];
  return Permutation(f.alphabet_, std::move(images));
}

Permutation inverse(const Permutation& f) {
  std::vector<StateIndex> images(f.images_.size());
  for (StateIndex s = 0; s < images.size(); ++s) images[f.images_[s]] = s;
  return Permutation(f.alphabet_, std::move(images));
}

Permutation power(const Permutation& f, std::int64_t exponent) {
  Permutation base = exponent < 0 ? inverse(f) : f;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  Permutation result(f.alphabet());
  while (e > 0) {
    if (e & 1U) result = compose(base, result);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

Permutation conjugate(const Permutation& h, const Permutation& g) { return compose(inverse(h), compose(g, h)); }

CycleDecomposition cycle_decomposition(const Permutation& f) {
  CycleDecomposition result;
  std::vector<bool> seen(f.degree(), false);
  int transpositions = 0;
  for (StateIndex s = 0; s < f.degree(); ++s) {
    if (seen[s] || f(s) == s) continue;
    std::vector<StateIndex> cycle;
    for (StateIndex t = s; !seen[t]; t = f(t)) {
      seen[t] = true;
      cycle.push_back(t);
    }
    transpositions += static_cast<int>(cycle.size()) - 1;
    result.cycles.push_back(std::move(cycle));
  }
  result.sign = (transpositions % 2 == 0) ? 1 : -1;
  return result;
}

int sign(const Permutation& f) { return cycle_decomposition(f).sign; }

std::uint64_t order(const Permutation& f) {
  std::uint64_t result = 1;
  for (const auto& cycle : cycle_decomposition(f).cycles) result = std::lcm(result, cycle.size());
  return result;
}

std::vector<int> updated_registers(const Permutation& f) {
  const Alphabet& a = f.alphabet();
  std::vector<int> regs;
  for (int j = 1; j <= a.n(); ++j) {
    for (StateIndex s = 0; s < f.degree(); ++s) {
      if (f.coordinate(s, j) != a.coordinate(s, j)) {
        regs.push_back(j);
        break;
      }
    }
  }
  return regs;
}

std::vector<int> essential_variables(const Permutation& f, int reg) {
  const Alphabet& a = f.alphabet();
  if (reg < 1 || reg > a.n()) throw InvalidArgumentError("register " + std::to_string(reg) + " out of range");
  std::vector<int> vars;
  for (int k = 1; k <= a.n(); ++k) {
    bool essential = false;
    for (StateIndex s = 0; s < f.degree() && !essential; ++s) {
      if (a.coordinate(s, k) != 0) continue;
      Value base = f.coordinate(s, reg);
      for (int v = 1; v < a.q(); ++v) {
        if (f.coordinate(s + static_cast<StateIndex>(v) * a.stride(k), reg) != base) {
          essential = true;
          break;
        }
      }
    }
    if (essential) vars.push_back(k);
  }
  return vars;
}

int arity(const Permutation& f) {
  std::size_t result = 0;
  for (int j = 1; j <= f.alphabet().n(); ++j) result = std::max(result, essential_variables(f, j).size());
  return static_cast<int>(result);
}

bool is_unary_permutation(const Permutation& f) {
  const int n = f.alphabet().n();
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j) {
    auto vars = essential_variables(f, j);
    if (vars.size() != 1 || used[vars.front()]) return false;
    used[vars.front()] = true;
  }
  return true;
}

}  // namespace memoryless
