#include "memoryless/group.hpp"

#include <algorithm>
#include <numeric>

#include "memoryless/error.hpp"

namespace memoryless {

std::vector<StateIndex> GroupChain::base() const {
  std::vector<StateIndex> result;
  result.reserve(levels_.size());
  for (const auto& level : levels_) result.push_back(level.base_point);
  return result;
}

std::vector<Permutation> GroupChain::strong_generators() const {
  std::vector<Permutation> result;
  for (const auto& level : levels_) result.insert(result.end(), level.generators.begin(), level.generators.end());
  return result;
}

BigInt GroupChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

Permutation GroupChain::wrap(Images images) const { return Permutation::from_images(alphabet_, std::move(images)); }

// Strips g through levels from..end in place. Returns the level where sifting
// stopped (levels_.size() if it passed every level).
std::size_t GroupChain::sift_level(Images& g, std::size_t from) const {
  for (std::size_t k = from; k < levels_.size(); ++k) {
    const Level& level = levels_[k];
    const int rep = level.rep_index[g[level.base_point]];
    if (rep < 0) return k;
    auto inv = level.inverse_reps[static_cast<std::size_t>(rep)].images();
    for (auto& x : g) x = inv[x];
  }
  return levels_.size();
}

namespace {

bool is_identity_images(std::span<const StateIndex> g) {
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g[s] != s) return false;
  }
  return true;
}

std::vector<StateIndex> compose_images(std::span<const StateIndex> f, std::span<const StateIndex> g) {
  std::vector<StateIndex> result(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) result[s] = f[g[s]];
  return result;
}

}  // namespace

// g lies in the stabilizer of b_0..b_{level-1}. Adds it as a generator at this
// level unless the current chain already sifts it.
void GroupChain::add_generator(std::size_t level, const Images& g) {
  Images residue = g;
  std::size_t stop = sift_level(residue, level);
  if (stop == levels_.size() && is_identity_images(residue)) return;

  if (level == levels_.size()) {
    Level fresh;
    StateIndex point = 0;
    while (g[point] == point) ++point;
    fresh.base_point = point;
    fresh.orbit.push_back(point);
    fresh.rep_index.assign(degree(), -1);
    fresh.rep_index[point] = 0;
    fresh.reps.push_back(Permutation(alphabet_));
    fresh.inverse_reps.push_back(Permutation(alphabet_));
    levels_.push_back(std::move(fresh));
  }
  levels_[level].generators.push_back(wrap(g));
  // Every (generator, representative) product must eventually be inserted; the
  // orbit may grow while we iterate.
  for (std::size_t i = 0; i < levels_[level].orbit.size(); ++i) {
    const StateIndex y = levels_[level].orbit[i];
    const auto& rep = levels_[level].reps[static_cast<std::size_t>(levels_[level].rep_index[y])];
    add_to_orbit(level, compose_images(g, rep.images()));
  }
}

// h lies in the stabilizer of b_0..b_{level-1}.
void GroupChain::add_to_orbit(std::size_t level, const Images& h) {
  const StateIndex y = h[levels_[level].base_point];
  const int rep = levels_[level].rep_index[y];
  if (rep >= 0) {
    auto inv = levels_[level].inverse_reps[static_cast<std::size_t>(rep)].images();
    Images schreier(h.size());
    for (std::size_t s = 0; s < h.size(); ++s) schreier[s] = inv[h[s]];
    if (!is_identity_images(schreier)) add_generator(level + 1, schreier);
    return;
  }
  Level& lv = levels_[level];
  lv.rep_index[y] = static_cast<int>(lv.reps.size());
  lv.orbit.push_back(y);
  Permutation u = wrap(h);
  lv.inverse_reps.push_back(inverse(u));
  lv.reps.push_back(std::move(u));
  for (std::size_t i = 0; i < levels_[level].generators.size(); ++i) {
    Images product = compose_images(levels_[level].generators[i].images(), h);
    add_to_orbit(level, product);
  }
}

bool GroupChain::contains(const Permutation& g) const {
  if (g.degree() != degree()) {
    throw AlphabetMismatchError("degree mismatch: " + std::to_string(g.degree()) + " vs " + std::to_string(degree()));
  }
  Images residue(g.images().begin(), g.images().end());
  return sift_level(residue, 0) == levels_.size() && is_identity_images(residue);
}

GroupChain build_chain(const Alphabet& alphabet, const std::vector<Permutation>& gens) {
  GroupChain chain(alphabet);
  for (const auto& g : gens) {
    require_same(alphabet, g.alphabet());
    if (!g.is_identity()) chain.generators_.push_back(g);
  }
  for (const auto& g : chain.generators_) {
    std::vector<StateIndex> images(g.images().begin(), g.images().end());
    chain.add_generator(0, images);
  }
  return chain;
}

GroupChain build_chain(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw InvalidArgumentError("build_chain needs at least one generator");
  return build_chain(gens.front().alphabet(), gens);
}

bool is_member(const Permutation& g, const GroupChain& chain) { return chain.contains(g); }

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::Symmetric:
      return "Symmetric";
    case GroupTag::Alternating:
      return "Alternating";
    case GroupTag::AffineOverGF2:
      return "AffineOverGF2";
    case GroupTag::Other:
      break;
  }
  return "Other";
}

BigInt symmetric_order(const Alphabet& alphabet) { return factorial(alphabet.size()); }

BigInt alternating_order(const Alphabet& alphabet) {
  return alphabet.size() < 2 ? BigInt(1) : factorial(alphabet.size()) / 2;
}

BigInt affine_gf2_order(int n) {
  BigInt two_n = BigInt(1) << n;
  BigInt result = two_n;
  for (int i = 0; i < n; ++i) result *= two_n - (BigInt(1) << i);
  return result;
}

GroupIdentity identify_group(const GroupChain& chain, const Alphabet& alphabet) {
  if (chain.degree() != alphabet.size()) {
    throw AlphabetMismatchError("chain degree " + std::to_string(chain.degree()) + " differs from q^n=" +
                                std::to_string(alphabet.size()));
  }
  GroupIdentity id;
  id.order = chain.order();
  if (id.order == symmetric_order(alphabet)) {
    id.tag = GroupTag::Symmetric;
  } else if (id.order == alternating_order(alphabet)) {
    id.tag = GroupTag::Alternating;
  } else if (alphabet.q() == 2 && id.order == affine_gf2_order(alphabet.n())) {
    id.tag = GroupTag::AffineOverGF2;
  }
  return id;
}

namespace {

std::vector<bool> orbit_of(StateIndex start, StateIndex degree, const std::vector<Permutation>& gens) {
  std::vector<bool> seen(degree, false);
  std::vector<StateIndex> queue{start};
  seen[start] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      StateIndex y = g(queue[i]);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<std::vector<StateIndex>> orbits(const Alphabet& alphabet, const std::vector<Permutation>& gens) {
  std::vector<std::vector<StateIndex>> result;
  std::vector<bool> done(alphabet.size(), false);
  for (StateIndex s = 0; s < alphabet.size(); ++s) {
    if (done[s]) continue;
    auto seen = orbit_of(s, alphabet.size(), gens);
    std::vector<StateIndex> orbit;
    for (StateIndex t = 0; t < alphabet.size(); ++t) {
      if (seen[t]) {
        orbit.push_back(t);
        done[t] = true;
      }
    }
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_transitive(const GroupChain& chain) {
  auto seen = orbit_of(0, chain.degree(), chain.strong_generators());
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_2transitive(const GroupChain& chain) {
  if (!is_transitive(chain)) return false;
  if (chain.degree() <= 2) return chain.degree() == 1 || chain.order() == 2;
  // Strong generators below level 0 generate the stabilizer of b_0.
  const auto& levels = chain.levels();
  std::vector<Permutation> stabilizer_gens;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    stabilizer_gens.insert(stabilizer_gens.end(), levels[k].generators.begin(), levels[k].generators.end());
  }
  const StateIndex b0 = levels.front().base_point;
  const StateIndex other = b0 == 0 ? 1 : 0;
  auto seen = orbit_of(other, chain.degree(), stabilizer_gens);
  for (StateIndex s = 0; s < chain.degree(); ++s) {
    if (s != b0 && !seen[s]) return false;
  }
  return true;
}

void for_each_element(const GroupChain& chain, const std::function<void(const Permutation&)>& visit,
                      std::uint64_t cap) {
  const BigInt order = chain.order();
  if (order > cap) {
    throw TooLargeError("group has order " + to_string(order) + ", above the element cap of " + std::to_string(cap));
  }
  const auto& levels = chain.levels();
  std::vector<Permutation> prefix{Permutation(chain.alphabet())};
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == levels.size()) {
      visit(prefix.back());
      return;
    }
    for (StateIndex y : levels[k].orbit) {
      const auto& rep = levels[k].reps[static_cast<std::size_t>(levels[k].rep_index[y])];
      prefix.push_back(compose(prefix.back(), rep));
      descend(k + 1);
      prefix.pop_back();
    }
  };
  descend(0);
}

std::vector<Permutation> elements(const GroupChain& chain, std::uint64_t cap) {
  std::vector<Permutation> result;
  for_each_element(chain, [&](const Permutation& g) { result.push_back(g); }, cap);
  return result;
}

std::vector<Permutation> symmetric_group_generators(const Alphabet& alphabet) {
  const StateIndex degree = alphabet.size();
  std::vector<StateIndex> cycle(degree);
  std::iota(cycle.begin(), cycle.end(), StateIndex{0});
  return {Permutation::transposition(alphabet, 0, 1), Permutation::from_cycles(alphabet, {cycle})};
}

std::vector<Permutation> alternating_group_generators(const Alphabet& alphabet) {
  std::vector<Permutation> gens;
  for (StateIndex i = 2; i < alphabet.size(); ++i) gens.push_back(Permutation::from_cycles(alphabet, {{0, 1, i}}));
  if (gens.empty()) gens.push_back(Permutation(alphabet));
  return gens;
}

}  // namespace memoryless
