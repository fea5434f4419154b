#include "memoryless/synthesis.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "memoryless/error.hpp"
#include "memoryless/perm_store.hpp"

namespace memoryless {

namespace {

// Index of s with register reg deleted, over A^(n-1).
std::uint32_t column(const Alphabet& a, StateIndex s, int reg) {
  const StateIndex stride = a.stride(reg);
  return (s / (stride * static_cast<StateIndex>(a.q()))) * stride + s % stride;
}

constexpr std::uint32_t kUnmatched = std::numeric_limits<std::uint32_t>::max();

// Hopcroft-Karp over the edges whose color is still unassigned.
class Matcher {
 public:
  Matcher(const BipartiteMultigraph& graph, const std::vector<std::vector<std::uint32_t>>& adjacency,
          const std::vector<std::uint32_t>& colors)
      : graph_(graph), adjacency_(adjacency), colors_(colors) {}

  // Edge ids of a perfect matching, indexed by left vertex.
  std::vector<std::uint32_t> perfect_matching() {
    match_left_.assign(graph_.left_count, kUnmatched);
    match_right_.assign(graph_.right_count, kUnmatched);
    std::uint32_t matched = 0;
    while (layer()) {
      next_.assign(graph_.left_count, 0);
      for (std::uint32_t u = 0; u < graph_.left_count; ++u) {
        if (match_left_[u] == kUnmatched && augment(u)) ++matched;
      }
    }
    if (matched != graph_.left_count) throw InvalidGraphError("graph has no perfect matching");
    return match_left_;
  }

 private:
  bool free_edge(std::uint32_t e) const { return colors_[e] == kUnmatched; }

  bool layer() {
    dist_.assign(graph_.left_count, kUnmatched);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < graph_.left_count; ++u) {
      if (match_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      }
    }
    bool reachable_free = false;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::uint32_t u = queue[i];
      for (std::uint32_t e : adjacency_[u]) {
        if (!free_edge(e)) continue;
        const std::uint32_t partner = match_right_[graph_.edges[e].right];
        if (partner == kUnmatched) {
          reachable_free = true;
        } else {
          const std::uint32_t w = graph_.edges[partner].left;
          if (dist_[w] == kUnmatched) {
            dist_[w] = dist_[u] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    return reachable_free;
  }

  bool augment(std::uint32_t u) {
    for (; next_[u] < adjacency_[u].size(); ++next_[u]) {
      const std::uint32_t e = adjacency_[u][next_[u]];
      if (!free_edge(e)) continue;
      const std::uint32_t v = graph_.edges[e].right;
      const std::uint32_t partner = match_right_[v];
      if (partner == kUnmatched ||
          (dist_[graph_.edges[partner].left] == dist_[u] + 1 && augment(graph_.edges[partner].left))) {
        match_left_[u] = e;
        match_right_[v] = e;
        return true;
      }
    }
    dist_[u] = kUnmatched;
    return false;
  }

  const BipartiteMultigraph& graph_;
  const std::vector<std::vector<std::uint32_t>>& adjacency_;
  const std::vector<std::uint32_t>& colors_;
  std::vector<std::uint32_t> match_left_;
  std::vector<std::uint32_t> match_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> next_;
};

}  // namespace

BipartiteMultigraph routing_graph(const Permutation& f, int reg) {
  const Alphabet& a = f.alphabet();
  if (a.n() < 2) throw DegenerateInputError("routing graph needs at least two registers");
  BipartiteMultigraph graph;
  graph.left_count = graph.right_count = a.size() / static_cast<StateIndex>(a.q());
  graph.edges.reserve(a.size());
  for (StateIndex s = 0; s < a.size(); ++s) graph.edges.push_back({column(a, s, reg), column(a, f(s), reg), s});
  return graph;
}

BipartiteMultigraph perm_to_routing_graph(const Permutation& f) { return routing_graph(f, 1); }

EdgeColoring edge_color(const BipartiteMultigraph& graph, int q) {
  if (q < 1) throw InvalidGraphError("color count must be positive");
  const auto degree = static_cast<std::uint32_t>(q);
  if (graph.left_count != graph.right_count ||
      graph.edges.size() != static_cast<std::size_t>(graph.left_count) * degree) {
    throw InvalidGraphError("graph is not " + std::to_string(q) + "-regular");
  }
  std::vector<std::vector<std::uint32_t>> adjacency(graph.left_count);
  std::vector<std::uint32_t> right_degree(graph.right_count, 0);
  for (std::uint32_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.left >= graph.left_count || edge.right >= graph.right_count) {
      throw InvalidGraphError("edge endpoint out of range");
    }
    adjacency[edge.left].push_back(e);
    ++right_degree[edge.right];
  }
  for (std::uint32_t u = 0; u < graph.left_count; ++u) {
    if (adjacency[u].size() != degree || right_degree[u] != degree) {
      throw InvalidGraphError("graph is not " + std::to_string(q) + "-regular at vertex " + std::to_string(u));
    }
  }
  EdgeColoring coloring;
  coloring.colors.assign(graph.edges.size(), kUnmatched);
  for (std::uint32_t color = 0; color < degree; ++color) {
    Matcher matcher(graph, adjacency, coloring.colors);
    for (std::uint32_t e : matcher.perfect_matching()) coloring.colors[e] = color;
  }
  return coloring;
}

bool is_proper_coloring(const BipartiteMultigraph& graph, const EdgeColoring& coloring, int q) {
  if (coloring.colors.size() != graph.edges.size()) return false;
  const auto colors = static_cast<std::size_t>(q);
  std::vector<bool> left(graph.left_count * colors, false);
  std::vector<bool> right(graph.right_count * colors, false);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const std::uint32_t c = coloring.colors[e];
    if (c >= colors) return false;
    const std::size_t l = graph.edges[e].left * colors + c;
    const std::size_t r = graph.edges[e].right * colors + c;
    if (left[l] || right[r]) return false;
    left[l] = right[r] = true;
  }
  return true;
}

namespace {

// f fixes registers 1..reg-1. Appends the steps for registers reg..n..reg.
void synthesize_from(const Permutation& f, int reg, std::vector<Instruction>& out) {
  const Alphabet& a = f.alphabet();
  const StateIndex size = a.size();
  if (reg == a.n()) {
    std::vector<Value> table(size);
    for (StateIndex s = 0; s < size; ++s) table[s] = f.coordinate(s, reg);
    out.push_back(Instruction::from_table(a, reg, std::move(table)));
    return;
  }
  const auto graph = routing_graph(f, reg);
  const auto coloring = edge_color(graph, a.q());

  // Stage A writes the edge color into register reg; stage C restores f's
  // value of register reg; in between, a reg-parametrized permutation of the
  // remaining registers moves each column to its target.
  std::vector<Value> first(size);
  std::vector<Value> last(size);
  std::vector<StateIndex> middle(size);
  for (StateIndex s = 0; s < size; ++s) {
    const auto color = static_cast<Value>(coloring.colors[s]);
    const StateIndex routed = a.with_coordinate(s, reg, color);
    const StateIndex target = a.with_coordinate(f(s), reg, color);
    first[s] = color;
    middle[routed] = target;
    last[target] = f.coordinate(s, reg);
  }
  out.push_back(Instruction::from_table(a, reg, std::move(first)));
  synthesize_from(Permutation::from_images(a, std::move(middle)), reg + 1, out);
  out.push_back(Instruction::from_table(a, reg, std::move(last)));
}

}  // namespace

Program synthesize(const Permutation& f) {
  std::vector<Instruction> steps;
  synthesize_from(f, 1, steps);
  Program program(f.alphabet());
  for (auto& step : steps) {
    if (!step.is_identity()) program.steps.push_back(std::move(step));
  }
  return program;
}

State evaluate(const Program& program, const State& state) {
  StateIndex s = state_index(state, program.alphabet);
  for (const auto& step : program.steps) s = step(s);
  return index_state(s, program.alphabet);
}

Permutation program_to_perm(const Program& program) {
  const Alphabet& a = program.alphabet;
  std::vector<StateIndex> images(a.size());
  for (StateIndex s = 0; s < a.size(); ++s) {
    StateIndex t = s;
    for (const auto& step : program.steps) t = step(t);
    images[s] = t;
  }
  return Permutation::from_images(a, std::move(images));
}

namespace {

struct SearchSide {
  explicit SearchSide(StateIndex degree) : store(degree) {}

  PermutationStore store;
  std::vector<PermutationStore::Id> parent;
  std::vector<std::uint32_t> step;  // index into the step list
  std::vector<std::uint32_t> depth;
  std::vector<PermutationStore::Id> frontier;

  void add_root(std::span<const StateIndex> images) {
    store.insert(images);
    parent.push_back(PermutationStore::kNone);
    step.push_back(0);
    depth.push_back(0);
    frontier.push_back(0);
  }

  // Steps along the tree path from the root to id, root end first.
  std::vector<std::uint32_t> path(PermutationStore::Id id) const {
    std::vector<std::uint32_t> result;
    for (; parent[id] != PermutationStore::kNone; id = parent[id]) result.push_back(step[id]);
    std::reverse(result.begin(), result.end());
    return result;
  }
};

}  // namespace

std::optional<Program> shortest_program(const Permutation& target, const std::vector<Instruction>& steps,
                                        std::uint64_t node_cap) {
  const Alphabet& a = target.alphabet();
  for (const auto& g : steps) require_same(a, g.alphabet());
  const StateIndex degree = a.size();

  // Forward nodes x = g_k o ... o g_1; backward nodes y with
  // h_m o ... o h_1 o y = target, expanded by y' = h^-1 o y.
  std::vector<std::vector<StateIndex>> forward_tables;
  std::vector<std::vector<StateIndex>> backward_tables;
  for (const auto& g : steps) {
    Permutation p = g.to_permutation();
    forward_tables.emplace_back(p.images().begin(), p.images().end());
    Permutation inv = inverse(p);
    backward_tables.emplace_back(inv.images().begin(), inv.images().end());
  }

  Permutation identity(a);
  SearchSide forward(degree);
  SearchSide backward(degree);
  forward.add_root(identity.images());
  backward.add_root(target.images());

  auto build = [&](PermutationStore::Id fwd, PermutationStore::Id bwd) {
    Program program(a);
    for (auto i : forward.path(fwd)) program.steps.push_back(steps[i]);
    auto tail = backward.path(bwd);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) program.steps.push_back(steps[*it]);
    return program;
  };

  if (target.is_identity()) return Program(a);

  std::vector<StateIndex> scratch(degree);
  while (!forward.frontier.empty() && !backward.frontier.empty()) {
    const bool expand_forward = forward.frontier.size() <= backward.frontier.size();
    SearchSide& side = expand_forward ? forward : backward;
    SearchSide& other = expand_forward ? backward : forward;
    const auto& tables = expand_forward ? forward_tables : backward_tables;

    std::vector<PermutationStore::Id> next;
    std::optional<std::pair<PermutationStore::Id, PermutationStore::Id>> best;  // (this side, other side)
    std::uint32_t best_length = std::numeric_limits<std::uint32_t>::max();
    for (PermutationStore::Id node : side.frontier) {
      for (std::uint32_t i = 0; i < tables.size(); ++i) {
        auto current = side.store.get(node);
        const auto& table = tables[i];
        for (StateIndex s = 0; s < degree; ++s) scratch[s] = table[current[s]];
        auto [id, inserted] = side.store.insert(scratch);
        if (!inserted) continue;
        side.parent.push_back(node);
        side.step.push_back(i);
        side.depth.push_back(side.depth[node] + 1);
        next.push_back(id);
        if (side.store.size() > node_cap) {
          throw TooLargeError("shortest-program search exceeded " + std::to_string(node_cap) + " nodes");
        }
        const auto match = other.store.find(scratch);
        if (match != PermutationStore::kNone) {
          const std::uint32_t length = side.depth[id] + other.depth[match];
          if (length < best_length) {
            best_length = length;
            best = std::make_pair(id, match);
          }
        }
      }
    }
    if (best) {
      return expand_forward ? build(best->first, best->second) : build(best->second, best->first);
    }
    side.frontier = std::move(next);
  }
  return std::nullopt;
}

Program optimal_program(const Permutation& f) {
  const Alphabet& a = f.alphabet();
  if (a.size() > 9) {
    throw TooLargeError("exact search needs q^n <= 9, got q^n=" + std::to_string(a.size()));
  }
  auto result = shortest_program(f, enumerate_instructions(a));
  if (!result) throw NotComputableError("no program found; instruction set does not generate the target");
  return *result;
}

}  // namespace memoryless
