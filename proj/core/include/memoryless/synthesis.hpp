#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "memoryless/alphabet.hpp"
#include "memoryless/instruction.hpp"
#include "memoryless/permutation.hpp"

namespace memoryless {

struct RoutingEdge {
  std::uint32_t left;
  std::uint32_t right;
  StateIndex label;
};

struct BipartiteMultigraph {
  std::uint32_t left_count = 0;
  std::uint32_t right_count = 0;
  std::vector<RoutingEdge> edges;
};

// colors[i] is the color of edges[i] (edges built from a permutation carry
// label == i).
struct EdgeColoring {
  std::vector<std::uint32_t> colors;
};

// Vertices are the values of registers 2..n; the edge labelled s joins the
// column of s to the column of f(s). Requires n >= 2.
BipartiteMultigraph perm_to_routing_graph(const Permutation& f);

// Same construction with register reg playing the role of register 1.
BipartiteMultigraph routing_graph(const Permutation& f, int reg);

// Proper q-edge-coloring of a q-regular bipartite multigraph by peeling one
// perfect matching per color. Throws InvalidGraphError on irregular input.
EdgeColoring edge_color(const BipartiteMultigraph& graph, int q);

bool is_proper_coloring(const BipartiteMultigraph& graph, const EdgeColoring& coloring, int q);

// Program of at most 2n - 1 instructions whose registers follow the palindrome
// 1, 2, ..., n, ..., 2, 1 (identity steps removed).
Program synthesize(const Permutation& f);

State evaluate(const Program& program, const State& state);
Permutation program_to_perm(const Program& program);

// Shortest program over the given instruction list, found by bidirectional
// breadth-first search. Ties go to the earliest instructions in list order.
// Returns nullopt when target is not in the group the steps generate; throws
// TooLargeError when either search side exceeds node_cap.
std::optional<Program> shortest_program(const Permutation& target, const std::vector<Instruction>& steps,
                                        std::uint64_t node_cap = kDefaultCap);

// Exact minimum-length program over all instructions; requires q^n <= 9.
Program optimal_program(const Permutation& f);

}  // namespace memoryless
