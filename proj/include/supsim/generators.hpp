#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "supsim/graph.hpp"

namespace supsim {

// Deterministic graph families. Every generator numbers nodes 1..n unless
// stated otherwise, and randomized ones are pure functions of their seed.

Graph cycle_graph(std::size_t n);                   // n >= 3
Graph path_graph(std::size_t n);                    // n >= 1
Graph clique_graph(std::size_t n);                  // n >= 1
Graph grid_graph(std::size_t rows, std::size_t cols);  // row-major ids
Graph petersen_graph();                             // 10 nodes, 3-regular

// Uniform d-regular graph via the pairing model with whole-graph rejection
// of loops and parallel edges. n*d must be even and d < n.
Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed,
                           int max_tries = 20000);

// Pairing model plus rejection of graphs whose girth is below min_girth.
Graph random_regular_min_girth(std::size_t n, std::size_t d, int min_girth,
                               std::uint64_t seed, int max_tries = 20000);

// Erdos-Renyi G(n, p); each possible edge kept independently.
Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);

// Random pseudoforest: every node proposes at most one out-edge. Returns the
// graph together with the successor map realizing an orientation of
// out-degree <= 1 that covers every edge.
struct PseudoforestSample {
  Graph graph;
  std::map<NodeId, NodeId> successor;  // nodes without entry have no out-edge
};
PseudoforestSample random_pseudoforest(std::size_t n, std::uint64_t seed);

// Generic entry point used by experiment configs.
struct GenParams {
  std::size_t n = 0;
  std::size_t degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

Graph generate(const std::string& family, const GenParams& params);

}  // namespace supsim
