#pragma once

#include <map>
#include <vector>

#include "supsim/graph.hpp"
#include "supsim/lcl.hpp"

namespace supsim {

struct OrientationResult {
  // Kept for API symmetry with checkers that report infeasibility; with
  // whole-graph information an orientation always exists (root tree
  // components at a degree-<=1 node, orient cyclic components toward and
  // around a cycle), so this is always true here.
  bool feasible = true;
  std::map<NodeId, std::vector<NodeId>> out_edges;  // v -> sorted heads
};

// Orients every edge exactly once so that each node of degree >= 2 has at
// least one out-edge. Deterministic.
OrientationResult global_sinkless_orientation(const Graph& g);

// {"out_ports": [...]} labels (ports index sorted neighbor lists).
Labeling orientation_to_labels(const Graph& g, const OrientationResult& orientation);

}  // namespace supsim
