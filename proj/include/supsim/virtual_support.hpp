#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "supsim/engine.hpp"

namespace supsim {

// A clique on real ids 1..n padded by a long virtual path: node count n^k,
// yet every real node keeps support degree n (clique plus one spoke) and
// every virtual node has degree at most 3. Inputs live on the real ids only,
// so a run on this support is a run on an n-node instance whose ambient node
// count is n^k — the padding inflates any bound that scales with the global
// size while leaving the real instance untouched.
struct VirtualSupport {
  std::size_t real_n = 0;
  int k = 0;
  Graph support;

  bool is_real(NodeId v) const { return v >= 1 && v <= real_n; }
};

// K_n on 1..n, the path n+1, n+2, ..., n^k, and one spoke {i, n+i} per real
// node. Requires n >= 2, k >= 2, and n^k within the node-count cap.
VirtualSupport build_virtual_support(std::size_t n, int k);

struct VirtualRunResult {
  ExecutionTrace trace;
  std::map<NodeId, json> real_outputs;
};

// Runs the program in PASSIVE mode: virtual nodes keep no input edges, so
// all communication stays between real nodes. Input edges must join real
// ids. Outputs are filtered down to the real nodes.
VirtualRunResult passive_local_simulation(const VirtualSupport& vs,
                                          const std::vector<Edge>& input_edges,
                                          const NodeProgram& program,
                                          const Memory& memory,
                                          const RunOptions& opts = {});

}  // namespace supsim
