#pragma once

#include <map>
#include <memory>
#include <vector>

#include "supsim/decompose.hpp"
#include "supsim/engine.hpp"

namespace supsim {

// Lexicographically least maximum independent set (include-first branch and
// bound over ascending ids). Exponential worst case, so graphs above the cap
// are rejected with CapacityError.
std::vector<NodeId> brute_force_mis(const Graph& g, std::size_t cap = 24);

struct ClusterMisResult {
  std::map<NodeId, json> outputs;  // "in" / "out"
  ExecutionTrace trace;
  BallClustering clustering;
  int gather_rounds = 0;  // shared flooding budget D; the run takes D+1
};

// Ball-carving MIS. Preprocessing carves the support into low-radius
// clusters; at run time every member floods the cluster-induced input graph
// for D rounds (over support edges when the mode allows, otherwise over
// surviving input edges), all members of a fully-gathered cluster compute
// the same optimal independent set of it, and one repair round drops a
// selected node whose smaller-id selected input-neighbor sits in another
// cluster. A member whose gather stayed incomplete (possible under PASSIVE
// when deletions disconnect the cluster) abstains with "out", which keeps
// independence unconditional.
ClusterMisResult cluster_optimal_mis(const SupportedInstance& inst, double epsilon,
                                     const RunOptions& opts = {},
                                     std::size_t cluster_cap = 24);

struct MisRunResult {
  std::map<NodeId, json> outputs;  // "in" / "out"
  ExecutionTrace trace;
};

// Priority MIS program: per iteration, an undecided node sends a priority
// (one round) and joins when it beat every undecided neighbor (next round);
// neighbors of joiners leave. Deterministic variant uses priority
// 2^64-1-id, which is the sequential greedy-by-id MIS; otherwise priorities
// come from the node's random stream. After `iterations` iterations any
// still-undecided node gives up with "out", so truncation can cost
// maximality but never independence.
std::unique_ptr<NodeProgram> make_priority_mis_program(int iterations,
                                                       bool deterministic_by_id);

MisRunResult random_priority_mis(const SupportedInstance& inst, int iterations,
                                 const RunOptions& opts = {});
MisRunResult greedy_id_mis(const SupportedInstance& inst, const RunOptions& opts = {});

}  // namespace supsim
