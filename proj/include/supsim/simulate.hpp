#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "supsim/decompose.hpp"
#include "supsim/engine.hpp"
#include "supsim/slocal.hpp"

namespace supsim {

struct SimulationResult {
  std::map<NodeId, json> outputs;
  ExecutionTrace trace;
  // Sequential order the distributed run is equivalent to; replaying the
  // algorithm with slocal_run_sequential over this order must reproduce
  // `outputs` exactly. Empty when no such order is claimed.
  std::vector<NodeId> effective_order;
};

// --- Support-communication replay of a sequentially-local algorithm ---
//
// Preprocessing decomposes the t-th power of the support into O(log n) color
// classes of low-weak-diameter clusters and precomputes, per cluster, a
// shortest-path gather tree in the support rooted at the leader. At run time
// each color class is one phase: t rounds of flooding over surviving input
// edges build every member's radius-t input view, the views travel up the
// gather tree, the leader commits outputs for its members in ascending id
// order, and the results travel back down. Same-color clusters are more than
// t hops apart, so phases compose into one global sequential order.
struct SupportPlan {
  int locality = 1;
  NetworkDecomposition decomposition;  // of the t-th support power
  std::vector<int> gather_depth;       // per color class, tree depth bound
  int total_rounds = 0;                // sum over phases of t + 2*depth
  Memory memory;
  std::vector<NodeId> effective_order;
};

SupportPlan build_support_plan(const Graph& support, int locality);

// --- Input-communication replay (no support edges used after preprocessing) ---
//
// Preprocessing colors the support so that nodes within hop distance 2t+1
// never share a color; color classes then have pairwise-disjoint radius-t
// balls. Phase k floods input views for t rounds and lets color class k
// commit, so the schedule costs palette * t rounds total.
struct PassivePlan {
  int locality = 1;
  DistanceColoring coloring;  // distance-(2t+1) coloring of the support
  int total_rounds = 0;       // palette * t
  Memory memory;
  std::vector<NodeId> effective_order;
};

PassivePlan build_passive_plan(const Graph& support, int locality);

std::unique_ptr<NodeProgram> make_slocal_support_program(SlocalAlgorithm alg);
std::unique_ptr<NodeProgram> make_slocal_passive_program(SlocalAlgorithm alg);

// End-to-end: preprocess inst.support(), run the replay program, return the
// outputs plus the sequential order they are equivalent to. The support
// variant needs support-edge communication, so it rejects PASSIVE instances;
// the passive variant runs under any mode.
SimulationResult supported_slocal_simulation(const SupportedInstance& inst,
                                             const SlocalAlgorithm& alg,
                                             const RunOptions& opts = {});
SimulationResult passive_slocal_simulation(const SupportedInstance& inst,
                                           const SlocalAlgorithm& alg,
                                           const RunOptions& opts = {});

// --- Constant-round (Delta+1)-coloring via preprocessed identifiers ---
//
// The iterated polynomial palette reduction needs rounds that grow (very
// slowly) with the identifier space. Preprocessing finds the least n0 with
// Delta^(2*T(n0)+2) + 1 <= n0, hands out a proper distance-(2*T(n0)+2)
// coloring of the support as substitute identifiers, and pins the whole
// reduction schedule; the run then takes exactly T(n0) rounds on every
// input, independent of the real node count.

// Least fixpoint of n -> Delta^(2*T(n)+2) + 1. `rounds_of` receives the
// current id-space size either exactly or, when it exceeds 64 bits, as a
// base-2 logarithm with `big` set.
struct ThresholdResult {
  bool big = false;                 // exact overflowed 64 bits
  unsigned long long exact = 0;     // valid when !big
  double log2_value = 0;            // always valid
  int t = 0;                        // T at the fixpoint
};

ThresholdResult collapse_threshold(
    int max_degree,
    const std::function<int(bool big, unsigned long long exact, double log2_m)>&
        rounds_of);

struct CollapsePlan {
  int max_degree = 0;
  ThresholdResult threshold;
  int distance = 0;       // 2*T + 2
  // Per reduction step: polynomial degree d and prime p > d*Delta with
  // p^(d+1) covering the current palette; the step maps colors into [p^2].
  std::vector<std::array<long long, 2>> schedule;
  long long final_palette = 0;  // palette when the reduction stalls
  int target = 0;               // max_degree + 1
};

CollapsePlan collapse_plan(int max_degree);

// Rounds the pinned program takes: reduction steps plus the one-color-per-
// round sweep from final_palette down to target. Identical for every input
// over supports of this maximum degree.
int collapse_declared_rounds(int max_degree);

Memory collapse_preprocess(const Graph& support);

// Engine program executing the pinned schedule. Communicates over surviving
// input edges only, so it runs under every mode. Halts with the final color
// as a bare integer. Detects duplicate substitute identifiers within hop
// distance 2 and throws ValidationError.
std::unique_ptr<NodeProgram> make_collapse_program();

SimulationResult lcl_collapse_solve(const SupportedInstance& inst,
                                    const RunOptions& opts = {});

}  // namespace supsim
