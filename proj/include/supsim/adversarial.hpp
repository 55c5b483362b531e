#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "supsim/engine.hpp"
#include "supsim/view.hpp"

namespace supsim {

// ---------------------------------------------------------------------------
// Six-path orientation family.
//
// The support is six disjoint n-node paths plus eight bridge edges between
// path endpoints. Two inputs live inside it: input_a closes the paths into
// three disjoint cycles (1+2, 3+4, 5+6); input_b re-wires the head bridges of
// paths 1..4 into one long cycle through paths 2,3,4,1 and keeps cycle 5+6.
// Both inputs are 2-regular, so sinkless orientation is solvable on each, yet
// the flagged support views of the two probe nodes (mid-path on paths 2 and
// 4) are literally identical across the inputs for every radius below
// critical_radius and first differ exactly there.
// ---------------------------------------------------------------------------
struct SinklessFamily {
  int path_length = 0;  // n: even, >= 4
  Graph support;
  std::vector<Edge> input_a;  // three 2n-cycles
  std::vector<Edge> input_b;  // one 4n-cycle plus the 5+6 cycle
  NodeId probe_a = 0;         // middle of path 2
  NodeId probe_b = 0;         // middle of path 4
  int critical_radius = 0;    // n / 2

  // 1-based coordinates: path in [1,6], pos in [1,n].
  NodeId node(int path, int pos) const;
};

SinklessFamily build_sinkless_family(int path_length);

// Demo orientation programs; outputs follow the sinkless-orientation label
// format ({"out_ports": [...]} indexing sorted input neighbors).
//
// Orients every input edge toward the higher endpoint id; halts in init.
std::unique_ptr<NodeProgram> make_orient_higher_id_program();
// Stays silent for `rounds` rounds, then points one edge at the lowest-id
// input neighbor and halts (edges can end up oriented both ways or neither).
std::unique_ptr<NodeProgram> make_wait_lower_id_program(int rounds);
// Full-information attempt: floods adjacency records (with input flags) over
// the communication graph for `rounds` rounds. A node that has seen its whole
// input component orients it consistently via the global routine; otherwise
// it falls back to the higher-id rule.
std::unique_ptr<NodeProgram> make_gather_orient_program(int rounds);

struct ProgramOutcome {
  std::string name;
  bool halted_a = false;  // every node halted within the round budget
  bool halted_b = false;
  bool accepted_a = false;  // verifier verdict on input_a
  bool accepted_b = false;
  bool probe_outputs_equal = false;  // both probes output the same on a and b
};

struct IndistinguishabilityReport {
  int radius = 0;
  bool views_identical = false;  // both probes, ids and flags respected
  std::vector<ProgramOutcome> programs;

  json to_json() const;
};

// Compares the probes' radius-`radius` flagged support views across the two
// inputs and runs each named program on both with max_rounds = radius.
// Requires radius < critical_radius; beyond that the views provably differ
// and the comparison would be vacuous.
IndistinguishabilityReport sinkless_indistinguishability(
    const SinklessFamily& fam, int radius,
    const std::vector<std::pair<std::string, const NodeProgram*>>& programs,
    const RunOptions& opts = {});

// ---------------------------------------------------------------------------
// Double-cover lift family.
//
// Every node v of a d-regular base graph splits into copies 2v and 2v+1; the
// support keeps all four edges between the copy pairs of adjacent base nodes,
// so it is 2d-regular. A cut (edge subset of the base) picks an input: cut
// edges contribute their crossing pair, the rest their straight pair. Every
// such input is a d-regular 2-lift of the base sitting inside one shared
// support, and as long as the base girth exceeds the probed radius window,
// every cut looks locally like every other.
// ---------------------------------------------------------------------------
struct LiftFamily {
  Graph base;
  int degree = 0;  // base regularity d; the support is 2d-regular
  Graph support;
};

LiftFamily build_double_cover(const Graph& base);

inline NodeId lift_id(NodeId base_node, int copy) {
  return 2 * base_node + static_cast<NodeId>(copy);
}

// Input edges selected by the cut; cut edges must be base edges.
std::vector<Edge> lift_input(const LiftFamily& fam, const std::set<Edge>& cut);

// Independent fair coin per base edge.
std::set<Edge> random_cut(const Graph& base, std::uint64_t seed);

// Checks that the copy swap 2v <-> 2v+1 is an automorphism of the support
// and of the cut's input graph (edge by edge), that projecting lift
// neighborhoods onto the base restores base adjacency exactly, and — for
// lifts small enough for the generic matcher — that the swapped input is
// isomorphic to the original.
bool verify_cover_isomorphisms(const LiftFamily& fam, const std::set<Edge>& cut);

// Copy-flip map on the radius-`radius` support ball around base_node's
// copies: each copy bit is XOR-ed with the parity of cut edges along the
// unique base path from base_node. Maps the flagged view under `cut` onto
// the flagged view under the empty cut, fixing the root. Requires the base
// girth to exceed 2*radius + 1 (unique paths); the map is an involution.
std::map<NodeId, NodeId> parity_bijection(const LiftFamily& fam, NodeId base_node,
                                          int radius, const std::set<Edge>& cut);

// True when remapping copy 0's radius-`radius` flagged view under `cut`
// through the parity bijection reproduces its view under the empty cut
// literally (same nodes, distances, edges, and flags).
bool parity_views_equal(const LiftFamily& fam, NodeId base_node, int radius,
                        const std::set<Edge>& cut);

struct DistributionReport {
  std::size_t cuts = 0;        // number of cuts enumerated (2^|universe|)
  std::size_t base_nodes = 0;  // probe nodes compared
  bool equal = false;          // every per-node multiset pair matched exactly

  json to_json() const;
};

// Exhaustive view-distribution comparison: for every subset of cut_universe,
// extract both copies' radius-`radius` flagged views at each probe base node
// and canonicalize them (flags respected, ids not). Per probe, the multiset
// of strings gathered by copy 0 across all cuts must equal copy 1's multiset
// exactly — string equality, no sampling. Universe and probe list are capped
// at 20 (the enumeration is 2^|universe|).
DistributionReport view_distribution_equality(const LiftFamily& fam,
                                              const std::vector<NodeId>& base_nodes,
                                              int radius,
                                              const std::vector<Edge>& cut_universe,
                                              bool parallel);

struct MisGapWitness {
  std::size_t opt_straight = 0;   // exact optimum on the empty-cut input
  std::size_t opt_crossing = 0;   // exact optimum on the all-edges-cut input
  double mean_straight = 0.0;     // seeded algorithm averages
  double mean_crossing = 0.0;
  double sigma = 0.0;             // std error of the mean difference
  double z = 0.0;                 // |mean gap| / sigma
  int samples = 0;

  json to_json() const;
};

// The straight and all-crossing inputs can have different optimum
// independent-set sizes, yet a round-limited randomized algorithm performs
// statistically identically on both. Optima are brute-forced; algorithm
// means come from the randomized priority protocol run over `samples` seeds.
MisGapWitness mis_gap_witness(const LiftFamily& fam, int iterations, int samples,
                              std::uint64_t seed);

// Small catalog of regular bases with girth above a floor: cycles for degree
// 2, the standard 3-regular girth-5 graph on 10 nodes when it qualifies,
// otherwise a bounded random search (n <= 20). Throws LookupError when
// nothing qualifies.
Graph high_girth_base(int degree, int min_girth, std::uint64_t seed);

}  // namespace supsim
