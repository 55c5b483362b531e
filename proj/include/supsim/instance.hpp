#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "supsim/graph.hpp"

namespace supsim {

// Execution modes. LOCAL is the degenerate case where the input graph and
// the support coincide. SUPPORTED keeps communication on all support edges
// even where the input lost them; PASSIVE restricts post-preprocessing
// communication to surviving input edges.
enum class Mode { LOCAL, SUPPORTED, PASSIVE };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& name);

// A support graph H plus the surviving input edges G (a subset of E(H)).
// Node sets are identical by construction; deleting an edge never deletes
// its endpoints.
class SupportedInstance {
 public:
  SupportedInstance(Graph support, std::vector<Edge> input_edges, Mode mode);

  const Graph& support() const { return support_; }
  Mode mode() const { return mode_; }

  // Canonical (u<v), sorted input edges.
  const std::vector<Edge>& input_edges() const { return input_edges_; }

  bool edge_in_input(NodeId u, NodeId v) const;

  // Sorted input-graph neighbors of v.
  const std::vector<NodeId>& input_neighbors(NodeId v) const;

  // Neighbors usable for message passing in this mode (support edges for
  // LOCAL/SUPPORTED, input edges for PASSIVE).
  std::span<const NodeId> comm_neighbors(NodeId v) const;
  bool edge_in_comm(NodeId u, NodeId v) const;

 private:
  Graph support_;
  std::vector<Edge> input_edges_;
  Mode mode_;
  std::vector<std::vector<NodeId>> input_adj_;  // by dense index
};

// The input graph G as a standalone Graph (same node set as the support).
Graph subgraph(const SupportedInstance& inst);

// Keep a deterministic random subset of support edges: exactly
// floor(fraction * |E|) edges are deleted, chosen by seeded shuffle.
std::vector<Edge> random_input_mask(const Graph& support, double deletion_fraction,
                                    std::uint64_t seed);

// Mask file format: one "u v" line per retained edge, sorted.
void write_mask(const std::vector<Edge>& edges, std::ostream& out);
std::vector<Edge> read_mask(std::istream& in);

}  // namespace supsim
