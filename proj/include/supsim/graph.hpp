#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "supsim/common.hpp"

namespace supsim {

// Simple undirected graph over 64-bit node ids. Immutable after
// construction; adjacency lists are kept sorted so every traversal is
// deterministic.
class Graph {
 public:
  Graph() = default;

  // ids may arrive in any order; duplicates, self-loops and parallel edges
  // are rejected. Edge endpoints must be listed in ids.
  Graph(std::vector<NodeId> ids, const std::vector<Edge>& edges);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Node ids in ascending order.
  const std::vector<NodeId>& ids() const { return ids_; }

  bool has_node(NodeId v) const { return index_.count(v) != 0; }

  // Dense index of a node (0..size-1, in ascending-id order).
  std::size_t index_of(NodeId v) const;
  NodeId id_at(std::size_t i) const { return ids_.at(i); }

  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;

  bool has_edge(NodeId u, NodeId v) const;

  // All edges, canonical (u < v), sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool connected() const;

 private:
  std::vector<NodeId> ids_;
  std::unordered_map<NodeId, std::uint32_t> index_;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<Edge> edges_;
};

// Hop distances from v, aligned with g's dense indices; -1 = unreachable.
// When max_depth >= 0 the search stops there (farther nodes stay -1).
std::vector<int> distances_from(const Graph& g, NodeId v, int max_depth = -1);

// Sorted ids of all nodes within t hops of v (including v itself).
std::vector<NodeId> ball(const Graph& g, NodeId v, int t);

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

// Induced subgraph on the given nodes (ids kept).
Graph induced_subgraph(const Graph& g, const std::vector<NodeId>& nodes);

// Graph with the same nodes and an edge wherever hop distance <= t.
Graph power_graph(const Graph& g, int t);

// Connected components as sorted id lists, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// Plain-text edge list: "n m" header, then one "u v" line per edge in
// canonical sorted order. Byte-deterministic for a given graph.
void write_edge_list(const Graph& g, std::ostream& out);
std::string edge_list_string(const Graph& g);

// Inverse of write_edge_list. Node set is the set of edge endpoints; if the
// header names more nodes than the edges mention, ids are taken to be 1..n
// (the only way the format can carry isolated nodes).
Graph read_edge_list(std::istream& in);
Graph graph_from_string(const std::string& text);

}  // namespace supsim
