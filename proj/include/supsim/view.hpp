#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supsim/instance.hpp"

namespace supsim {

// A radius-t neighborhood snapshot: the ball's nodes, the edges induced on
// them, and optional per-node / per-edge decorations.
struct ViewEdge {
  NodeId a = 0, b = 0;           // a < b
  std::optional<bool> in_input;  // set when the view was taken over the support
};

struct LocalView {
  NodeId root = 0;
  int radius = 0;
  std::vector<NodeId> nodes;             // sorted ascending
  std::vector<int> dist;                 // aligned with nodes; hops from root
  std::vector<ViewEdge> edges;           // sorted by (a, b)
  std::map<NodeId, json> annotations;    // colors, labels, outputs, ...

  int dist_of(NodeId v) const;
  std::vector<NodeId> view_neighbors(NodeId v) const;  // within the view
  bool has_view_edge(NodeId u, NodeId v) const;
};

enum class ViewOver { support, input };

// Snapshot of the radius-t ball around v. Over the support, every edge
// carries its in-input flag; over the input graph the flags stay unset.
LocalView extract_view(const SupportedInstance& inst, NodeId v, int t, ViewOver over);

// Which parts of a view an isomorphism has to preserve (root and hop
// distances are always preserved).
struct Respect {
  bool ids = false;
  bool input_flags = false;
  bool annotations = false;
};

struct IsoWitness {
  bool isomorphic = false;
  std::map<NodeId, NodeId> mapping;  // a-node -> b-node when isomorphic
};

// Root-preserving isomorphism between equal-radius views.
IsoWitness views_isomorphic(const LocalView& a, const LocalView& b, Respect respect);

// Exact canonical string: two views get the same string iff they are
// isomorphic under `respect`. Uses degree/distance refinement followed by an
// exhaustive minimal-serialization search, so it is meant for small views.
std::string canonical_view_string(const LocalView& v, Respect respect);

// Whole-graph isomorphism with backtracking; graphs above the cap are
// rejected with CapacityError (the search is exponential in the worst case).
IsoWitness graphs_isomorphic(const Graph& a, const Graph& b, std::size_t cap = 32);

}  // namespace supsim
