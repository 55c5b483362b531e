#pragma once

#include <functional>
#include <map>
#include <string>

#include "supsim/view.hpp"

namespace supsim {

// Labels assigned to nodes; inputs are optional (most problems only have
// outputs). Keyed by node id.
struct NodeLabel {
  json input;   // null when the problem has no input labels
  json output;
};
using Labeling = std::map<NodeId, NodeLabel>;

Labeling labeling_from_outputs(const std::map<NodeId, json>& outputs);

// A locally checkable labeling problem: a check radius plus a predicate
// evaluated on every node's labeled radius-r view. The format hook rejects
// labels outside the problem's alphabet before any predicate runs.
struct LclProblem {
  std::string name;
  int radius = 1;
  // returns empty string when ok, otherwise why the label is malformed
  std::function<std::string(const Graph&, NodeId, const NodeLabel&)> format_check;
  // returns empty string when the view is locally valid, otherwise the reason
  std::function<std::string(const Graph&, const LocalView&, const Labeling&)> predicate;
  // optional solution-quality measure (set size, palette, ...)
  std::function<double(const Graph&, const Labeling&)> quality;
};

// Built-in problems. Output label conventions:
//   independent set / dominating set:  "in" | "out"
//   coloring:                          integer in 1..num_colors
//   matching:                          partner node id or null
//   edge coloring:                     {"<neighbor id>": color, ...}
//   orientation:                       {"out_ports": [i, ...]} where i indexes
//                                      the node's sorted input-graph neighbors
LclProblem lcl_independent_set(bool require_maximal = true);
LclProblem lcl_coloring(int num_colors);
LclProblem lcl_maximal_matching();
LclProblem lcl_edge_coloring(int num_colors);
LclProblem lcl_sinkless_orientation();
LclProblem lcl_dominating_set();

}  // namespace supsim
