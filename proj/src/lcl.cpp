#include "supsim/lcl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace supsim {

Labeling labeling_from_outputs(const std::map<NodeId, json>& outputs) {
  Labeling labels;
  for (const auto& [node, out] : outputs) labels[node] = NodeLabel{nullptr, out};
  return labels;
}

namespace {

const json& out_of(const Labeling& labels, NodeId v) {
  auto it = labels.find(v);
  if (it == labels.end())
    throw ValidationError("labeling: missing label for node " + std::to_string(v));
  return it->second.output;
}

std::string in_out_format(const Graph&, NodeId, const NodeLabel& label) {
  if (label.output.is_string() &&
      (label.output == "in" || label.output == "out"))
    return "";
  return "label must be \"in\" or \"out\"";
}

// Ports index the node's sorted input-graph neighbor list.
std::optional<std::size_t> port_of(const Graph& g, NodeId v, NodeId w) {
  auto nb = g.neighbors(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), w);
  if (it == nb.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - nb.begin());
}

bool lists_out_edge(const Graph& g, const json& label, NodeId v, NodeId w) {
  auto port = port_of(g, v, w);
  if (!port) return false;
  for (const auto& p : label.at("out_ports"))
    if (p.get<std::size_t>() == *port) return true;
  return false;
}

}  // namespace

LclProblem lcl_independent_set(bool require_maximal) {
  LclProblem p;
  p.name = require_maximal ? "maximal_independent_set" : "independent_set";
  p.radius = 1;
  p.format_check = in_out_format;
  p.predicate = [require_maximal](const Graph&, const LocalView& view,
                                  const Labeling& labels) -> std::string {
    NodeId v = view.root;
    bool v_in = out_of(labels, v) == "in";
    bool any_neighbor_in = false;
    for (NodeId w : view.view_neighbors(v)) {
      bool w_in = out_of(labels, w) == "in";
      any_neighbor_in = any_neighbor_in || w_in;
      if (v_in && w_in)
        return "adjacent nodes " + std::to_string(v) + " and " + std::to_string(w) +
               " both selected";
    }
    if (require_maximal && !v_in && !any_neighbor_in)
      return "node " + std::to_string(v) + " unselected with no selected neighbor";
    return "";
  };
  p.quality = [](const Graph&, const Labeling& labels) {
    double size = 0;
    for (const auto& [node, label] : labels) {
      (void)node;
      if (label.output == "in") size += 1;
    }
    return size;
  };
  return p;
}

LclProblem lcl_coloring(int num_colors) {
  if (num_colors < 1) throw ParameterError("coloring: need at least one color");
  LclProblem p;
  p.name = "coloring" + std::to_string(num_colors);
  p.radius = 1;
  p.format_check = [num_colors](const Graph&, NodeId, const NodeLabel& label) {
    if (!label.output.is_number_integer()) return std::string("color must be an integer");
    int c = label.output.get<int>();
    if (c < 1 || c > num_colors)
      return "color " + std::to_string(c) + " outside 1.." + std::to_string(num_colors);
    return std::string("");
  };
  p.predicate = [](const Graph&, const LocalView& view,
                   const Labeling& labels) -> std::string {
    NodeId v = view.root;
    for (NodeId w : view.view_neighbors(v))
      if (out_of(labels, v) == out_of(labels, w))
        return "edge {" + std::to_string(v) + "," + std::to_string(w) +
               "} is monochromatic";
    return "";
  };
  p.quality = [](const Graph&, const Labeling& labels) {
    std::set<int> used;
    for (const auto& [node, label] : labels) {
      (void)node;
      used.insert(label.output.get<int>());
    }
    return static_cast<double>(used.size());
  };
  return p;
}

LclProblem lcl_maximal_matching() {
  LclProblem p;
  p.name = "maximal_matching";
  p.radius = 1;
  p.format_check = [](const Graph& g, NodeId v, const NodeLabel& label) {
    if (label.output.is_null()) return std::string("");
    if (!label.output.is_number_unsigned()) return std::string("partner must be a node id");
    NodeId w = label.output.get<NodeId>();
    if (!g.has_edge(v, w)) return std::string("partner is not a neighbor");
    return std::string("");
  };
  p.predicate = [](const Graph&, const LocalView& view,
                   const Labeling& labels) -> std::string {
    NodeId v = view.root;
    const json& mine = out_of(labels, v);
    if (!mine.is_null()) {
      NodeId w = mine.get<NodeId>();
      if (out_of(labels, w) != json(v))
        return "node " + std::to_string(v) + " claims partner " + std::to_string(w) +
               " who disagrees";
    } else {
      for (NodeId w : view.view_neighbors(v))
        if (out_of(labels, w).is_null())
          return "unmatched nodes " + std::to_string(v) + " and " + std::to_string(w) +
                 " are adjacent";
    }
    return "";
  };
  p.quality = [](const Graph&, const Labeling& labels) {
    double matched = 0;
    for (const auto& [node, label] : labels) {
      (void)node;
      if (!label.output.is_null()) matched += 1;
    }
    return matched / 2.0;
  };
  return p;
}

LclProblem lcl_edge_coloring(int num_colors) {
  if (num_colors < 1) throw ParameterError("edge coloring: need at least one color");
  LclProblem p;
  p.name = "edge_coloring" + std::to_string(num_colors);
  p.radius = 1;
  p.format_check = [num_colors](const Graph& g, NodeId v, const NodeLabel& label) {
    if (!label.output.is_object()) return std::string("label must map neighbor to color");
    auto nb = g.neighbors(v);
    if (label.output.size() != nb.size())
      return std::string("label must color every incident edge");
    for (const auto& [key, color] : label.output.items()) {
      NodeId w = std::stoull(key);
      if (!std::binary_search(nb.begin(), nb.end(), w))
        return "colored edge to non-neighbor " + key;
      if (!color.is_number_integer() || color.get<int>() < 1 ||
          color.get<int>() > num_colors)
        return std::string("edge color outside 1..") + std::to_string(num_colors);
    }
    return std::string("");
  };
  p.predicate = [](const Graph&, const LocalView& view,
                   const Labeling& labels) -> std::string {
    NodeId v = view.root;
    const json& mine = out_of(labels, v);
    std::set<int> seen;
    for (NodeId w : view.view_neighbors(v)) {
      int c = mine.at(std::to_string(w)).get<int>();
      int c_back = out_of(labels, w).at(std::to_string(v)).get<int>();
      if (c != c_back)
        return "edge {" + std::to_string(v) + "," + std::to_string(w) +
               "} colored inconsistently";
      if (!seen.insert(c).second)
        return "two edges at node " + std::to_string(v) + " share color " +
               std::to_string(c);
    }
    return "";
  };
  p.quality = [](const Graph&, const Labeling& labels) {
    std::set<int> used;
    for (const auto& [node, label] : labels) {
      (void)node;
      for (const auto& [key, color] : label.output.items()) {
        (void)key;
        used.insert(color.get<int>());
      }
    }
    return static_cast<double>(used.size());
  };
  return p;
}

LclProblem lcl_sinkless_orientation() {
  LclProblem p;
  p.name = "sinkless_orientation";
  p.radius = 1;
  p.format_check = [](const Graph& g, NodeId v, const NodeLabel& label) {
    if (!label.output.is_object() || !label.output.contains("out_ports") ||
        !label.output.at("out_ports").is_array())
      return std::string("label must be {\"out_ports\": [...]}");
    std::set<std::size_t> seen;
    for (const auto& pj : label.output.at("out_ports")) {
      if (!pj.is_number_integer() || pj.get<long long>() < 0)
        return std::string("ports must be non-negative");
      std::size_t port = pj.get<std::size_t>();
      if (port >= g.degree(v)) return std::string("port beyond degree");
      if (!seen.insert(port).second) return std::string("duplicate port");
    }
    return std::string("");
  };
  p.predicate = [](const Graph& g, const LocalView& view,
                   const Labeling& labels) -> std::string {
    NodeId v = view.root;
    std::size_t out_degree = 0;
    for (NodeId w : view.view_neighbors(v)) {
      bool mine = lists_out_edge(g, out_of(labels, v), v, w);
      bool theirs = lists_out_edge(g, out_of(labels, w), w, v);
      if (mine == theirs)
        return "edge {" + std::to_string(v) + "," + std::to_string(w) +
               (mine ? "} oriented both ways" : "} left unoriented");
      if (mine) ++out_degree;
    }
    if (g.degree(v) >= 2 && out_degree == 0)
      return "node " + std::to_string(v) + " has degree >= 2 but no out-edge";
    return "";
  };
  p.quality = [](const Graph& g, const Labeling& labels) {
    double satisfied = 0;
    for (const auto& [node, label] : labels)
      if (g.degree(node) >= 2 && !label.output.at("out_ports").empty()) satisfied += 1;
    return satisfied;
  };
  return p;
}

LclProblem lcl_dominating_set() {
  LclProblem p;
  p.name = "dominating_set";
  p.radius = 1;
  p.format_check = in_out_format;
  p.predicate = [](const Graph&, const LocalView& view,
                   const Labeling& labels) -> std::string {
    NodeId v = view.root;
    if (out_of(labels, v) == "in") return "";
    for (NodeId w : view.view_neighbors(v))
      if (out_of(labels, w) == "in") return "";
    return "node " + std::to_string(v) + " is not dominated";
  };
  p.quality = [](const Graph&, const Labeling& labels) {
    double size = 0;
    for (const auto& [node, label] : labels) {
      (void)node;
      if (label.output == "in") size += 1;
    }
    return size;
  };
  return p;
}

}  // namespace supsim
