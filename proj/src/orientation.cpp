#include "supsim/orientation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace supsim {

namespace {

// First cycle found by BFS from `root` within the component, as an ordered
// node sequence; empty when the component is a tree.
std::vector<NodeId> find_cycle(const Graph& g, NodeId root) {
  std::map<NodeId, NodeId> parent;
  std::map<NodeId, int> depth;
  depth[root] = 0;
  std::deque<NodeId> queue{root};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(v)) {
      if (!depth.count(w)) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        queue.push_back(w);
        continue;
      }
      if (parent.count(v) && parent.at(v) == w) continue;
      if (parent.count(w) && parent.at(w) == v) continue;
      // Non-tree edge {v, w}: walk both ancestries to the meeting point.
      std::vector<NodeId> up_v{v}, up_w{w};
      NodeId a = v, b = w;
      while (depth.at(a) > depth.at(b)) up_v.push_back(a = parent.at(a));
      while (depth.at(b) > depth.at(a)) up_w.push_back(b = parent.at(b));
      while (a != b) {
        up_v.push_back(a = parent.at(a));
        up_w.push_back(b = parent.at(b));
      }
      std::vector<NodeId> cycle(up_v.begin(), up_v.end());
      for (auto it = up_w.rbegin(); it != up_w.rend(); ++it)
        if (*it != a) cycle.push_back(*it);
      return cycle;
    }
  }
  return {};
}

}  // namespace

OrientationResult global_sinkless_orientation(const Graph& g) {
  OrientationResult result;
  for (NodeId v : g.ids()) result.out_edges[v];
  std::set<Edge> oriented;
  auto orient = [&](NodeId from, NodeId to) {
    if (oriented.insert(make_edge(from, to)).second)
      result.out_edges[from].push_back(to);
  };

  for (const auto& component : connected_components(g)) {
    std::vector<NodeId> cycle = find_cycle(g, component.front());
    std::set<NodeId> sources;  // BFS layer every other edge points toward
    if (cycle.empty()) {
      // Tree: root at a node of degree <= 1 so only the root lacks an
      // out-edge, and the root is allowed to.
      NodeId root = component.front();
      for (NodeId v : component)
        if (g.degree(v) <= 1) {
          root = v;
          break;
        }
      sources.insert(root);
    } else {
      for (std::size_t i = 0; i < cycle.size(); ++i)
        orient(cycle[i], cycle[(i + 1) % cycle.size()]);
      sources.insert(cycle.begin(), cycle.end());
    }
    // Orient everything else toward the sources (children point at BFS
    // parents), which gives every non-source node an out-edge.
    std::map<NodeId, int> depth;
    std::deque<NodeId> queue;
    for (NodeId v : sources) {
      depth[v] = 0;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (NodeId w : g.neighbors(v)) {
        if (!depth.count(w)) {
          depth[w] = depth[v] + 1;
          orient(w, v);
          queue.push_back(w);
        }
      }
    }
    // Leftover non-tree edges; any direction works.
    for (NodeId v : component)
      for (NodeId w : g.neighbors(v))
        if (v < w && !oriented.count(make_edge(v, w))) orient(v, w);
  }

  for (auto& [v, heads] : result.out_edges) {
    (void)v;
    std::sort(heads.begin(), heads.end());
  }
  return result;
}

Labeling orientation_to_labels(const Graph& g, const OrientationResult& orientation) {
  Labeling labels;
  for (NodeId v : g.ids()) {
    json ports = json::array();
    auto nb = g.neighbors(v);
    auto it = orientation.out_edges.find(v);
    if (it != orientation.out_edges.end())
      for (NodeId head : it->second) {
        auto pos = std::lower_bound(nb.begin(), nb.end(), head);
        if (pos == nb.end() || *pos != head)
          throw ValidationError("orientation: out-edge to non-neighbor " +
                                std::to_string(head));
        ports.push_back(static_cast<std::size_t>(pos - nb.begin()));
      }
    labels[v] = NodeLabel{nullptr, json{{"out_ports", std::move(ports)}}};
  }
  return labels;
}

}  // namespace supsim
