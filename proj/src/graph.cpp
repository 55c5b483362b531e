#include "supsim/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace supsim {

Graph::Graph(std::vector<NodeId> ids, const std::vector<Edge>& edges)
    : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw ParameterError("graph: duplicate node id");
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i)
    index_.emplace(ids_[i], static_cast<std::uint32_t>(i));

  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.first == e.second)
      throw ParameterError("graph: self-loop at node " + std::to_string(e.first));
    if (!index_.count(e.first) || !index_.count(e.second))
      throw LookupError("graph: edge endpoint not a node: " +
                        std::to_string(e.first) + " " + std::to_string(e.second));
    edges_.push_back(make_edge(e.first, e.second));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ParameterError("graph: parallel edge");

  adj_.assign(ids_.size(), {});
  for (const Edge& e : edges_) {
    adj_[index_.at(e.first)].push_back(e.second);
    adj_[index_.at(e.second)].push_back(e.first);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::size_t Graph::index_of(NodeId v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    throw LookupError("graph: unknown node " + std::to_string(v));
  return it->second;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  return adj_[index_of(v)];
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adj_) d = std::max(d, nb.size());
  return d;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v)) return false;
  const auto& nb = adj_[index_.at(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::connected() const {
  if (ids_.empty()) return true;
  std::vector<int> dist = distances_from(*this, ids_[0]);
  for (int d : dist)
    if (d < 0) return false;
  return true;
}

std::vector<int> distances_from(const Graph& g, NodeId v, int max_depth) {
  std::vector<int> dist(g.size(), -1);
  std::deque<std::size_t> queue;
  dist[g.index_of(v)] = 0;
  queue.push_back(g.index_of(v));
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    int d = dist[cur];
    if (max_depth >= 0 && d >= max_depth) continue;
    for (NodeId w : g.neighbors(g.id_at(cur))) {
      std::size_t wi = g.index_of(w);
      if (dist[wi] < 0) {
        dist[wi] = d + 1;
        queue.push_back(wi);
      }
    }
  }
  return dist;
}

std::vector<NodeId> ball(const Graph& g, NodeId v, int t) {
  if (t < 0) throw ParameterError("ball: negative radius");
  std::vector<int> dist = distances_from(g, v, t);
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (dist[i] >= 0) out.push_back(g.id_at(i));
  return out;  // ids ascending because indices are
}

std::optional<int> girth(const Graph& g) {
  // BFS from every node; a non-tree edge seen at depths (du, dv) witnesses a
  // closed walk of length du+dv+1 through the root. Each per-root value may
  // overshoot, but the minimum over all roots is the exact girth.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  int best = std::numeric_limits<int>::max();
  for (NodeId root : g.ids()) {
    std::vector<int> dist(g.size(), -1);
    std::vector<std::size_t> parent(g.size(), kNone);
    std::deque<std::size_t> queue;
    std::size_t r = g.index_of(root);
    dist[r] = 0;
    queue.push_back(r);
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (NodeId w : g.neighbors(g.id_at(cur))) {
        std::size_t wi = g.index_of(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[cur] + 1;
          parent[wi] = cur;
          queue.push_back(wi);
        } else if (parent[cur] != wi && parent[wi] != cur) {
          best = std::min(best, dist[cur] + dist[wi] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

Graph induced_subgraph(const Graph& g, const std::vector<NodeId>& nodes) {
  std::set<NodeId> keep(nodes.begin(), nodes.end());
  for (NodeId v : keep)
    if (!g.has_node(v))
      throw LookupError("induced_subgraph: unknown node " + std::to_string(v));
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (keep.count(e.first) && keep.count(e.second)) edges.push_back(e);
  return Graph(std::vector<NodeId>(keep.begin(), keep.end()), edges);
}

Graph power_graph(const Graph& g, int t) {
  if (t < 1) throw ParameterError("power_graph: exponent must be >= 1");
  std::vector<Edge> edges;
  for (NodeId v : g.ids()) {
    std::vector<int> dist = distances_from(g, v, t);
    for (std::size_t i = 0; i < g.size(); ++i) {
      NodeId w = g.id_at(i);
      if (w > v && dist[i] >= 1) edges.push_back({v, w});
    }
  }
  return Graph(g.ids(), edges);
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> comps;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    std::vector<NodeId> comp;
    std::deque<std::size_t> queue{i};
    seen[i] = true;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      comp.push_back(g.id_at(cur));
      for (NodeId w : g.neighbors(g.id_at(cur))) {
        std::size_t wi = g.index_of(w);
        if (!seen[wi]) {
          seen[wi] = true;
          queue.push_back(wi);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.size() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.first << " " << e.second << "\n";
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw ValidationError("edge list: bad header");
  std::vector<Edge> edges;
  std::set<NodeId> seen;
  for (std::size_t i = 0; i < m; ++i) {
    NodeId u, v;
    if (!(in >> u >> v)) throw ValidationError("edge list: truncated");
    edges.push_back(make_edge(u, v));
    seen.insert(u);
    seen.insert(v);
  }
  std::vector<NodeId> ids(seen.begin(), seen.end());
  if (ids.size() < n) {
    // Header promises isolated nodes; the format can only express them for
    // the contiguous id convention 1..n.
    bool contiguous_ok = seen.empty() || (*seen.rbegin() <= n && *seen.begin() >= 1);
    if (!contiguous_ok)
      throw ValidationError("edge list: isolated nodes need ids 1..n");
    ids.clear();
    for (NodeId v = 1; v <= n; ++v) ids.push_back(v);
  } else if (ids.size() > n) {
    throw ValidationError("edge list: more endpoints than header nodes");
  }
  return Graph(ids, edges);
}

Graph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace supsim
