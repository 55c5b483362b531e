#include "supsim/decompose.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace supsim {

json DistanceColoring::to_json() const {
  json colors = json::object();
  for (const auto& [node, c] : color) colors[std::to_string(node)] = c;
  return json{{"k", k}, {"palette", palette}, {"colors", colors}};
}

DistanceColoring DistanceColoring::from_json(const json& j) {
  DistanceColoring dc;
  dc.k = j.at("k").get<int>();
  dc.palette = j.at("palette").get<int>();
  for (const auto& [key, value] : j.at("colors").items())
    dc.color[std::stoull(key)] = value.get<int>();
  return dc;
}

DistanceColoring greedy_distance_coloring(const Graph& g, int k) {
  if (k < 1) throw ParameterError("distance coloring: need k >= 1");
  DistanceColoring dc;
  dc.k = k;
  for (NodeId v : g.ids()) {
    std::set<int> used;
    std::vector<int> dist = distances_from(g, v, k);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (dist[i] < 1) continue;
      auto it = dc.color.find(g.id_at(i));
      if (it != dc.color.end()) used.insert(it->second);
    }
    int c = 1;
    while (used.count(c)) ++c;
    dc.color[v] = c;
    dc.palette = std::max(dc.palette, c);
  }
  return dc;
}

json BallClustering::to_json() const {
  json nodes = json::object();
  for (const auto& [node, ci] : cluster_of) {
    const BallCluster& cl = clusters[ci];
    bool is_inner = std::binary_search(cl.inner.begin(), cl.inner.end(), node);
    nodes[std::to_string(node)] = json{{"cluster", ci},
                                       {"role", is_inner ? "inner" : "boundary"}};
  }
  json cls = json::array();
  for (const BallCluster& cl : clusters)
    cls.push_back(json{{"center", cl.center},
                       {"radius", cl.radius},
                       {"members", cl.members},
                       {"inner", cl.inner},
                       {"boundary", cl.boundary}});
  return json{{"epsilon", epsilon}, {"clusters", cls}, {"nodes", nodes}};
}

BallClustering BallClustering::from_json(const json& j) {
  BallClustering bc;
  bc.epsilon = j.at("epsilon").get<double>();
  for (const auto& cj : j.at("clusters")) {
    BallCluster cl;
    cl.center = cj.at("center").get<NodeId>();
    cl.radius = cj.at("radius").get<int>();
    cl.members = cj.at("members").get<std::vector<NodeId>>();
    cl.inner = cj.at("inner").get<std::vector<NodeId>>();
    cl.boundary = cj.at("boundary").get<std::vector<NodeId>>();
    bc.clusters.push_back(std::move(cl));
  }
  for (std::size_t i = 0; i < bc.clusters.size(); ++i)
    for (NodeId v : bc.clusters[i].members) bc.cluster_of[v] = i;
  return bc;
}

BallClustering ball_growing(const Graph& g, double epsilon) {
  if (epsilon <= 0.0) throw ParameterError("ball growing: need epsilon > 0");
  BallClustering bc;
  bc.epsilon = epsilon;

  std::set<NodeId> remaining(g.ids().begin(), g.ids().end());
  while (!remaining.empty()) {
    NodeId center = *remaining.begin();
    // BFS inside the residual graph; layers[r] = nodes at distance exactly r.
    std::map<NodeId, int> dist;
    std::deque<NodeId> queue{center};
    dist[center] = 0;
    std::vector<std::vector<NodeId>> layers{{center}};
    while (!queue.empty()) {
      NodeId cur = queue.front();
      queue.pop_front();
      for (NodeId w : g.neighbors(cur)) {
        if (!remaining.count(w) || dist.count(w)) continue;
        dist[w] = dist[cur] + 1;
        if (static_cast<std::size_t>(dist[w]) >= layers.size()) layers.push_back({});
        layers[dist[w]].push_back(w);
        queue.push_back(w);
      }
    }

    // Find the smallest r with |B_{r+1}| < (1+eps) * |B_r|.
    std::vector<std::size_t> ball_size(layers.size() + 1, 0);
    std::size_t acc = 0;
    for (std::size_t r = 0; r < layers.size(); ++r) {
      acc += layers[r].size();
      ball_size[r] = acc;
    }
    ball_size[layers.size()] = acc;  // balls saturate past the last layer
    int r = 0;
    while (static_cast<double>(ball_size[std::min<std::size_t>(r + 1, layers.size())]) >=
           (1.0 + epsilon) * static_cast<double>(ball_size[r]))
      ++r;

    BallCluster cl;
    cl.center = center;
    cl.radius = r;
    for (int d = 0; d <= r + 1 && d < static_cast<int>(layers.size()); ++d)
      for (NodeId v : layers[d])
        (d <= r ? cl.inner : cl.boundary).push_back(v);
    std::sort(cl.inner.begin(), cl.inner.end());
    std::sort(cl.boundary.begin(), cl.boundary.end());
    cl.members = cl.inner;
    cl.members.insert(cl.members.end(), cl.boundary.begin(), cl.boundary.end());
    std::sort(cl.members.begin(), cl.members.end());

    for (NodeId v : cl.members) {
      remaining.erase(v);
      bc.cluster_of[v] = bc.clusters.size();
    }
    bc.clusters.push_back(std::move(cl));
  }
  return bc;
}

json NetworkDecomposition::to_json() const {
  json cls = json::array();
  for (const NdCluster& cl : clusters)
    cls.push_back(json{{"color", cl.color},
                       {"leader", cl.leader},
                       {"members", cl.members},
                       {"weak_diameter", cl.weak_diameter}});
  return json{{"num_colors", num_colors}, {"clusters", cls}};
}

NetworkDecomposition NetworkDecomposition::from_json(const json& j) {
  NetworkDecomposition nd;
  nd.num_colors = j.at("num_colors").get<int>();
  for (const auto& cj : j.at("clusters")) {
    NdCluster cl;
    cl.color = cj.at("color").get<int>();
    cl.leader = cj.at("leader").get<NodeId>();
    cl.members = cj.at("members").get<std::vector<NodeId>>();
    cl.weak_diameter = cj.at("weak_diameter").get<int>();
    nd.clusters.push_back(std::move(cl));
  }
  for (std::size_t i = 0; i < nd.clusters.size(); ++i)
    for (NodeId v : nd.clusters[i].members) nd.cluster_of[v] = i;
  return nd;
}

NetworkDecomposition network_decomposition(const Graph& g) {
  NetworkDecomposition nd;
  std::vector<NodeId> residual = g.ids();
  int color = 0;
  while (!residual.empty()) {
    ++color;
    Graph sub = induced_subgraph(g, residual);
    BallClustering carved = ball_growing(sub, 1.0);
    std::vector<NodeId> next_residual;
    for (const BallCluster& cl : carved.clusters) {
      NdCluster out;
      out.color = color;
      out.members = cl.inner;  // boundaries are retried in the next pass
      out.leader = out.members.front();
      // weak diameter measured in the full graph
      for (NodeId v : out.members) {
        std::vector<int> dist = distances_from(g, v);
        for (NodeId w : out.members)
          out.weak_diameter = std::max(out.weak_diameter, dist[g.index_of(w)]);
      }
      nd.clusters.push_back(std::move(out));
      next_residual.insert(next_residual.end(), cl.boundary.begin(), cl.boundary.end());
    }
    std::sort(next_residual.begin(), next_residual.end());
    residual = std::move(next_residual);
  }
  nd.num_colors = color;
  std::sort(nd.clusters.begin(), nd.clusters.end(),
            [](const NdCluster& a, const NdCluster& b) {
              return std::pair(a.color, a.leader) < std::pair(b.color, b.leader);
            });
  for (std::size_t i = 0; i < nd.clusters.size(); ++i)
    for (NodeId v : nd.clusters[i].members) nd.cluster_of[v] = i;
  return nd;
}

DegeneracyColoring degeneracy_coloring(const Graph& g) {
  DegeneracyColoring out;
  // Min-degree peel (ties by id) gives the degeneracy order.
  std::map<NodeId, std::size_t> deg;
  for (NodeId v : g.ids()) deg[v] = g.degree(v);
  std::set<std::pair<std::size_t, NodeId>> heap;
  for (const auto& [v, d] : deg) heap.insert({d, v});
  std::vector<NodeId> order;
  std::set<NodeId> removed;
  while (!heap.empty()) {
    auto [d, v] = *heap.begin();
    heap.erase(heap.begin());
    out.degeneracy = std::max(out.degeneracy, static_cast<int>(d));
    order.push_back(v);
    removed.insert(v);
    for (NodeId w : g.neighbors(v)) {
      if (removed.count(w)) continue;
      heap.erase({deg[w], w});
      deg[w] -= 1;
      heap.insert({deg[w], w});
    }
  }
  // Color in reverse peel order: each node sees at most `degeneracy` colored
  // neighbors when its turn comes.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::set<int> used;
    for (NodeId w : g.neighbors(*it)) {
      auto cit = out.color.find(w);
      if (cit != out.color.end()) used.insert(cit->second);
    }
    int c = 1;
    while (used.count(c)) ++c;
    out.color[*it] = c;
    out.palette = std::max(out.palette, c);
  }
  return out;
}

namespace {

// Two rounds: (1) everyone shifts to the successor's color, which leaves every
// node's neighborhood with at most two distinct colors; (2) nodes sitting on
// color x pick a free color from {1,2,3}.
class ColorReduceAgent final : public NodeAgent {
 public:
  void init(NodeApi& api) override {
    const json& label = api.env().input_label;
    color_ = label.at("color").get<int>();
    x_ = label.at("x").get<int>();
    if (!label.at("succ").is_null()) succ_ = label.at("succ").get<NodeId>();
    for (NodeId w : api.env().comm_neighbors)
      api.send(w, json{{"color", color_}});
  }

  void step(NodeApi& api, const Inbox& inbox) override {
    if (api.round() == 1) {
      int shifted;
      if (succ_.has_value()) {
        shifted = -1;
        for (const InboxEntry& m : inbox)
          if (m.from == *succ_) shifted = m.payload.at("color").get<int>();
        if (shifted < 0)
          throw PreconditionError("color reduce: successor sent no color");
      } else {
        shifted = color_ != 1 ? 1 : 2;
      }
      color_ = shifted;
      for (NodeId w : api.env().comm_neighbors)
        api.send(w, json{{"color", color_}});
      return;
    }
    // round 2: neighbors now hold at most two distinct colors
    if (color_ == x_) {
      std::set<int> used;
      for (const InboxEntry& m : inbox) used.insert(m.payload.at("color").get<int>());
      int c = 1;
      while (used.count(c)) ++c;
      if (c > 3)
        throw ContractViolation("color reduce: no free color in {1,2,3}");
      color_ = c;
    }
    api.halt(json{{"color", color_}});
  }

 private:
  int color_ = 0;
  int x_ = 0;
  std::optional<NodeId> succ_;
};

class ColorReduceProgram final : public NodeProgram {
 public:
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<ColorReduceAgent>();
  }
};

}  // namespace

std::unique_ptr<NodeProgram> make_color_reduce_program() {
  return std::make_unique<ColorReduceProgram>();
}

ColorReduceResult pseudoforest_color_reduce(const Graph& g,
                                            const std::map<NodeId, NodeId>& successor,
                                            const std::map<NodeId, int>& coloring,
                                            int x, bool parallel) {
  if (x < 4) throw ParameterError("color reduce: need x >= 4");
  // The orientation must cover every edge with out-degree <= 1.
  std::set<Edge> covered;
  for (const auto& [v, s] : successor) {
    if (!g.has_edge(v, s))
      throw ValidationError("color reduce: successor edge not in graph");
    covered.insert(make_edge(v, s));
  }
  for (const Edge& e : g.edges())
    if (!covered.count(e))
      throw PreconditionError("color reduce: orientation misses edge {" +
                              std::to_string(e.first) + "," +
                              std::to_string(e.second) + "}");
  for (NodeId v : g.ids()) {
    auto it = coloring.find(v);
    if (it == coloring.end() || it->second < 1 || it->second > x)
      throw ValidationError("color reduce: colors must cover 1..x");
    for (NodeId w : g.neighbors(v))
      if (coloring.at(w) == it->second)
        throw ValidationError("color reduce: input coloring not proper");
  }

  SupportedInstance inst(g, g.edges(), Mode::LOCAL);
  RunOptions opts;
  opts.parallel = parallel;
  for (NodeId v : g.ids()) {
    auto sit = successor.find(v);
    opts.input_labels[v] = json{{"color", coloring.at(v)},
                                {"succ", sit == successor.end() ? json(nullptr)
                                                                : json(sit->second)},
                                {"x", x}};
  }
  auto program = make_color_reduce_program();
  ExecutionTrace trace = run(inst, *program, {}, opts);

  ColorReduceResult result;
  result.rounds = trace.rounds_used;
  for (const auto& [v, out] : trace.outputs)
    result.coloring[v] = out.at("color").get<int>();
  return result;
}

}  // namespace supsim
