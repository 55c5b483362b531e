#include "supsim/mis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>

namespace supsim {

std::vector<NodeId> brute_force_mis(const Graph& g, std::size_t cap) {
  if (g.size() > cap)
    throw CapacityError("brute-force independent set: " + std::to_string(g.size()) +
                        " nodes exceeds the cap of " + std::to_string(cap));
  std::size_t n = g.size();
  std::vector<std::uint32_t> conflict(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (NodeId w : g.neighbors(g.id_at(i)))
      conflict[i] |= 1u << g.index_of(w);

  // Include-first DFS over ascending ids with strict-improvement updates
  // finds the lexicographically least set among the maximum-size ones.
  std::uint32_t best_mask = 0;
  std::size_t best_size = 0;
  std::vector<std::pair<std::size_t, std::uint32_t>> stack;  // (next index, chosen)
  stack.emplace_back(0, 0u);
  while (!stack.empty()) {
    auto [i, mask] = stack.back();
    stack.pop_back();
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size + (n - i) <= best_size) continue;
    if (i == n) {
      best_size = size;
      best_mask = mask;
      continue;
    }
    // Exclude pushed first so the include branch is explored first.
    stack.emplace_back(i + 1, mask);
    if (!(conflict[i] & mask)) stack.emplace_back(i + 1, mask | (1u << i));
  }

  std::vector<NodeId> result;
  for (std::size_t i = 0; i < n; ++i)
    if (best_mask & (1u << i)) result.push_back(g.id_at(i));
  return result;
}

namespace {

std::string key_of(NodeId v) { return std::to_string(v); }

class ClusterMisAgent : public NodeAgent {
 public:
  void init(NodeApi& api) override {
    const json& m = api.env().memory;
    if (!m.is_object())
      throw PreconditionError("cluster mis: node " + key_of(api.env().id) +
                              " has no preprocessed state");
    for (const auto& v : m.at("members")) members_.push_back(v.get<NodeId>());
    depth_ = m.at("depth").get<int>();
    json record = {{"adj", cluster_input_neighbors(api)}};
    knowledge_[key_of(api.env().id)] = std::move(record);
    if (depth_ == 0)
      conclude(api);
    else
      flood(api);
  }

  void step(NodeApi& api, const Inbox& inbox) override {
    int r = api.round();
    if (r <= depth_) {
      for (const auto& entry : inbox)
        for (const auto& [key, record] : entry.payload.at("k").items())
          if (!knowledge_.contains(key)) knowledge_[key] = record;
      if (r < depth_)
        flood(api);
      else
        conclude(api);
      return;
    }
    // Repair round: drop when a smaller selected input-neighbor announced.
    bool drop = false;
    for (const auto& entry : inbox)
      if (entry.payload.contains("s") && entry.from < api.env().id) drop = true;
    api.halt(selected_ && !drop ? json("in") : json("out"));
  }

 private:
  json cluster_input_neighbors(NodeApi& api) const {
    const NodeEnv& env = api.env();
    json adj = json::array();
    for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i)
      if (env.neighbor_in_input[i] &&
          std::binary_search(members_.begin(), members_.end(),
                             env.comm_neighbors[i]))
        adj.push_back(env.comm_neighbors[i]);
    return adj;
  }

  void flood(NodeApi& api) {
    const NodeEnv& env = api.env();
    json payload = {{"k", knowledge_}};
    for (NodeId w : env.comm_neighbors)
      if (std::binary_search(members_.begin(), members_.end(), w))
        api.send(w, payload);
  }

  // Gather finished: compute the shared optimum if the cluster was fully
  // seen, abstain otherwise, then announce a selection over input edges.
  void conclude(NodeApi& api) {
    bool complete = true;
    for (NodeId m : members_)
      if (!knowledge_.contains(key_of(m))) complete = false;
    if (complete) {
      std::vector<Edge> edges;
      for (NodeId m : members_)
        for (const auto& nb : knowledge_.at(key_of(m)).at("adj")) {
          NodeId w = nb.get<NodeId>();
          if (m < w) edges.push_back({m, w});
        }
      Graph cluster_graph(members_, edges);
      std::vector<NodeId> mis = brute_force_mis(cluster_graph, members_.size());
      selected_ = std::binary_search(mis.begin(), mis.end(), api.env().id);
    }
    if (selected_) {
      const NodeEnv& env = api.env();
      for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i)
        if (env.neighbor_in_input[i])
          api.send(env.comm_neighbors[i], json{{"s", 1}});
    }
  }

  std::vector<NodeId> members_;
  int depth_ = 0;
  json knowledge_ = json::object();
  bool selected_ = false;
};

class ClusterMisProgram : public NodeProgram {
 public:
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<ClusterMisAgent>();
  }
};

class PriorityMisAgent : public NodeAgent {
 public:
  PriorityMisAgent(int iterations, bool deterministic)
      : iterations_(iterations), deterministic_(deterministic) {}

  void init(NodeApi& api) override { send_priority(api); }

  void step(NodeApi& api, const Inbox& inbox) override {
    int r = api.round();
    if (r % 2 == 1) {
      // Join round: the inbox holds undecided neighbors' priorities.
      for (const auto& entry : inbox) {
        std::uint64_t p = entry.payload.at("p").get<std::uint64_t>();
        if (std::tie(p, entry.from) > std::tie(priority_, api.env().id)) return;
      }
      const NodeEnv& env = api.env();
      for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i)
        if (env.neighbor_in_input[i])
          api.send(env.comm_neighbors[i], json{{"j", 1}});
      api.halt("in");
      return;
    }
    // Priority round: leave if a neighbor joined, give up if out of
    // iterations, otherwise announce the next priority.
    for (const auto& entry : inbox)
      if (entry.payload.contains("j")) {
        api.halt("out");
        return;
      }
    if (r / 2 >= iterations_) {
      api.halt("out");
      return;
    }
    send_priority(api);
  }

 private:
  void send_priority(NodeApi& api) {
    priority_ = deterministic_
                    ? std::numeric_limits<std::uint64_t>::max() - api.env().id
                    : api.rng().next_u64();
    const NodeEnv& env = api.env();
    for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i)
      if (env.neighbor_in_input[i])
        api.send(env.comm_neighbors[i], json{{"p", priority_}});
  }

  int iterations_;
  bool deterministic_;
  std::uint64_t priority_ = 0;
};

class PriorityMisProgram : public NodeProgram {
 public:
  PriorityMisProgram(int iterations, bool deterministic)
      : iterations_(iterations), deterministic_(deterministic) {}
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<PriorityMisAgent>(iterations_, deterministic_);
  }

 private:
  int iterations_;
  bool deterministic_;
};

}  // namespace

ClusterMisResult cluster_optimal_mis(const SupportedInstance& inst, double epsilon,
                                     const RunOptions& opts, std::size_t cluster_cap) {
  ClusterMisResult result;
  result.clustering = ball_growing(inst.support(), epsilon);

  // Shared flooding budget: the largest exact diameter of a cluster-induced
  // support subgraph. Computed up front so every node halts in lockstep.
  int depth = 0;
  for (const BallCluster& cluster : result.clustering.clusters) {
    if (cluster.members.size() > cluster_cap)
      throw CapacityError("cluster mis: cluster of " +
                          std::to_string(cluster.members.size()) +
                          " nodes exceeds the cap of " + std::to_string(cluster_cap));
    std::vector<Edge> edges;
    for (NodeId v : cluster.members)
      for (NodeId w : inst.support().neighbors(v))
        if (v < w &&
            std::binary_search(cluster.members.begin(), cluster.members.end(), w))
          edges.push_back({v, w});
    Graph induced(cluster.members, edges);
    for (NodeId v : cluster.members)
      for (int d : distances_from(induced, v)) depth = std::max(depth, d);
  }
  result.gather_rounds = depth;

  Memory memory;
  for (const BallCluster& cluster : result.clustering.clusters)
    for (NodeId v : cluster.members)
      memory[v] = {{"members", cluster.members}, {"depth", depth}};

  ClusterMisProgram program;
  result.trace = run(inst, program, memory, opts);
  result.outputs = result.trace.outputs;
  return result;
}

std::unique_ptr<NodeProgram> make_priority_mis_program(int iterations,
                                                       bool deterministic_by_id) {
  if (iterations < 1) throw ParameterError("priority mis: need at least one iteration");
  return std::make_unique<PriorityMisProgram>(iterations, deterministic_by_id);
}

MisRunResult random_priority_mis(const SupportedInstance& inst, int iterations,
                                 const RunOptions& opts) {
  auto program = make_priority_mis_program(iterations, false);
  ExecutionTrace trace = run(inst, *program, {}, opts);
  return {trace.outputs, std::move(trace)};
}

MisRunResult greedy_id_mis(const SupportedInstance& inst, const RunOptions& opts) {
  int iterations = static_cast<int>(inst.support().size()) + 1;
  auto program = make_priority_mis_program(iterations, true);
  ExecutionTrace trace = run(inst, *program, {}, opts);
  return {trace.outputs, std::move(trace)};
}

}  // namespace supsim
