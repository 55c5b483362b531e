#include "supsim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "supsim/view.hpp"

namespace supsim {

namespace {

std::string key_of(NodeId v) { return std::to_string(v); }

// Reconstructs the radius-t input-graph view of `root` from flooded records
// {"<id>": {"adj": [...], "has": bool, "out": ...}}. Produces exactly what
// extract_view(inst, root, t, ViewOver::input) would, plus the committed
// outputs as annotations.
LocalView view_from_knowledge(NodeId root, int t, const json& k) {
  std::map<NodeId, std::vector<NodeId>> adj;
  std::map<NodeId, const json*> rec;
  for (const auto& [key, r] : k.items()) rec[std::stoull(key)] = &r;
  for (const auto& [id, r] : rec) {
    auto& list = adj[id];
    for (const auto& nb : r->at("adj")) {
      NodeId w = nb.get<NodeId>();
      if (rec.count(w)) list.push_back(w);
    }
  }
  std::map<NodeId, int> dist;
  dist[root] = 0;
  std::deque<NodeId> queue{root};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    if (dist[v] == t) continue;
    for (NodeId w : adj[v])
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }

  LocalView view;
  view.root = root;
  view.radius = t;
  for (const auto& [v, d] : dist) {
    view.nodes.push_back(v);
    view.dist.push_back(d);
    const json& r = *rec.at(v);
    if (r.at("has").get<bool>()) view.annotations[v] = r.at("out");
  }
  for (const auto& [v, d] : dist) {
    (void)d;
    for (NodeId w : adj[v])
      if (v < w && dist.count(w)) view.edges.push_back({v, w, std::nullopt});
  }
  std::sort(view.edges.begin(), view.edges.end(),
            [](const ViewEdge& x, const ViewEdge& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  return view;
}

json self_record(const NodeEnv& env, bool has_committed, const json& committed) {
  json adj = json::array();
  for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i)
    if (env.neighbor_in_input[i]) adj.push_back(env.comm_neighbors[i]);
  return {{"adj", std::move(adj)},
          {"has", has_committed},
          {"out", has_committed ? committed : json(nullptr)}};
}

// ---------------------------------------------------------------- support --

struct ClusterRole {
  int color = 0;
  bool member = false;
  bool leader = false;
  bool has_parent = false;
  NodeId parent = 0;
  std::vector<NodeId> children;
  std::vector<NodeId> members;  // leader only
};

class SupportSimAgent : public NodeAgent {
 public:
  explicit SupportSimAgent(const SlocalAlgorithm* alg) : alg_(alg) {}

  void init(NodeApi& api) override {
    const json& m = api.env().memory;
    if (!m.is_object())
      throw PreconditionError("slocal replay: node " + key_of(api.env().id) +
                              " has no preprocessed state");
    t_ = m.at("t").get<int>();
    for (const auto& d : m.at("depths")) depths_.push_back(d.get<int>());
    for (const auto& [cidstr, rj] : m.at("roles").items()) {
      ClusterRole role;
      role.color = rj.at("color").get<int>();
      role.member = rj.at("member").get<bool>();
      role.leader = rj.at("leader").get<bool>();
      if (!rj.at("parent").is_null()) {
        role.has_parent = true;
        role.parent = rj.at("parent").get<NodeId>();
      }
      for (const auto& c : rj.at("children")) role.children.push_back(c.get<NodeId>());
      if (rj.contains("members"))
        for (const auto& v : rj.at("members")) role.members.push_back(v.get<NodeId>());
      roles_[std::stoi(cidstr)] = std::move(role);
    }
    starts_.push_back(0);
    for (int d : depths_) starts_.push_back(starts_.back() + t_ + 2 * d);
    total_ = starts_.back();
    phase_begin(api);
    send_phase_traffic(api, 0);
  }

  void step(NodeApi& api, const Inbox& inbox) override {
    int r = api.round();
    int jr = phase_of(r - 1);
    int o = r - starts_[jr];
    gather_out_.clear();
    diss_out_.clear();

    for (const auto& entry : inbox) {
      if (entry.payload.contains("f")) merge_knowledge(entry.payload.at("f"));
      if (entry.payload.contains("g"))
        for (const auto& [cidstr, packets] : entry.payload.at("g").items()) {
          int cid = std::stoi(cidstr);
          auto it = roles_.find(cid);
          if (it == roles_.end())
            throw ContractViolation("slocal replay: node " + key_of(api.env().id) +
                                    " relayed for unknown cluster " + cidstr);
          auto& sink = it->second.leader ? collected_[cid] : gather_out_[cid];
          for (const auto& p : packets) sink.push_back(p);
        }
      if (entry.payload.contains("d"))
        for (const auto& [cidstr, result] : entry.payload.at("d").items()) {
          int cid = std::stoi(cidstr);
          auto it = roles_.find(cid);
          if (it == roles_.end())
            throw ContractViolation("slocal replay: node " + key_of(api.env().id) +
                                    " relayed for unknown cluster " + cidstr);
          if (it->second.member && result.contains(key_of(api.env().id)))
            commit(api, result.at(key_of(api.env().id)));
          if (!it->second.children.empty()) diss_out_[cid] = result;
        }
    }

    if (o == t_)
      for (const auto& [cid, role] : roles_)
        if (role.color == jr + 1 && role.member) {
          json packet = {{"root", api.env().id}, {"k", knowledge_}};
          if (role.leader)
            collected_[cid].push_back(std::move(packet));
          else
            gather_out_[cid].push_back(std::move(packet));
        }

    if (o == t_ + depths_[jr])
      for (const auto& [cid, role] : roles_)
        if (role.color == jr + 1 && role.leader) compute_cluster(api, cid, role);

    if (r < total_) {
      int js = phase_of(r);
      if (r == starts_[js]) phase_begin(api);
      send_phase_traffic(api, r - starts_[js]);
    } else {
      if (!has_committed_)
        throw ContractViolation("slocal replay: node " + key_of(api.env().id) +
                                " reached the end without an output");
      api.halt(committed_);
    }
  }

 private:
  int phase_of(int send_round) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), send_round);
    return static_cast<int>(it - starts_.begin()) - 1;
  }

  void phase_begin(NodeApi& api) {
    knowledge_ = json::object();
    knowledge_[key_of(api.env().id)] = self_record(api.env(), has_committed_, committed_);
    collected_.clear();
  }

  void merge_knowledge(const json& k) {
    for (const auto& [key, record] : k.items())
      if (!knowledge_.contains(key)) knowledge_[key] = record;
  }

  void commit(NodeApi& api, json output) {
    if (has_committed_)
      throw ContractViolation("slocal replay: node " + key_of(api.env().id) +
                              " received two outputs");
    committed_ = std::move(output);
    has_committed_ = true;
  }

  void compute_cluster(NodeApi& api, int cid, const ClusterRole& role) {
    auto packets = std::move(collected_[cid]);
    collected_.erase(cid);
    std::sort(packets.begin(), packets.end(), [](const json& a, const json& b) {
      return a.at("root").get<NodeId>() < b.at("root").get<NodeId>();
    });
    if (packets.size() != role.members.size())
      throw ContractViolation("slocal replay: leader " + key_of(api.env().id) +
                              " gathered " + std::to_string(packets.size()) +
                              " of " + std::to_string(role.members.size()) +
                              " member views");
    json results = json::object();
    for (const auto& packet : packets) {
      NodeId member = packet.at("root").get<NodeId>();
      LocalView view = view_from_knowledge(member, t_, packet.at("k"));
      for (const auto& [key, out] : results.items()) {
        NodeId done = std::stoull(key);
        if (std::binary_search(view.nodes.begin(), view.nodes.end(), done))
          view.annotations[done] = out;
      }
      results[key_of(member)] = alg_->process(view);
    }
    commit(api, results.at(key_of(api.env().id)));
    if (!role.children.empty()) diss_out_[cid] = std::move(results);
  }

  void send_phase_traffic(NodeApi& api, int offset) {
    const NodeEnv& env = api.env();
    int js = phase_of_offset_round(api);
    std::map<NodeId, json> out;
    if (offset < t_)
      for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i) {
        if (!env.neighbor_in_input[i]) continue;
        out[env.comm_neighbors[i]]["f"] = knowledge_;
      }
    if (offset >= t_ && offset < t_ + depths_[js])
      for (auto& [cid, packets] : gather_out_) {
        const ClusterRole& role = roles_.at(cid);
        if (!role.has_parent)
          throw ContractViolation("slocal replay: packets stranded at node " +
                                  key_of(env.id));
        json arr = json::array();
        for (auto& p : packets) arr.push_back(std::move(p));
        out[role.parent]["g"][key_of_cluster(cid)] = std::move(arr);
      }
    if (offset >= t_ + depths_[js] && offset < t_ + 2 * depths_[js])
      for (auto& [cid, result] : diss_out_) {
        const ClusterRole& role = roles_.at(cid);
        for (NodeId child : role.children)
          out[child]["d"][key_of_cluster(cid)] = result;
      }
    for (auto& [w, payload] : out) api.send(w, std::move(payload));
  }

  int phase_of_offset_round(NodeApi& api) const { return phase_of(api.round()); }

  static std::string key_of_cluster(int cid) { return std::to_string(cid); }

  const SlocalAlgorithm* alg_;
  int t_ = 1;
  std::vector<int> depths_;
  std::vector<int> starts_;
  int total_ = 0;
  json knowledge_ = json::object();
  std::map<int, ClusterRole> roles_;
  std::map<int, std::vector<json>> collected_;
  std::map<int, std::vector<json>> gather_out_;
  std::map<int, json> diss_out_;
  json committed_;
  bool has_committed_ = false;
};

class SupportSimProgram : public NodeProgram {
 public:
  explicit SupportSimProgram(SlocalAlgorithm alg) : alg_(std::move(alg)) {}
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<SupportSimAgent>(&alg_);
  }

 private:
  SlocalAlgorithm alg_;
};

// ---------------------------------------------------------------- passive --

class PassiveSimAgent : public NodeAgent {
 public:
  explicit PassiveSimAgent(const SlocalAlgorithm* alg) : alg_(alg) {}

  void init(NodeApi& api) override {
    const json& m = api.env().memory;
    if (!m.is_object())
      throw PreconditionError("passive replay: node " + key_of(api.env().id) +
                              " has no preprocessed state");
    t_ = m.at("t").get<int>();
    palette_ = m.at("palette").get<int>();
    color_ = m.at("color").get<int>();
    total_ = palette_ * t_;
    reset(api);
    flood(api);
  }

  void step(NodeApi& api, const Inbox& inbox) override {
    int r = api.round();
    for (const auto& entry : inbox) merge_knowledge(entry.payload.at("f"));
    if (r % t_ == 0 && color_ == r / t_) {
      LocalView view = view_from_knowledge(api.env().id, t_, knowledge_);
      committed_ = alg_->process(view);
      has_committed_ = true;
    }
    if (r < total_) {
      if (r % t_ == 0) reset(api);
      flood(api);
    } else {
      if (!has_committed_)
        throw ContractViolation("passive replay: node " + key_of(api.env().id) +
                                " reached the end without an output");
      api.halt(committed_);
    }
  }

 private:
  void reset(NodeApi& api) {
    knowledge_ = json::object();
    knowledge_[key_of(api.env().id)] = self_record(api.env(), has_committed_, committed_);
  }

  void merge_knowledge(const json& k) {
    for (const auto& [key, record] : k.items())
      if (!knowledge_.contains(key)) knowledge_[key] = record;
  }

  void flood(NodeApi& api) {
    const NodeEnv& env = api.env();
    for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i)
      if (env.neighbor_in_input[i])
        api.send(env.comm_neighbors[i], json{{"f", knowledge_}});
  }

  const SlocalAlgorithm* alg_;
  int t_ = 1;
  int palette_ = 0;
  int color_ = 0;
  int total_ = 0;
  json knowledge_ = json::object();
  json committed_;
  bool has_committed_ = false;
};

class PassiveSimProgram : public NodeProgram {
 public:
  explicit PassiveSimProgram(SlocalAlgorithm alg) : alg_(std::move(alg)) {}
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<PassiveSimAgent>(&alg_);
  }

 private:
  SlocalAlgorithm alg_;
};

}  // namespace

SupportPlan build_support_plan(const Graph& support, int locality) {
  if (locality < 1) throw ParameterError("slocal replay: locality must be >= 1");
  SupportPlan plan;
  plan.locality = locality;
  Graph base = locality == 1 ? support : power_graph(support, locality);
  plan.decomposition = network_decomposition(base);
  const auto& clusters = plan.decomposition.clusters;
  plan.gather_depth.assign(plan.decomposition.num_colors, 0);

  // Per-cluster shortest-path gather trees in the real support.
  struct Tree {
    std::map<NodeId, NodeId> parent;  // toward the leader; leader absent
    std::map<NodeId, std::vector<NodeId>> children;
    int depth = 0;
  };
  std::vector<Tree> trees(clusters.size());
  for (std::size_t cid = 0; cid < clusters.size(); ++cid) {
    const NdCluster& cluster = clusters[cid];
    std::map<NodeId, NodeId> bfs_parent;
    std::map<NodeId, int> dist;
    dist[cluster.leader] = 0;
    std::deque<NodeId> queue{cluster.leader};
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (NodeId w : support.neighbors(v))
        if (!dist.count(w)) {
          dist[w] = dist[v] + 1;
          bfs_parent[w] = v;
          queue.push_back(w);
        }
    }
    Tree& tree = trees[cid];
    std::set<NodeId> tree_nodes{cluster.leader};
    for (NodeId m : cluster.members) {
      if (!dist.count(m))
        throw ContractViolation("slocal replay: cluster member unreachable in support");
      tree.depth = std::max(tree.depth, dist.at(m));
      NodeId cur = m;
      while (!tree_nodes.count(cur)) {
        tree_nodes.insert(cur);
        NodeId par = bfs_parent.at(cur);
        tree.parent[cur] = par;
        cur = par;
      }
    }
    for (const auto& [child, par] : tree.parent) tree.children[par].push_back(child);
    int color_index = cluster.color - 1;
    plan.gather_depth[color_index] =
        std::max(plan.gather_depth[color_index], tree.depth);
  }

  plan.total_rounds = 0;
  for (int d : plan.gather_depth) plan.total_rounds += locality + 2 * d;

  std::map<NodeId, json> roles;
  for (NodeId v : support.ids()) roles[v] = json::object();
  for (std::size_t cid = 0; cid < clusters.size(); ++cid) {
    const NdCluster& cluster = clusters[cid];
    const Tree& tree = trees[cid];
    std::set<NodeId> tree_nodes{cluster.leader};
    for (const auto& [child, par] : tree.parent) {
      tree_nodes.insert(child);
      tree_nodes.insert(par);
    }
    for (NodeId v : tree_nodes) {
      json role;
      role["color"] = cluster.color;
      role["member"] = std::binary_search(cluster.members.begin(),
                                          cluster.members.end(), v);
      role["leader"] = (v == cluster.leader);
      if (v == cluster.leader) {
        role["parent"] = nullptr;
        role["members"] = cluster.members;
      } else {
        role["parent"] = tree.parent.at(v);
      }
      json children = json::array();
      auto it = tree.children.find(v);
      if (it != tree.children.end()) {
        std::vector<NodeId> sorted_children = it->second;
        std::sort(sorted_children.begin(), sorted_children.end());
        for (NodeId c : sorted_children) children.push_back(c);
      }
      role["children"] = std::move(children);
      roles[v][std::to_string(cid)] = std::move(role);
    }
  }

  json depths = json::array();
  for (int d : plan.gather_depth) depths.push_back(d);
  for (NodeId v : support.ids())
    plan.memory[v] = {{"t", locality}, {"depths", depths}, {"roles", roles.at(v)}};

  for (const NdCluster& cluster : clusters)
    for (NodeId m : cluster.members) plan.effective_order.push_back(m);
  return plan;
}

PassivePlan build_passive_plan(const Graph& support, int locality) {
  if (locality < 1) throw ParameterError("passive replay: locality must be >= 1");
  PassivePlan plan;
  plan.locality = locality;
  plan.coloring = greedy_distance_coloring(support, 2 * locality + 1);
  plan.total_rounds = plan.coloring.palette * locality;
  for (NodeId v : support.ids())
    plan.memory[v] = {{"t", locality},
                      {"palette", plan.coloring.palette},
                      {"color", plan.coloring.color.at(v)}};
  for (int k = 1; k <= plan.coloring.palette; ++k)
    for (const auto& [v, c] : plan.coloring.color)
      if (c == k) plan.effective_order.push_back(v);
  return plan;
}

std::unique_ptr<NodeProgram> make_slocal_support_program(SlocalAlgorithm alg) {
  return std::make_unique<SupportSimProgram>(std::move(alg));
}

std::unique_ptr<NodeProgram> make_slocal_passive_program(SlocalAlgorithm alg) {
  return std::make_unique<PassiveSimProgram>(std::move(alg));
}

SimulationResult supported_slocal_simulation(const SupportedInstance& inst,
                                             const SlocalAlgorithm& alg,
                                             const RunOptions& opts) {
  if (inst.mode() == Mode::PASSIVE)
    throw PreconditionError(
        "support replay needs support-edge communication; use the passive replay");
  SupportPlan plan = build_support_plan(inst.support(), alg.locality);
  auto program = make_slocal_support_program(alg);
  ExecutionTrace trace = run(inst, *program, plan.memory, opts);
  return {trace.outputs, std::move(trace), std::move(plan.effective_order)};
}

SimulationResult passive_slocal_simulation(const SupportedInstance& inst,
                                           const SlocalAlgorithm& alg,
                                           const RunOptions& opts) {
  PassivePlan plan = build_passive_plan(inst.support(), alg.locality);
  auto program = make_slocal_passive_program(alg);
  ExecutionTrace trace = run(inst, *program, plan.memory, opts);
  return {trace.outputs, std::move(trace), std::move(plan.effective_order)};
}

// ------------------------------------------------------------- collapse ----

namespace {

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

long long least_prime_above(long long x) {
  long long p = x + 1;
  while (!is_prime(p)) ++p;
  return p;
}

bool pow_at_least(long long base, long long exponent, unsigned long long m) {
  unsigned __int128 acc = 1;
  for (long long i = 0; i < exponent; ++i) {
    acc *= static_cast<unsigned long long>(base);
    if (acc >= m) return true;
  }
  return acc >= m;
}

struct ReductionOutcome {
  std::vector<std::array<long long, 2>> schedule;
  long long final_palette = 0;
  int rounds = 0;
};

// The palette trajectory of the iterated polynomial reduction starting from
// an id space of size m (given exactly, or by natural log when it exceeds 64
// bits). Stops when a step would not shrink the palette; the tail is the
// one-color-per-round sweep.
ReductionOutcome reduction_for(bool big, unsigned long long exact, long double ln_m,
                               int delta) {
  ReductionOutcome out;
  bool cur_big = big;
  unsigned long long cur = exact;
  long double lnm = ln_m;
  while (true) {
    long long d = 1, p = 0;
    while (true) {
      p = least_prime_above(d * delta);
      bool covers = cur_big
                        ? static_cast<long double>(d + 1) * std::log(static_cast<long double>(p)) >=
                              lnm - 1e-12L
                        : pow_at_least(p, d + 1, cur);
      if (covers) break;
      if (++d > 100000)
        throw ContractViolation("palette reduction: no polynomial degree found");
    }
    unsigned long long next = static_cast<unsigned long long>(p) * p;
    bool shrinks = cur_big ? true : next < cur;
    if (!shrinks) break;
    out.schedule.push_back({d, p});
    cur_big = false;
    cur = next;
    lnm = std::log(static_cast<long double>(cur));
  }
  if (cur_big)
    throw ContractViolation("palette reduction: unbounded sweep");
  out.final_palette = static_cast<long long>(cur);
  long long sweep = out.final_palette - (delta + 1);
  out.rounds = static_cast<int>(out.schedule.size()) +
               static_cast<int>(std::max<long long>(0, sweep));
  return out;
}

constexpr long double kLn2 = 0.69314718055994530942L;

}  // namespace

ThresholdResult collapse_threshold(
    int max_degree,
    const std::function<int(bool, unsigned long long, double)>& rounds_of) {
  if (max_degree < 2)
    throw ParameterError("collapse: max degree must be at least 2");
  bool big = false;
  unsigned long long exact = static_cast<unsigned long long>(max_degree) + 2;
  long double log2v = std::log2(static_cast<long double>(exact));
  int t_prev = -1;
  for (int iter = 0; iter < 300; ++iter) {
    int t = rounds_of(big, exact, static_cast<double>(log2v));
    if (t < 0) throw ContractViolation("collapse: negative round count");
    if (t == t_prev) return {big, exact, static_cast<double>(log2v), t};
    t_prev = t;
    long long e = 2LL * t + 2;
    long double lg = static_cast<long double>(e) *
                     std::log2(static_cast<long double>(max_degree));
    if (lg <= 62.0L) {
      unsigned long long v = 1;
      for (long long i = 0; i < e; ++i) v *= static_cast<unsigned long long>(max_degree);
      exact = v + 1;
      big = false;
      log2v = std::log2(static_cast<long double>(exact));
    } else {
      exact = 0;
      big = true;
      log2v = lg;
    }
  }
  throw ContractViolation("collapse: threshold iteration did not stabilize");
}

CollapsePlan collapse_plan(int max_degree) {
  CollapsePlan plan;
  plan.max_degree = max_degree;
  plan.target = max_degree + 1;
  auto rounds_of = [max_degree](bool big, unsigned long long exact, double log2_m) {
    return reduction_for(big, exact, static_cast<long double>(log2_m) * kLn2,
                         max_degree)
        .rounds;
  };
  plan.threshold = collapse_threshold(max_degree, rounds_of);
  ReductionOutcome red =
      reduction_for(plan.threshold.big, plan.threshold.exact,
                    static_cast<long double>(plan.threshold.log2_value) * kLn2,
                    max_degree);
  plan.schedule = red.schedule;
  plan.final_palette = red.final_palette;
  plan.distance = 2 * plan.threshold.t + 2;
  return plan;
}

int collapse_declared_rounds(int max_degree) {
  CollapsePlan plan = collapse_plan(max_degree);
  long long sweep = plan.final_palette - plan.target;
  return static_cast<int>(plan.schedule.size()) +
         static_cast<int>(std::max<long long>(0, sweep));
}

Memory collapse_preprocess(const Graph& support) {
  CollapsePlan plan = collapse_plan(support.max_degree());
  DistanceColoring phi = greedy_distance_coloring(support, plan.distance);
  if (!plan.threshold.big &&
      static_cast<unsigned long long>(phi.palette) > plan.threshold.exact)
    throw ContractViolation("collapse: substitute id space exceeded the threshold");
  json schedule = json::array();
  for (const auto& [d, p] : plan.schedule) schedule.push_back(json::array({d, p}));
  Memory memory;
  for (NodeId v : support.ids())
    memory[v] = {{"fake_id", phi.color.at(v)},
                 {"schedule", schedule},
                 {"final_palette", plan.final_palette},
                 {"target", plan.target}};
  return memory;
}

namespace {

class CollapseAgent : public NodeAgent {
 public:
  void init(NodeApi& api) override {
    const json& m = api.env().memory;
    if (!m.is_object())
      throw PreconditionError("collapse: node " + key_of(api.env().id) +
                              " has no preprocessed state");
    color_ = m.at("fake_id").get<long long>();
    for (const auto& step : m.at("schedule"))
      schedule_.push_back({step.at(0).get<long long>(), step.at(1).get<long long>()});
    palette_ = m.at("final_palette").get<long long>();
    target_ = m.at("target").get<long long>();
    total_ = static_cast<int>(schedule_.size()) +
             static_cast<int>(std::max<long long>(0, palette_ - target_));
    if (total_ == 0) {
      api.halt(json(color_));
      return;
    }
    send_color(api);
  }

  void step(NodeApi& api, const Inbox& inbox) override {
    int r = api.round();
    std::vector<long long> neighbor_colors;
    for (const auto& entry : inbox)
      neighbor_colors.push_back(entry.payload.at("c").get<long long>());

    if (r == 1) {
      for (long long c : neighbor_colors)
        if (c == color_)
          throw ValidationError("collapse: duplicate substitute identifier within "
                                "distance 1 at node " + key_of(api.env().id));
      std::vector<long long> sorted_ids(neighbor_colors);
      std::sort(sorted_ids.begin(), sorted_ids.end());
      if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
        throw ValidationError("collapse: duplicate substitute identifier within "
                              "distance 2 at node " + key_of(api.env().id));
    }

    if (r <= static_cast<int>(schedule_.size())) {
      apply_reduction(api, schedule_[r - 1], neighbor_colors);
    } else {
      long long k = r - static_cast<long long>(schedule_.size());
      long long sweep_color = palette_ + 1 - k;
      if (color_ == sweep_color) {
        long long fresh = 0;
        for (long long c = 1; c <= target_; ++c)
          if (std::find(neighbor_colors.begin(), neighbor_colors.end(), c) ==
              neighbor_colors.end()) {
            fresh = c;
            break;
          }
        if (fresh == 0)
          throw ContractViolation("collapse: no free color at node " +
                                  key_of(api.env().id));
        color_ = fresh;
      }
    }

    if (r == total_)
      api.halt(json(color_));
    else
      send_color(api);
  }

 private:
  void send_color(NodeApi& api) {
    const NodeEnv& env = api.env();
    for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i)
      if (env.neighbor_in_input[i])
        api.send(env.comm_neighbors[i], json{{"c", color_}});
  }

  // One polynomial step: view the color as a degree-<=d polynomial over
  // GF(p) and move to (a, f(a)) for the smallest evaluation point a that
  // separates us from every neighbor. d*Delta < p makes such a point exist.
  void apply_reduction(NodeApi& api, const std::array<long long, 2>& step,
                       const std::vector<long long>& neighbor_colors) {
    long long d = step[0], p = step[1];
    auto digits = [&](long long color) {
      std::vector<long long> ds(static_cast<std::size_t>(d) + 1, 0);
      long long x = color - 1;
      for (auto& digit : ds) {
        digit = x % p;
        x /= p;
      }
      if (x != 0)
        throw ContractViolation("collapse: color outside the schedule's palette");
      return ds;
    };
    auto eval = [&](const std::vector<long long>& ds, long long a) {
      long long value = 0, power = 1;
      for (long long digit : ds) {
        value = (value + digit * power) % p;
        power = (power * a) % p;
      }
      return value;
    };
    std::vector<long long> mine = digits(color_);
    std::vector<std::vector<long long>> others;
    for (long long c : neighbor_colors) {
      if (c == color_)
        throw ContractViolation("collapse: adjacent equal colors at node " +
                                key_of(api.env().id));
      others.push_back(digits(c));
    }
    for (long long a = 0; a < p; ++a) {
      long long value = eval(mine, a);
      bool clash = false;
      for (const auto& other : others)
        if (eval(other, a) == value) {
          clash = true;
          break;
        }
      if (!clash) {
        color_ = a * p + value + 1;
        return;
      }
    }
    throw ContractViolation("collapse: no separating evaluation point at node " +
                            key_of(api.env().id));
  }

  long long color_ = 0;
  std::vector<std::array<long long, 2>> schedule_;
  long long palette_ = 0;
  long long target_ = 0;
  int total_ = 0;
};

class CollapseProgram : public NodeProgram {
 public:
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<CollapseAgent>();
  }
};

}  // namespace

std::unique_ptr<NodeProgram> make_collapse_program() {
  return std::make_unique<CollapseProgram>();
}

SimulationResult lcl_collapse_solve(const SupportedInstance& inst,
                                    const RunOptions& opts) {
  Memory memory = collapse_preprocess(inst.support());
  auto program = make_collapse_program();
  ExecutionTrace trace = run(inst, *program, memory, opts);
  return {trace.outputs, std::move(trace), {}};
}

}  // namespace supsim
