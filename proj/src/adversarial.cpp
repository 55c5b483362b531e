#include "supsim/adversarial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <tuple>

#include "supsim/generators.hpp"
#include "supsim/mis.hpp"
#include "supsim/orientation.hpp"
#include "supsim/parallel.hpp"
#include "supsim/verify.hpp"

namespace supsim {

namespace {

// Ports index the node's sorted input-neighbor list, which is exactly the
// flagged subsequence of comm_neighbors.
json ports_where(const NodeEnv& env, const std::function<bool(NodeId)>& pred) {
  json ports = json::array();
  int port = 0;
  for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i) {
    if (!env.neighbor_in_input[i]) continue;
    if (pred(env.comm_neighbors[i])) ports.push_back(port);
    ++port;
  }
  return ports;
}

json higher_id_ports(const NodeEnv& env) {
  return ports_where(env, [&](NodeId w) { return w > env.id; });
}

class OrientHigherIdAgent : public NodeAgent {
 public:
  void init(NodeApi& api) override {
    api.halt(json{{"out_ports", higher_id_ports(api.env())}});
  }
  void step(NodeApi&, const Inbox&) override {}
};

class OrientHigherIdProgram : public NodeProgram {
 public:
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<OrientHigherIdAgent>();
  }
};

class WaitLowerIdAgent : public NodeAgent {
 public:
  explicit WaitLowerIdAgent(int rounds) : rounds_(rounds) {}

  void init(NodeApi& api) override {
    if (rounds_ == 0) conclude(api);
  }

  void step(NodeApi& api, const Inbox&) override {
    if (api.round() >= rounds_) conclude(api);
  }

 private:
  void conclude(NodeApi& api) {
    json ports = json::array();
    bool has_input_neighbor = false;
    for (bool f : api.env().neighbor_in_input) has_input_neighbor |= f;
    if (has_input_neighbor) ports.push_back(0);  // lowest id = first port
    api.halt(json{{"out_ports", ports}});
  }

  int rounds_;
};

class WaitLowerIdProgram : public NodeProgram {
 public:
  explicit WaitLowerIdProgram(int rounds) : rounds_(rounds) {}
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<WaitLowerIdAgent>(rounds_);
  }

 private:
  int rounds_;
};

class GatherOrientAgent : public NodeAgent {
 public:
  explicit GatherOrientAgent(int rounds) : rounds_(rounds) {}

  void init(NodeApi& api) override {
    const NodeEnv& env = api.env();
    json adj = json::array();
    json flags = json::array();
    for (std::size_t i = 0; i < env.comm_neighbors.size(); ++i) {
      adj.push_back(env.comm_neighbors[i]);
      flags.push_back(static_cast<bool>(env.neighbor_in_input[i]));
    }
    knowledge_[std::to_string(env.id)] = json{{"adj", adj}, {"flags", flags}};
    if (rounds_ == 0) {
      conclude(api);
      return;
    }
    broadcast(api);
  }

  void step(NodeApi& api, const Inbox& inbox) override {
    for (const InboxEntry& entry : inbox)
      for (const auto& item : entry.payload.items())
        knowledge_[item.key()] = item.value();
    if (api.round() >= rounds_) {
      conclude(api);
      return;
    }
    broadcast(api);
  }

 private:
  void broadcast(NodeApi& api) {
    json payload(knowledge_);
    for (NodeId w : api.env().comm_neighbors) api.send(w, payload);
  }

  // Walk my input component through gathered records. Complete knowledge
  // yields the same component graph at every member, so the deterministic
  // global routine orients it consistently; anything less falls back to the
  // higher-id rule (and earns its rejection).
  void conclude(NodeApi& api) {
    const NodeEnv& env = api.env();
    std::map<NodeId, std::vector<NodeId>> comp_adj;
    std::deque<NodeId> queue{env.id};
    std::set<NodeId> seen{env.id};
    bool complete = true;
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      auto it = knowledge_.find(std::to_string(v));
      if (it == knowledge_.end()) {
        complete = false;
        continue;
      }
      const json& adj = it->second.at("adj");
      const json& flags = it->second.at("flags");
      std::vector<NodeId>& out = comp_adj[v];
      for (std::size_t i = 0; i < adj.size(); ++i) {
        if (!flags.at(i).get<bool>()) continue;
        NodeId w = adj.at(i).get<NodeId>();
        out.push_back(w);
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    if (!complete) {
      api.halt(json{{"out_ports", higher_id_ports(env)}});
      return;
    }
    std::vector<NodeId> ids(seen.begin(), seen.end());
    std::vector<Edge> edges;
    for (const auto& [v, nbrs] : comp_adj)
      for (NodeId w : nbrs)
        if (v < w) edges.push_back(Edge{v, w});
    OrientationResult orient = global_sinkless_orientation(Graph(ids, edges));
    const std::vector<NodeId>& heads = orient.out_edges.at(env.id);
    json ports = ports_where(env, [&](NodeId w) {
      return std::binary_search(heads.begin(), heads.end(), w);
    });
    api.halt(json{{"out_ports", ports}});
  }

  int rounds_;
  std::map<std::string, json> knowledge_;
};

class GatherOrientProgram : public NodeProgram {
 public:
  explicit GatherOrientProgram(int rounds) : rounds_(rounds) {}
  std::unique_ptr<NodeAgent> make_agent(const NodeEnv&) const override {
    return std::make_unique<GatherOrientAgent>(rounds_);
  }

 private:
  int rounds_;
};

std::set<Edge> normalized_cut(const Graph& base, const std::set<Edge>& cut) {
  std::set<Edge> norm;
  for (const Edge& e : cut) {
    Edge c = make_edge(e.first, e.second);
    if (!base.has_edge(c.first, c.second))
      throw ContainmentError("Cut edge (" + std::to_string(c.first) + "," +
                             std::to_string(c.second) + ") is not a base edge");
    norm.insert(c);
  }
  return norm;
}

}  // namespace

NodeId SinklessFamily::node(int path, int pos) const {
  if (path < 1 || path > 6 || pos < 1 || pos > path_length)
    throw ParameterError("Path coordinate (" + std::to_string(path) + "," +
                         std::to_string(pos) + ") is out of range");
  return static_cast<NodeId>(path - 1) * static_cast<NodeId>(path_length) +
         static_cast<NodeId>(pos);
}

SinklessFamily build_sinkless_family(int path_length) {
  if (path_length < 4 || path_length % 2 != 0)
    throw ParameterError("Path length must be even and at least 4, got " +
                         std::to_string(path_length));
  SinklessFamily fam;
  fam.path_length = path_length;
  const int n = path_length;

  std::vector<NodeId> ids;
  std::vector<Edge> path_edges;
  for (int p = 1; p <= 6; ++p) {
    for (int j = 1; j <= n; ++j) ids.push_back(fam.node(p, j));
    for (int j = 1; j < n; ++j)
      path_edges.push_back(make_edge(fam.node(p, j), fam.node(p, j + 1)));
  }
  auto head = [&](int p) { return fam.node(p, 1); };
  auto tail = [&](int p) { return fam.node(p, n); };

  // Bridges both inputs keep: the tail ends of cycles 1+2 and 3+4, and the
  // untouched cycle 5+6.
  std::vector<Edge> shared = {make_edge(tail(1), tail(2)), make_edge(tail(3), tail(4)),
                              make_edge(head(5), head(6)), make_edge(tail(5), tail(6))};
  // Head bridges closing cycles 1+2 and 3+4 ...
  std::vector<Edge> only_a = {make_edge(head(1), head(2)), make_edge(head(3), head(4))};
  // ... or re-wired to chain paths 2,3,4,1 into one cycle.
  std::vector<Edge> only_b = {make_edge(head(2), head(3)), make_edge(head(4), head(1))};

  std::vector<Edge> support_edges = path_edges;
  support_edges.insert(support_edges.end(), shared.begin(), shared.end());
  support_edges.insert(support_edges.end(), only_a.begin(), only_a.end());
  support_edges.insert(support_edges.end(), only_b.begin(), only_b.end());
  std::sort(support_edges.begin(), support_edges.end());
  fam.support = Graph(ids, support_edges);

  fam.input_a = path_edges;
  fam.input_a.insert(fam.input_a.end(), shared.begin(), shared.end());
  fam.input_a.insert(fam.input_a.end(), only_a.begin(), only_a.end());
  std::sort(fam.input_a.begin(), fam.input_a.end());

  fam.input_b = path_edges;
  fam.input_b.insert(fam.input_b.end(), shared.begin(), shared.end());
  fam.input_b.insert(fam.input_b.end(), only_b.begin(), only_b.end());
  std::sort(fam.input_b.begin(), fam.input_b.end());

  fam.probe_a = fam.node(2, n / 2);
  fam.probe_b = fam.node(4, n / 2);
  fam.critical_radius = n / 2;
  return fam;
}

std::unique_ptr<NodeProgram> make_orient_higher_id_program() {
  return std::make_unique<OrientHigherIdProgram>();
}

std::unique_ptr<NodeProgram> make_wait_lower_id_program(int rounds) {
  if (rounds < 0)
    throw ParameterError("Round budget must be nonnegative, got " + std::to_string(rounds));
  return std::make_unique<WaitLowerIdProgram>(rounds);
}

std::unique_ptr<NodeProgram> make_gather_orient_program(int rounds) {
  if (rounds < 0)
    throw ParameterError("Round budget must be nonnegative, got " + std::to_string(rounds));
  return std::make_unique<GatherOrientProgram>(rounds);
}

json IndistinguishabilityReport::to_json() const {
  json progs = json::array();
  for (const ProgramOutcome& oc : programs) {
    progs.push_back(json{{"name", oc.name},
                         {"halted_a", oc.halted_a},
                         {"halted_b", oc.halted_b},
                         {"accepted_a", oc.accepted_a},
                         {"accepted_b", oc.accepted_b},
                         {"probe_outputs_equal", oc.probe_outputs_equal}});
  }
  return json{{"radius", radius},
              {"views_identical", views_identical},
              {"programs", progs}};
}

IndistinguishabilityReport sinkless_indistinguishability(
    const SinklessFamily& fam, int radius,
    const std::vector<std::pair<std::string, const NodeProgram*>>& programs,
    const RunOptions& opts) {
  if (radius < 0)
    throw ParameterError("Radius must be nonnegative, got " + std::to_string(radius));
  if (radius >= fam.critical_radius)
    throw PreconditionError("Radius " + std::to_string(radius) +
                            " is not below the critical radius " +
                            std::to_string(fam.critical_radius));

  SupportedInstance on_a(fam.support, fam.input_a, Mode::SUPPORTED);
  SupportedInstance on_b(fam.support, fam.input_b, Mode::SUPPORTED);

  IndistinguishabilityReport report;
  report.radius = radius;
  Respect strict{/*ids=*/true, /*input_flags=*/true, /*annotations=*/false};
  report.views_identical = true;
  for (NodeId probe : {fam.probe_a, fam.probe_b}) {
    LocalView va = extract_view(on_a, probe, radius, ViewOver::support);
    LocalView vb = extract_view(on_b, probe, radius, ViewOver::support);
    if (!views_isomorphic(va, vb, strict).isomorphic) report.views_identical = false;
  }

  LclProblem problem = lcl_sinkless_orientation();
  Graph graph_a = subgraph(on_a);
  Graph graph_b = subgraph(on_b);
  for (const auto& [name, program] : programs) {
    if (program == nullptr) throw ParameterError("Program '" + name + "' is null");
    ProgramOutcome oc;
    oc.name = name;
    RunOptions ro = opts;
    ro.max_rounds = std::max(radius, 1);
    ExecutionTrace ta = run(on_a, *program, Memory{}, ro);
    ExecutionTrace tb = run(on_b, *program, Memory{}, ro);
    oc.halted_a = ta.halted;
    oc.halted_b = tb.halted;
    if (ta.halted)
      oc.accepted_a = check_labeling(graph_a, problem, labeling_from_outputs(ta.outputs)).accepted;
    if (tb.halted)
      oc.accepted_b = check_labeling(graph_b, problem, labeling_from_outputs(tb.outputs)).accepted;
    oc.probe_outputs_equal =
        ta.halted && tb.halted &&
        ta.outputs.at(fam.probe_a) == tb.outputs.at(fam.probe_a) &&
        ta.outputs.at(fam.probe_b) == tb.outputs.at(fam.probe_b);
    report.programs.push_back(oc);
  }
  return report;
}

LiftFamily build_double_cover(const Graph& base) {
  if (base.size() == 0) throw ParameterError("Base graph is empty");
  std::size_t d = base.degree(base.ids().front());
  for (NodeId v : base.ids())
    if (base.degree(v) != d)
      throw ParameterError("Base graph must be regular; node " + std::to_string(v) +
                           " has degree " + std::to_string(base.degree(v)) +
                           " instead of " + std::to_string(d));
  if (d == 0) throw ParameterError("Base graph must have positive degree");

  std::vector<NodeId> ids;
  for (NodeId v : base.ids()) {
    ids.push_back(lift_id(v, 0));
    ids.push_back(lift_id(v, 1));
  }
  std::vector<Edge> edges;
  for (const Edge& e : base.edges()) {
    edges.push_back(make_edge(lift_id(e.first, 0), lift_id(e.second, 0)));
    edges.push_back(make_edge(lift_id(e.first, 1), lift_id(e.second, 1)));
    edges.push_back(make_edge(lift_id(e.first, 0), lift_id(e.second, 1)));
    edges.push_back(make_edge(lift_id(e.first, 1), lift_id(e.second, 0)));
  }
  std::sort(edges.begin(), edges.end());

  LiftFamily fam;
  fam.base = base;
  fam.degree = static_cast<int>(d);
  fam.support = Graph(ids, edges);
  return fam;
}

std::vector<Edge> lift_input(const LiftFamily& fam, const std::set<Edge>& cut) {
  std::set<Edge> norm = normalized_cut(fam.base, cut);
  std::vector<Edge> input;
  for (const Edge& e : fam.base.edges()) {
    if (norm.count(e) != 0) {
      input.push_back(make_edge(lift_id(e.first, 0), lift_id(e.second, 1)));
      input.push_back(make_edge(lift_id(e.first, 1), lift_id(e.second, 0)));
    } else {
      input.push_back(make_edge(lift_id(e.first, 0), lift_id(e.second, 0)));
      input.push_back(make_edge(lift_id(e.first, 1), lift_id(e.second, 1)));
    }
  }
  std::sort(input.begin(), input.end());
  return input;
}

std::set<Edge> random_cut(const Graph& base, std::uint64_t seed) {
  RandomStream stream(derive_seed(seed, base.size(), base.edge_count()));
  std::set<Edge> cut;
  for (const Edge& e : base.edges())
    if (stream.next_bool()) cut.insert(e);
  return cut;
}

bool verify_cover_isomorphisms(const LiftFamily& fam, const std::set<Edge>& cut) {
  auto swapped = [](NodeId x) { return x ^ 1ull; };
  const Graph& support = fam.support;
  for (const Edge& e : support.edges())
    if (!support.has_edge(swapped(e.first), swapped(e.second))) return false;

  std::vector<Edge> input = lift_input(fam, cut);
  Graph lifted(support.ids(), input);
  for (const Edge& e : lifted.edges())
    if (!lifted.has_edge(swapped(e.first), swapped(e.second))) return false;

  // Covering projection: halving each copy's input neighbors must restore
  // the base adjacency exactly (one lift neighbor per base neighbor).
  for (NodeId b : fam.base.ids()) {
    auto base_span = fam.base.neighbors(b);
    std::vector<NodeId> expected(base_span.begin(), base_span.end());
    for (int c = 0; c < 2; ++c) {
      std::vector<NodeId> projected;
      for (NodeId w : lifted.neighbors(lift_id(b, c))) projected.push_back(w / 2);
      std::sort(projected.begin(), projected.end());
      if (projected != expected) return false;
    }
  }

  if (support.size() <= 32) {
    std::vector<Edge> mapped;
    for (const Edge& e : input) mapped.push_back(make_edge(swapped(e.first), swapped(e.second)));
    std::sort(mapped.begin(), mapped.end());
    if (!graphs_isomorphic(lifted, Graph(support.ids(), mapped)).isomorphic) return false;
  }
  return true;
}

std::map<NodeId, NodeId> parity_bijection(const LiftFamily& fam, NodeId base_node,
                                          int radius, const std::set<Edge>& cut) {
  if (radius < 0)
    throw ParameterError("Radius must be nonnegative, got " + std::to_string(radius));
  if (!fam.base.has_node(base_node))
    throw LookupError("Node " + std::to_string(base_node) + " is not a base node");
  std::optional<int> g = girth(fam.base);
  if (g && *g <= 2 * radius + 1)
    throw PreconditionError("Base girth " + std::to_string(*g) +
                            " does not exceed 2*" + std::to_string(radius) +
                            "+1, so radius-" + std::to_string(radius) +
                            " base paths are not unique");
  std::set<Edge> norm = normalized_cut(fam.base, cut);

  // Unique-path parity via BFS (the girth bound makes the ball a tree).
  std::map<NodeId, int> parity{{base_node, 0}};
  std::map<NodeId, int> depth{{base_node, 0}};
  std::deque<NodeId> queue{base_node};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    if (depth.at(v) == radius) continue;
    for (NodeId w : fam.base.neighbors(v)) {
      if (parity.count(w) != 0) continue;
      parity[w] = parity.at(v) ^ (norm.count(make_edge(v, w)) != 0 ? 1 : 0);
      depth[w] = depth.at(v) + 1;
      queue.push_back(w);
    }
  }

  std::map<NodeId, NodeId> phi;
  for (const auto& [v, p] : parity) {
    phi[lift_id(v, 0)] = lift_id(v, p);
    phi[lift_id(v, 1)] = lift_id(v, 1 - p);
  }
  return phi;
}

bool parity_views_equal(const LiftFamily& fam, NodeId base_node, int radius,
                        const std::set<Edge>& cut) {
  SupportedInstance under_cut(fam.support, lift_input(fam, cut), Mode::SUPPORTED);
  SupportedInstance under_empty(fam.support, lift_input(fam, {}), Mode::SUPPORTED);
  NodeId root = lift_id(base_node, 0);
  LocalView vc = extract_view(under_cut, root, radius, ViewOver::support);
  LocalView ve = extract_view(under_empty, root, radius, ViewOver::support);
  std::map<NodeId, NodeId> phi = parity_bijection(fam, base_node, radius, cut);

  std::map<NodeId, int> mapped_dist;
  for (std::size_t i = 0; i < vc.nodes.size(); ++i) {
    auto it = phi.find(vc.nodes[i]);
    if (it == phi.end()) return false;
    mapped_dist[it->second] = vc.dist[i];
  }
  if (mapped_dist.size() != ve.nodes.size()) return false;
  for (std::size_t i = 0; i < ve.nodes.size(); ++i) {
    auto it = mapped_dist.find(ve.nodes[i]);
    if (it == mapped_dist.end() || it->second != ve.dist[i]) return false;
  }

  auto flag_of = [](const ViewEdge& e) {
    return e.in_input.has_value() ? (*e.in_input ? 1 : 0) : -1;
  };
  std::vector<std::tuple<NodeId, NodeId, int>> mapped_edges, empty_edges;
  for (const ViewEdge& e : vc.edges) {
    Edge m = make_edge(phi.at(e.a), phi.at(e.b));
    mapped_edges.emplace_back(m.first, m.second, flag_of(e));
  }
  for (const ViewEdge& e : ve.edges) empty_edges.emplace_back(e.a, e.b, flag_of(e));
  std::sort(mapped_edges.begin(), mapped_edges.end());
  std::sort(empty_edges.begin(), empty_edges.end());
  return mapped_edges == empty_edges;
}

json DistributionReport::to_json() const {
  return json{{"cuts", cuts}, {"base_nodes", base_nodes}, {"equal", equal}};
}

DistributionReport view_distribution_equality(const LiftFamily& fam,
                                              const std::vector<NodeId>& base_nodes,
                                              int radius,
                                              const std::vector<Edge>& cut_universe,
                                              bool parallel) {
  if (radius < 0)
    throw ParameterError("Radius must be nonnegative, got " + std::to_string(radius));
  if (cut_universe.size() > 20)
    throw CapacityError("Cut universe of " + std::to_string(cut_universe.size()) +
                        " edges exceeds the enumeration cap of 20");
  if (base_nodes.size() > 20)
    throw CapacityError("Probe list of " + std::to_string(base_nodes.size()) +
                        " nodes exceeds the cap of 20");
  std::vector<Edge> universe;
  std::set<Edge> dedupe;
  for (const Edge& e : cut_universe) {
    Edge c = make_edge(e.first, e.second);
    if (!fam.base.has_edge(c.first, c.second))
      throw ContainmentError("Universe edge (" + std::to_string(c.first) + "," +
                             std::to_string(c.second) + ") is not a base edge");
    if (!dedupe.insert(c).second)
      throw ParameterError("Universe lists edge (" + std::to_string(c.first) + "," +
                           std::to_string(c.second) + ") twice");
    universe.push_back(c);
  }
  for (NodeId v : base_nodes)
    if (!fam.base.has_node(v))
      throw LookupError("Node " + std::to_string(v) + " is not a base node");

  const std::size_t total = std::size_t{1} << universe.size();
  const std::size_t probes = base_nodes.size();
  std::vector<std::vector<std::string>> copy0(probes, std::vector<std::string>(total));
  std::vector<std::vector<std::string>> copy1(probes, std::vector<std::string>(total));
  Respect shape{/*ids=*/false, /*input_flags=*/true, /*annotations=*/false};

  parallel_for_index(total, parallel, [&](std::size_t mask) {
    std::set<Edge> cut;
    for (std::size_t j = 0; j < universe.size(); ++j)
      if ((mask >> j) & 1) cut.insert(universe[j]);
    SupportedInstance inst(fam.support, lift_input(fam, cut), Mode::SUPPORTED);
    for (std::size_t i = 0; i < probes; ++i) {
      LocalView v0 = extract_view(inst, lift_id(base_nodes[i], 0), radius, ViewOver::support);
      LocalView v1 = extract_view(inst, lift_id(base_nodes[i], 1), radius, ViewOver::support);
      copy0[i][mask] = canonical_view_string(v0, shape);
      copy1[i][mask] = canonical_view_string(v1, shape);
    }
  });

  DistributionReport report;
  report.cuts = total;
  report.base_nodes = probes;
  report.equal = true;
  for (std::size_t i = 0; i < probes; ++i) {
    std::sort(copy0[i].begin(), copy0[i].end());
    std::sort(copy1[i].begin(), copy1[i].end());
    if (copy0[i] != copy1[i]) report.equal = false;
  }
  return report;
}

json MisGapWitness::to_json() const {
  return json{{"opt_straight", opt_straight}, {"opt_crossing", opt_crossing},
              {"mean_straight", mean_straight}, {"mean_crossing", mean_crossing},
              {"sigma", sigma},                 {"z", z},
              {"samples", samples}};
}

MisGapWitness mis_gap_witness(const LiftFamily& fam, int iterations, int samples,
                              std::uint64_t seed) {
  if (samples < 2)
    throw ParameterError("Need at least 2 samples, got " + std::to_string(samples));

  std::set<Edge> full_cut(fam.base.edges().begin(), fam.base.edges().end());
  SupportedInstance straight(fam.support, lift_input(fam, {}), Mode::SUPPORTED);
  SupportedInstance crossing(fam.support, lift_input(fam, full_cut), Mode::SUPPORTED);

  MisGapWitness witness;
  witness.samples = samples;
  witness.opt_straight = brute_force_mis(subgraph(straight)).size();
  witness.opt_crossing = brute_force_mis(subgraph(crossing)).size();

  auto measure = [&](const SupportedInstance& inst, std::uint64_t tag) {
    double sum = 0.0, sum_sq = 0.0;
    for (int s = 0; s < samples; ++s) {
      RunOptions ro;
      ro.seed = derive_seed(seed, tag, static_cast<std::uint64_t>(s));
      MisRunResult res = random_priority_mis(inst, iterations, ro);
      double size = 0.0;
      for (const auto& [v, out] : res.outputs)
        if (out == json("in")) size += 1.0;
      sum += size;
      sum_sq += size * size;
    }
    double mean = sum / samples;
    double variance = (sum_sq - samples * mean * mean) / (samples - 1);
    return std::pair<double, double>(mean, std::max(variance, 0.0));
  };

  auto [mean_s, var_s] = measure(straight, 0);
  auto [mean_c, var_c] = measure(crossing, 1);
  witness.mean_straight = mean_s;
  witness.mean_crossing = mean_c;
  witness.sigma = std::sqrt(var_s / samples + var_c / samples);
  double gap = std::fabs(mean_s - mean_c);
  if (witness.sigma > 0.0)
    witness.z = gap / witness.sigma;
  else
    witness.z = gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return witness;
}

Graph high_girth_base(int degree, int min_girth, std::uint64_t seed) {
  if (degree < 2)
    throw ParameterError("Degree must be at least 2, got " + std::to_string(degree));
  int floor_girth = std::max(min_girth, 3);
  if (degree == 2) return cycle_graph(static_cast<std::size_t>(floor_girth));
  if (degree == 3 && floor_girth <= 5) return petersen_graph();
  for (std::size_t n = static_cast<std::size_t>(degree) + 1; n <= 20; ++n) {
    if ((n * static_cast<std::size_t>(degree)) % 2 != 0) continue;
    try {
      return random_regular_min_girth(n, static_cast<std::size_t>(degree), floor_girth,
                                      derive_seed(seed, n));
    } catch (const SimError&) {
      // too few nodes for this girth; widen the search
    }
  }
  throw LookupError("No regular base of degree " + std::to_string(degree) +
                    " with girth at least " + std::to_string(floor_girth) +
                    " was found within 20 nodes");
}

}  // namespace supsim
