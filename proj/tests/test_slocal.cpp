#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "supsim/generators.hpp"
#include "supsim/simulate.hpp"
#include "supsim/slocal.hpp"

using namespace supsim;

namespace {

std::vector<NodeId> ascending(const Graph& g) {
  return {g.ids().begin(), g.ids().end()};
}

std::vector<NodeId> shuffled(const Graph& g, unsigned seed) {
  std::vector<NodeId> order = ascending(g);
  std::mt19937 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// direct sequential greedy MIS, no view machinery
std::map<NodeId, json> mis_oracle(const Graph& g, const std::vector<NodeId>& order) {
  std::map<NodeId, json> out;
  for (NodeId v : order) {
    bool blocked = false;
    for (NodeId w : g.neighbors(v)) {
      auto it = out.find(w);
      if (it != out.end() && it->second == "in") blocked = true;
    }
    out[v] = blocked ? "out" : "in";
  }
  return out;
}

std::map<NodeId, json> coloring_oracle(const Graph& g, const std::vector<NodeId>& order) {
  std::map<NodeId, json> out;
  for (NodeId v : order) {
    std::set<int> used;
    for (NodeId w : g.neighbors(v)) {
      auto it = out.find(w);
      if (it != out.end()) used.insert(it->second.get<int>());
    }
    int c = 1;
    while (used.count(c)) ++c;
    out[v] = c;
  }
  return out;
}

// commits the smallest color missing among committed nodes within distance 2
SlocalAlgorithm distance2_coloring() {
  SlocalAlgorithm alg;
  alg.name = "distance2_coloring";
  alg.locality = 2;
  alg.process = [](const LocalView& view) -> json {
    std::set<int> used;
    for (NodeId w : view.nodes) {
      if (w == view.root || view.dist_of(w) > 2) continue;
      auto it = view.annotations.find(w);
      if (it != view.annotations.end()) used.insert(it->second.get<int>());
    }
    int c = 1;
    while (used.count(c)) ++c;
    return c;
  };
  return alg;
}

std::vector<SupportedInstance> instance_corpus() {
  std::vector<SupportedInstance> out;
  std::vector<Graph> supports = {cycle_graph(12), grid_graph(4, 4), petersen_graph(),
                                 random_regular_graph(16, 3, 5), gnp_graph(18, 0.22, 6)};
  std::uint64_t seed = 100;
  for (const Graph& h : supports) {
    out.emplace_back(h, h.edges(), Mode::LOCAL);
    out.emplace_back(h, random_input_mask(h, 0.3, seed++), Mode::SUPPORTED);
    out.emplace_back(h, random_input_mask(h, 0.25, seed++), Mode::PASSIVE);
  }
  return out;
}

void check_replay_exact(const SupportedInstance& inst, const SlocalAlgorithm& alg,
                        const SimulationResult& result) {
  const Graph g = subgraph(inst);
  REQUIRE(result.trace.halted);
  REQUIRE(result.outputs.size() == g.size());
  std::vector<NodeId> sorted_order = result.effective_order;
  std::sort(sorted_order.begin(), sorted_order.end());
  REQUIRE(sorted_order == ascending(g));
  std::map<NodeId, json> replay = slocal_run_sequential(g, alg, result.effective_order);
  CHECK(result.outputs == replay);
}

}  // namespace

TEST_CASE("sequential runs demand a permutation of the node set") {
  Graph g = cycle_graph(6);
  SlocalAlgorithm alg = slocal_greedy_mis();
  std::vector<NodeId> order = ascending(g);
  CHECK_NOTHROW(slocal_run_sequential(g, alg, order));

  std::vector<NodeId> missing(order.begin(), order.end() - 1);
  CHECK_THROWS_AS(slocal_run_sequential(g, alg, missing), ValidationError);
  std::vector<NodeId> duplicated = order;
  duplicated.back() = duplicated.front();
  CHECK_THROWS_AS(slocal_run_sequential(g, alg, duplicated), ValidationError);
  std::vector<NodeId> foreign = order;
  foreign.back() = 99;
  CHECK_THROWS_AS(slocal_run_sequential(g, alg, foreign), ValidationError);

  SlocalAlgorithm bad = slocal_greedy_mis();
  bad.locality = -1;
  CHECK_THROWS_AS(slocal_run_sequential(g, bad, order), ParameterError);
}

TEST_CASE("sequential greedy mis matches the direct recurrence") {
  for (const Graph& g : {cycle_graph(11), grid_graph(3, 5), petersen_graph(),
                         gnp_graph(20, 0.25, 3)}) {
    for (unsigned s : {1u, 2u, 3u}) {
      std::vector<NodeId> order = shuffled(g, s);
      std::map<NodeId, json> got = slocal_run_sequential(g, slocal_greedy_mis(), order);
      CHECK(got == mis_oracle(g, order));
      // independent and maximal
      for (const Edge& e : g.edges())
        CHECK((got.at(e.first) == "in" && got.at(e.second) == "in") == false);
      for (NodeId v : g.ids()) {
        if (got.at(v) == "in") continue;
        bool dominated = false;
        for (NodeId w : g.neighbors(v))
          if (got.at(w) == "in") dominated = true;
        CHECK(dominated);
      }
    }
  }
}

TEST_CASE("sequential greedy coloring matches the direct recurrence") {
  for (const Graph& g : {cycle_graph(9), grid_graph(4, 4), gnp_graph(18, 0.3, 4)}) {
    for (unsigned s : {5u, 6u}) {
      std::vector<NodeId> order = shuffled(g, s);
      std::map<NodeId, json> got =
          slocal_run_sequential(g, slocal_greedy_coloring(), order);
      CHECK(got == coloring_oracle(g, order));
      int palette = 0;
      for (const auto& [v, c] : got) palette = std::max(palette, c.get<int>());
      CHECK(palette <= g.max_degree() + 1);
      for (const Edge& e : g.edges()) CHECK(got.at(e.first) != got.at(e.second));
    }
  }
}

TEST_CASE("support-communication replays are sequentially exact") {
  for (const SupportedInstance& inst : instance_corpus()) {
    if (inst.mode() == Mode::PASSIVE) {
      CHECK_THROWS_AS(supported_slocal_simulation(inst, slocal_greedy_mis()),
                      PreconditionError);
      continue;
    }
    for (const SlocalAlgorithm& alg : {slocal_greedy_mis(), slocal_greedy_coloring()}) {
      SimulationResult result = supported_slocal_simulation(inst, alg);
      check_replay_exact(inst, alg, result);
      SupportPlan plan = build_support_plan(inst.support(), alg.locality);
      CHECK(result.trace.rounds_used == plan.total_rounds);
    }
  }
}

TEST_CASE("input-communication replays are sequentially exact in every mode") {
  for (const SupportedInstance& inst : instance_corpus()) {
    for (const SlocalAlgorithm& alg : {slocal_greedy_mis(), slocal_greedy_coloring()}) {
      SimulationResult result = passive_slocal_simulation(inst, alg);
      check_replay_exact(inst, alg, result);
      PassivePlan plan = build_passive_plan(inst.support(), alg.locality);
      CHECK(plan.total_rounds == plan.coloring.palette * alg.locality);
      CHECK(result.trace.rounds_used == plan.total_rounds);
    }
  }
}

TEST_CASE("locality-2 algorithms replay exactly as well") {
  SlocalAlgorithm alg = distance2_coloring();
  for (const Graph& h : {cycle_graph(10), grid_graph(3, 4)}) {
    SupportedInstance full(h, h.edges(), Mode::SUPPORTED);
    SupportedInstance passive(h, random_input_mask(h, 0.2, 9), Mode::PASSIVE);

    SimulationResult sup = supported_slocal_simulation(full, alg);
    check_replay_exact(full, alg, sup);
    // on the full input the commits form a proper distance-2 coloring
    for (NodeId u : h.ids())
      for (NodeId v : h.ids()) {
        if (u >= v) continue;
        int d = distances_from(h, u)[h.index_of(v)];
        if (d >= 1 && d <= 2) CHECK(sup.outputs.at(u) != sup.outputs.at(v));
      }

    SimulationResult pas = passive_slocal_simulation(passive, alg);
    check_replay_exact(passive, alg, pas);
  }
}

TEST_CASE("support plans keep same-color clusters far apart") {
  for (int locality : {1, 2}) {
    Graph h = grid_graph(4, 5);
    SupportPlan plan = build_support_plan(h, locality);
    CHECK(plan.locality == locality);
    const NetworkDecomposition& nd = plan.decomposition;
    int expected_total = 0;
    REQUIRE(plan.gather_depth.size() == static_cast<std::size_t>(nd.num_colors));
    for (int d : plan.gather_depth) expected_total += locality + 2 * d;
    CHECK(plan.total_rounds == expected_total);
    for (std::size_t i = 0; i < nd.clusters.size(); ++i)
      for (std::size_t j = i + 1; j < nd.clusters.size(); ++j) {
        if (nd.clusters[i].color != nd.clusters[j].color) continue;
        for (NodeId u : nd.clusters[i].members) {
          const std::vector<int> dist = distances_from(h, u);
          for (NodeId v : nd.clusters[j].members) {
            int d = dist[h.index_of(v)];
            CHECK((d == -1 || d > locality));
          }
        }
      }
  }
}

TEST_CASE("passive plans color far enough for disjoint views") {
  for (int locality : {1, 2}) {
    Graph h = grid_graph(4, 4);
    PassivePlan plan = build_passive_plan(h, locality);
    CHECK(plan.locality == locality);
    CHECK(plan.coloring.k == 2 * locality + 1);
    for (NodeId u : h.ids()) {
      const std::vector<int> dist = distances_from(h, u);
      for (NodeId v : h.ids()) {
        if (u >= v || plan.coloring.color.at(u) != plan.coloring.color.at(v)) continue;
        int d = dist[h.index_of(v)];
        CHECK((d == -1 || d > 2 * locality + 1));
      }
    }
  }
}
