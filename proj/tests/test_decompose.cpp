#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "supsim/decompose.hpp"
#include "supsim/generators.hpp"

using namespace supsim;

namespace {

std::vector<Graph> test_corpus() {
  return {cycle_graph(16),          path_graph(9),         grid_graph(4, 5),
          petersen_graph(),         clique_graph(8),       gnp_graph(26, 0.12, 5),
          gnp_graph(26, 0.3, 6),    random_regular_graph(18, 3, 7),
          random_pseudoforest(22, 8).graph};
}

int hop_distance(const Graph& g, NodeId u, NodeId v) {
  return distances_from(g, u)[g.index_of(v)];
}

}  // namespace

TEST_CASE("distance colorings are proper at their distance") {
  for (const Graph& g : test_corpus()) {
    for (int k : {1, 2, 3}) {
      DistanceColoring dc = greedy_distance_coloring(g, k);
      CHECK(dc.k == k);
      REQUIRE(dc.color.size() == g.size());
      int max_used = 0;
      for (const auto& [v, c] : dc.color) {
        CHECK(c >= 1);
        max_used = std::max(max_used, c);
      }
      CHECK(dc.palette == max_used);
      // Delta^k + 1 palette bound
      double bound = std::pow(static_cast<double>(g.max_degree()),
                              static_cast<double>(k)) + 1.0;
      CHECK(static_cast<double>(dc.palette) <= bound);
      for (NodeId u : g.ids())
        for (NodeId v : g.ids()) {
          if (u >= v) continue;
          int d = hop_distance(g, u, v);
          if (d >= 1 && d <= k) CHECK(dc.color.at(u) != dc.color.at(v));
        }
    }
  }
}

TEST_CASE("distance colorings round-trip through json") {
  DistanceColoring dc = greedy_distance_coloring(grid_graph(3, 4), 2);
  DistanceColoring back = DistanceColoring::from_json(dc.to_json());
  CHECK(back.k == dc.k);
  CHECK(back.palette == dc.palette);
  CHECK(back.color == dc.color);
}

TEST_CASE("ball carving partitions with the promised boundary ratio") {
  for (const Graph& g : test_corpus()) {
    for (double eps : {0.25, 0.5, 1.0}) {
      BallClustering bc = ball_growing(g, eps);
      CHECK(bc.epsilon == eps);

      std::set<NodeId> covered;
      for (std::size_t ci = 0; ci < bc.clusters.size(); ++ci) {
        const BallCluster& c = bc.clusters[ci];
        // members = inner + boundary, disjoint, all new
        std::set<NodeId> inner(c.inner.begin(), c.inner.end());
        std::set<NodeId> boundary(c.boundary.begin(), c.boundary.end());
        CHECK(inner.size() + boundary.size() == c.members.size());
        CHECK(std::is_sorted(c.members.begin(), c.members.end()));
        for (NodeId v : c.members) {
          CHECK((inner.count(v) + boundary.count(v)) == 1);
          CHECK(covered.insert(v).second);
          CHECK(bc.cluster_of.at(v) == ci);
        }
        // growth stalled: |B_{r+1}| < (1+eps) |B_r|
        CHECK(static_cast<double>(c.members.size()) <
              (1.0 + eps) * static_cast<double>(c.inner.size()));
        CHECK(inner.count(c.center) == 1);
      }
      CHECK(covered.size() == g.size());

      // radius bound: stalling must happen within log_{1+eps} n steps
      double limit = std::log(static_cast<double>(g.size())) / std::log1p(eps) + 1.0;
      for (const BallCluster& c : bc.clusters)
        CHECK(static_cast<double>(c.radius) <= limit);
    }
  }
}

TEST_CASE("carving a clique stalls after one hop") {
  BallClustering bc = ball_growing(clique_graph(10), 1.0);
  REQUIRE(bc.clusters.size() == 1);
  CHECK(bc.clusters[0].center == 1);
  CHECK(bc.clusters[0].radius == 1);
  CHECK(bc.clusters[0].members.size() == 10);
  CHECK(bc.clusters[0].boundary.empty());
}

TEST_CASE("isolated nodes become radius-zero singletons") {
  Graph g({1, 2, 3}, {{1, 2}});
  BallClustering bc = ball_growing(g, 0.5);
  const BallCluster& c = bc.clusters.at(bc.cluster_of.at(3));
  CHECK(c.center == 3);
  CHECK(c.radius == 0);
  CHECK(c.members == std::vector<NodeId>{3});
  CHECK(c.boundary.empty());
}

TEST_CASE("ball clusterings round-trip through json") {
  BallClustering bc = ball_growing(gnp_graph(20, 0.2, 9), 0.5);
  BallClustering back = BallClustering::from_json(bc.to_json());
  CHECK(back.epsilon == bc.epsilon);
  REQUIRE(back.clusters.size() == bc.clusters.size());
  for (std::size_t i = 0; i < bc.clusters.size(); ++i) {
    CHECK(back.clusters[i].center == bc.clusters[i].center);
    CHECK(back.clusters[i].members == bc.clusters[i].members);
    CHECK(back.clusters[i].boundary == bc.clusters[i].boundary);
  }
  CHECK(back.cluster_of == bc.cluster_of);
}

TEST_CASE("network decompositions separate same-color clusters") {
  for (const Graph& g : test_corpus()) {
    NetworkDecomposition nd = network_decomposition(g);
    CHECK(nd.num_colors >= 1);
    for (std::size_t i = 1; i < nd.clusters.size(); ++i) {
      auto key = [](const NdCluster& c) { return std::pair(c.color, c.leader); };
      CHECK(key(nd.clusters[i - 1]) < key(nd.clusters[i]));
    }

    std::set<NodeId> covered;
    for (std::size_t ci = 0; ci < nd.clusters.size(); ++ci) {
      const NdCluster& c = nd.clusters[ci];
      CHECK(c.color >= 1);
      CHECK(c.color <= nd.num_colors);
      REQUIRE_FALSE(c.members.empty());
      CHECK(c.leader == c.members.front());
      CHECK(std::is_sorted(c.members.begin(), c.members.end()));
      for (NodeId v : c.members) {
        CHECK(covered.insert(v).second);
        CHECK(nd.cluster_of.at(v) == ci);
      }
      // weak diameter is measured in g, against the distance oracle
      int wd = 0;
      for (NodeId u : c.members)
        for (NodeId v : c.members)
          if (u < v) wd = std::max(wd, hop_distance(g, u, v));
      CHECK(c.weak_diameter == wd);
    }
    CHECK(covered.size() == g.size());

    // no edge joins two distinct clusters of the same color
    for (const Edge& e : g.edges()) {
      std::size_t a = nd.cluster_of.at(e.first), b = nd.cluster_of.at(e.second);
      if (a != b) CHECK(nd.clusters[a].color != nd.clusters[b].color);
    }

    // logarithmic color and weak-diameter guarantees
    double log_n = std::log2(static_cast<double>(g.size()) + 1.0);
    CHECK(static_cast<double>(nd.num_colors) <= log_n + 2.0);
    for (const NdCluster& c : nd.clusters)
      CHECK(static_cast<double>(c.weak_diameter) <= 6.0 * log_n + 6.0);
  }
}

TEST_CASE("network decompositions round-trip through json") {
  NetworkDecomposition nd = network_decomposition(gnp_graph(24, 0.18, 10));
  NetworkDecomposition back = NetworkDecomposition::from_json(nd.to_json());
  CHECK(back.num_colors == nd.num_colors);
  REQUIRE(back.clusters.size() == nd.clusters.size());
  for (std::size_t i = 0; i < nd.clusters.size(); ++i) {
    CHECK(back.clusters[i].color == nd.clusters[i].color);
    CHECK(back.clusters[i].leader == nd.clusters[i].leader);
    CHECK(back.clusters[i].members == nd.clusters[i].members);
    CHECK(back.clusters[i].weak_diameter == nd.clusters[i].weak_diameter);
  }
}

TEST_CASE("degeneracy coloring stays within degeneracy + 1 colors") {
  for (const Graph& g : test_corpus()) {
    DegeneracyColoring dc = degeneracy_coloring(g);
    CHECK(dc.palette <= dc.degeneracy + 1);
    for (const Edge& e : g.edges()) CHECK(dc.color.at(e.first) != dc.color.at(e.second));
  }
  // a pseudoforest has degeneracy at most 2
  for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
    PseudoforestSample s = random_pseudoforest(25, seed);
    DegeneracyColoring dc = degeneracy_coloring(s.graph);
    CHECK(dc.degeneracy <= 2);
    CHECK(dc.palette <= 3);
  }
  DegeneracyColoring tree = degeneracy_coloring(path_graph(8));
  CHECK(tree.degeneracy == 1);
  CHECK(tree.palette <= 2);
}

TEST_CASE("each color reduction step strips one color in two rounds") {
  for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
    PseudoforestSample s = random_pseudoforest(24, seed);
    // start from a proper 6-coloring via distance-1 greedy on ids (palette
    // may be smaller; pad x down from 6 anyway)
    DistanceColoring start = greedy_distance_coloring(s.graph, 1);
    REQUIRE(start.palette <= 6);
    std::map<NodeId, int> colors = start.color;
    for (int x = 6; x >= 4; --x) {
      ColorReduceResult step = pseudoforest_color_reduce(s.graph, s.successor, colors, x);
      CHECK(step.rounds == 2);
      for (const auto& [v, c] : step.coloring) {
        CHECK(c >= 1);
        CHECK(c <= x - 1);
      }
      for (const Edge& e : s.graph.edges())
        CHECK(step.coloring.at(e.first) != step.coloring.at(e.second));
      colors = step.coloring;
    }
    // serial and parallel paths agree exactly
    ColorReduceResult ser = pseudoforest_color_reduce(s.graph, s.successor, start.color, 6, false);
    ColorReduceResult par = pseudoforest_color_reduce(s.graph, s.successor, start.color, 6, true);
    CHECK(ser.coloring == par.coloring);
  }
}

TEST_CASE("the color reduce node program matches the direct routine") {
  PseudoforestSample s = random_pseudoforest(20, 17);
  DistanceColoring start = greedy_distance_coloring(s.graph, 1);
  REQUIRE(start.palette <= 6);
  ColorReduceResult direct = pseudoforest_color_reduce(s.graph, s.successor, start.color, 6);

  SupportedInstance inst(s.graph, s.graph.edges(), Mode::LOCAL);
  RunOptions ro;
  for (NodeId v : s.graph.ids()) {
    json label{{"color", start.color.at(v)}, {"x", 6}};
    auto it = s.successor.find(v);
    label["succ"] = (it == s.successor.end()) ? json(nullptr) : json(it->second);
    ro.input_labels[v] = label;
  }
  auto program = make_color_reduce_program();
  ExecutionTrace trace = run(inst, *program, {}, ro);
  CHECK(trace.halted);
  CHECK(trace.rounds_used == direct.rounds);
  REQUIRE(trace.outputs.size() == s.graph.size());
  for (const auto& [v, out] : trace.outputs)
    CHECK(out.at("color").get<int>() == direct.coloring.at(v));
}

TEST_CASE("color reduction rejects bad inputs") {
  PseudoforestSample s = random_pseudoforest(10, 1);
  DistanceColoring start = greedy_distance_coloring(s.graph, 1);
  CHECK_THROWS_AS(pseudoforest_color_reduce(s.graph, s.successor, start.color, 3),
                  ParameterError);  // x must leave room for {1,2,3}
  std::map<NodeId, int> out_of_range = start.color;
  out_of_range.begin()->second = 99;
  CHECK_THROWS_AS(pseudoforest_color_reduce(s.graph, s.successor, out_of_range, 6),
                  ValidationError);
}
