#pragma once

#include <map>
#include <memory>
#include <vector>

#include "supsim/engine.hpp"
#include "supsim/graph.hpp"

namespace supsim {

// Proper coloring of the k-th power: nodes within hop distance k never share
// a color. Greedy over ascending ids; palette is at most Delta^k + 1.
struct DistanceColoring {
  int k = 1;
  int palette = 0;                // number of distinct colors used
  std::map<NodeId, int> color;    // colors are 1-based

  json to_json() const;
  static DistanceColoring from_json(const json& j);
};

DistanceColoring greedy_distance_coloring(const Graph& g, int k);

// Low-boundary ball carving: repeatedly grow a ball around the lowest
// unclustered id until it stops expanding by a (1+epsilon) factor. The grown
// ball B_{r+1} becomes the cluster; B_r is its inner part.
struct BallCluster {
  NodeId center = 0;
  int radius = 0;                  // the r at which growth stalled
  std::vector<NodeId> members;     // = inner + boundary, sorted
  std::vector<NodeId> inner;
  std::vector<NodeId> boundary;
};

struct BallClustering {
  double epsilon = 1.0;
  std::vector<BallCluster> clusters;   // in carving order
  std::map<NodeId, std::size_t> cluster_of;

  json to_json() const;
  static BallClustering from_json(const json& j);
};

BallClustering ball_growing(const Graph& g, double epsilon);

// Iterated ball carving with epsilon = 1: inner balls carved in pass j get
// color j, boundaries retry in the next pass. Same-color clusters are never
// adjacent; every cluster has small weak diameter.
struct NdCluster {
  int color = 1;
  NodeId leader = 0;               // smallest member id
  std::vector<NodeId> members;     // sorted
  int weak_diameter = 0;           // max pairwise hop distance in g
};

struct NetworkDecomposition {
  int num_colors = 0;
  std::vector<NdCluster> clusters;           // sorted by (color, leader)
  std::map<NodeId, std::size_t> cluster_of;

  json to_json() const;
  static NetworkDecomposition from_json(const json& j);
};

NetworkDecomposition network_decomposition(const Graph& g);

// Peel minimum-degree nodes to get the degeneracy order, then color
// greedily in reverse; palette is at most degeneracy + 1.
struct DegeneracyColoring {
  int degeneracy = 0;
  int palette = 0;
  std::map<NodeId, int> color;  // 1-based
};

DegeneracyColoring degeneracy_coloring(const Graph& g);

// One color-reduction step on a pseudoforest: given an orientation with
// out-degree <= 1 covering every edge and a proper coloring with colors in
// 1..x (x >= 4), produce a proper coloring with colors in 1..x-1. Runs as a
// two-round node program: shift to the successor's color, then recolor the
// nodes left on color x from {1,2,3}.
struct ColorReduceResult {
  std::map<NodeId, int> coloring;
  int rounds = 0;  // engine rounds consumed (always 2)
};

ColorReduceResult pseudoforest_color_reduce(const Graph& g,
                                            const std::map<NodeId, NodeId>& successor,
                                            const std::map<NodeId, int>& coloring,
                                            int x, bool parallel = false);

// The same program, exposed so callers can run it through the engine
// themselves. Input labels must carry {"color": c, "succ": id|null, "x": x}.
std::unique_ptr<NodeProgram> make_color_reduce_program();

}  // namespace supsim
