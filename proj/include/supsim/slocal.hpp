#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "supsim/common.hpp"
#include "supsim/graph.hpp"
#include "supsim/view.hpp"

namespace supsim {

// A sequentially-local algorithm: nodes are processed one at a time in some
// order, and each node commits an output after inspecting its radius-t view.
// The view's annotations carry the outputs already committed by earlier nodes
// inside the ball (absent key = not yet processed). `process` must be a pure
// function of the view: that is what makes the distributed replays exact.
struct SlocalAlgorithm {
  std::string name;
  int locality = 1;
  std::function<json(const LocalView&)> process;
};

// Runs `alg` sequentially over `order`, which must be a permutation of the
// node set. Returns the committed outputs.
std::map<NodeId, json> slocal_run_sequential(const Graph& g,
                                             const SlocalAlgorithm& alg,
                                             const std::vector<NodeId>& order);

// Greedy maximal independent set: join unless a committed neighbor joined.
SlocalAlgorithm slocal_greedy_mis();

// Greedy proper coloring: smallest color unused by committed neighbors.
SlocalAlgorithm slocal_greedy_coloring();

}  // namespace supsim
