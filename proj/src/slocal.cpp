#include "supsim/slocal.hpp"

#include <algorithm>
#include <set>

#include "supsim/instance.hpp"

namespace supsim {

std::map<NodeId, json> slocal_run_sequential(const Graph& g,
                                             const SlocalAlgorithm& alg,
                                             const std::vector<NodeId>& order) {
  if (alg.locality < 0) throw ParameterError("slocal: negative locality");
  std::vector<NodeId> sorted_order(order);
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != std::vector<NodeId>(g.ids().begin(), g.ids().end()))
    throw ValidationError("slocal: order is not a permutation of the node set");

  SupportedInstance inst(g, g.edges(), Mode::LOCAL);
  std::map<NodeId, json> committed;
  for (NodeId v : order) {
    LocalView view = extract_view(inst, v, alg.locality, ViewOver::input);
    for (NodeId w : view.nodes) {
      auto it = committed.find(w);
      if (it != committed.end()) view.annotations[w] = it->second;
    }
    committed[v] = alg.process(view);
  }
  return committed;
}

SlocalAlgorithm slocal_greedy_mis() {
  SlocalAlgorithm alg;
  alg.name = "greedy_mis";
  alg.locality = 1;
  alg.process = [](const LocalView& view) -> json {
    for (NodeId w : view.view_neighbors(view.root)) {
      auto it = view.annotations.find(w);
      if (it != view.annotations.end() && it->second == "in") return "out";
    }
    return "in";
  };
  return alg;
}

SlocalAlgorithm slocal_greedy_coloring() {
  SlocalAlgorithm alg;
  alg.name = "greedy_coloring";
  alg.locality = 1;
  alg.process = [](const LocalView& view) -> json {
    std::set<int> used;
    for (NodeId w : view.view_neighbors(view.root)) {
      auto it = view.annotations.find(w);
      if (it != view.annotations.end()) used.insert(it->second.get<int>());
    }
    int c = 1;
    while (used.count(c)) ++c;
    return c;
  };
  return alg;
}

}  // namespace supsim
