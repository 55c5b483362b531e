#include "supsim/instance.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "supsim/rng.hpp"

namespace supsim {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::LOCAL: return "local";
    case Mode::SUPPORTED: return "supported";
    case Mode::PASSIVE: return "passive";
  }
  throw ParameterError("mode_name: bad mode");
}

Mode mode_from_name(const std::string& name) {
  if (name == "local") return Mode::LOCAL;
  if (name == "supported") return Mode::SUPPORTED;
  if (name == "passive") return Mode::PASSIVE;
  throw ConfigError("unknown mode '" + name + "'");
}

SupportedInstance::SupportedInstance(Graph support, std::vector<Edge> input_edges,
                                     Mode mode)
    : support_(std::move(support)), mode_(mode) {
  for (Edge& e : input_edges) e = make_edge(e.first, e.second);
  std::sort(input_edges.begin(), input_edges.end());
  input_edges.erase(std::unique(input_edges.begin(), input_edges.end()),
                    input_edges.end());
  for (const Edge& e : input_edges)
    if (!support_.has_edge(e.first, e.second))
      throw ContainmentError("input edge {" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + "} not in support");
  if (mode_ == Mode::LOCAL && input_edges.size() != support_.edge_count())
    throw ContainmentError("local mode requires the full support as input");
  input_edges_ = std::move(input_edges);

  input_adj_.assign(support_.size(), {});
  for (const Edge& e : input_edges_) {
    input_adj_[support_.index_of(e.first)].push_back(e.second);
    input_adj_[support_.index_of(e.second)].push_back(e.first);
  }
  for (auto& nb : input_adj_) std::sort(nb.begin(), nb.end());
}

bool SupportedInstance::edge_in_input(NodeId u, NodeId v) const {
  const auto& nb = input_adj_[support_.index_of(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<NodeId>& SupportedInstance::input_neighbors(NodeId v) const {
  return input_adj_[support_.index_of(v)];
}

std::span<const NodeId> SupportedInstance::comm_neighbors(NodeId v) const {
  if (mode_ == Mode::PASSIVE) return input_neighbors(v);
  return support_.neighbors(v);
}

bool SupportedInstance::edge_in_comm(NodeId u, NodeId v) const {
  if (mode_ == Mode::PASSIVE) return edge_in_input(u, v);
  return support_.has_edge(u, v);
}

Graph subgraph(const SupportedInstance& inst) {
  return Graph(inst.support().ids(), inst.input_edges());
}

std::vector<Edge> random_input_mask(const Graph& support, double deletion_fraction,
                                    std::uint64_t seed) {
  if (deletion_fraction < 0.0 || deletion_fraction > 1.0)
    throw ParameterError("mask: deletion fraction must be in [0,1]");
  std::vector<Edge> edges = support.edges();
  RandomStream rng(derive_seed(seed, 0x6d61736bull));
  for (std::size_t i = edges.size(); i > 1; --i) {
    std::size_t j = rng.next_below(i);
    std::swap(edges[i - 1], edges[j]);
  }
  std::size_t drop = static_cast<std::size_t>(deletion_fraction * edges.size());
  edges.resize(edges.size() - drop);
  std::sort(edges.begin(), edges.end());
  return edges;
}

void write_mask(const std::vector<Edge>& edges, std::ostream& out) {
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& e : sorted) out << e.first << " " << e.second << "\n";
}

std::vector<Edge> read_mask(std::istream& in) {
  std::vector<Edge> edges;
  NodeId u, v;
  while (in >> u >> v) edges.push_back(make_edge(u, v));
  return edges;
}

}  // namespace supsim
