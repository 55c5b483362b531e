#include "supsim/virtual_support.hpp"

#include <string>

namespace supsim {

namespace {

constexpr std::size_t kMaxNodes = 200000;

std::size_t padded_size(std::size_t n, int k) {
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > kMaxNodes / n)
      throw CapacityError("Padded size " + std::to_string(n) + "^" + std::to_string(k) +
                          " exceeds the node cap of " + std::to_string(kMaxNodes));
    total *= n;
  }
  return total;
}

}  // namespace

VirtualSupport build_virtual_support(std::size_t n, int k) {
  if (n < 2) throw ParameterError("Need at least 2 real nodes, got " + std::to_string(n));
  if (k < 2) throw ParameterError("Padding exponent must be at least 2, got " + std::to_string(k));
  std::size_t total = padded_size(n, k);

  std::vector<NodeId> ids;
  ids.reserve(total);
  for (std::size_t v = 1; v <= total; ++v) ids.push_back(v);

  std::vector<Edge> edges;
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) edges.push_back(Edge{u, v});
  for (std::size_t v = n + 1; v + 1 <= total; ++v) edges.push_back(Edge{v, v + 1});
  for (std::size_t u = 1; u <= n; ++u) edges.push_back(Edge{u, n + u});

  VirtualSupport vs;
  vs.real_n = n;
  vs.k = k;
  vs.support = Graph(std::move(ids), edges);
  return vs;
}

VirtualRunResult passive_local_simulation(const VirtualSupport& vs,
                                          const std::vector<Edge>& input_edges,
                                          const NodeProgram& program,
                                          const Memory& memory,
                                          const RunOptions& opts) {
  for (const Edge& e : input_edges)
    if (!vs.is_real(e.first) || !vs.is_real(e.second))
      throw ValidationError("Input edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ") touches a virtual node");
  SupportedInstance inst(vs.support, input_edges, Mode::PASSIVE);
  VirtualRunResult result;
  result.trace = run(inst, program, memory, opts);
  for (const auto& [v, out] : result.trace.outputs)
    if (vs.is_real(v)) result.real_outputs[v] = out;
  return result;
}

}  // namespace supsim
