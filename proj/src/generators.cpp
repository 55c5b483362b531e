#include "supsim/generators.hpp"

#include <algorithm>
#include <set>

#include "supsim/rng.hpp"

namespace supsim {

namespace {

std::vector<NodeId> iota_ids(std::size_t n) {
  std::vector<NodeId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i + 1;
  return ids;
}

}  // namespace

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle: need n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(iota_ids(n), edges);
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw ParameterError("path: need n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(iota_ids(n), edges);
}

Graph clique_graph(std::size_t n) {
  if (n < 1) throw ParameterError("clique: need n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(iota_ids(n), edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw ParameterError("grid: need rows, cols >= 1");
  auto id = [&](std::size_t r, std::size_t c) { return r * cols + c + 1; };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  return Graph(iota_ids(rows * cols), edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5.
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= 5; ++i) {
    edges.push_back({i, i % 5 + 1});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 1) % 5 + 6});
  }
  return Graph(iota_ids(10), edges);
}

Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed,
                           int max_tries) {
  if (d >= n) throw ParameterError("random_regular: need d < n");
  if ((n * d) % 2 != 0) throw ParameterError("random_regular: n*d must be even");
  if (d == 0) return Graph(iota_ids(n), {});
  RandomStream rng(derive_seed(seed, 0x7265677563ull));
  std::vector<NodeId> stubs(n * d);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = i / d + 1;
    // Fisher-Yates over the stub array.
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      std::size_t j = rng.next_below(i + 1);
      std::swap(stubs[i], stubs[j]);
    }
    std::set<Edge> edge_set;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) { ok = false; break; }
      Edge e = make_edge(stubs[i], stubs[i + 1]);
      if (!edge_set.insert(e).second) { ok = false; break; }
    }
    if (!ok) continue;  // reject the whole pairing, draw a fresh one
    return Graph(iota_ids(n), std::vector<Edge>(edge_set.begin(), edge_set.end()));
  }
  throw ParameterError("random_regular: no simple pairing found within retry budget");
}

Graph random_regular_min_girth(std::size_t n, std::size_t d, int min_girth,
                               std::uint64_t seed, int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Graph g = random_regular_graph(n, d, derive_seed(seed, attempt), max_tries);
    std::optional<int> gi = girth(g);
    if (!gi || *gi >= min_girth) return g;
  }
  throw ParameterError("random_regular_min_girth: girth filter exhausted retries");
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw ParameterError("gnp: p must be in [0,1]");
  RandomStream rng(derive_seed(seed, 0x676e70ull));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (rng.next_double() < p) edges.push_back({i, j});
  return Graph(iota_ids(n), edges);
}

PseudoforestSample random_pseudoforest(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("pseudoforest: need n >= 1");
  RandomStream rng(derive_seed(seed, 0x70666f72ull));
  std::set<Edge> edge_set;
  std::map<NodeId, NodeId> succ;
  for (NodeId v = 1; v <= n; ++v) {
    if (n == 1) break;
    // ~1 in 8 nodes stays without an out-edge.
    if (rng.next_below(8) == 0) continue;
    NodeId s = rng.next_below(n - 1) + 1;
    if (s >= v) ++s;
    Edge e = make_edge(v, s);
    // First proposer owns the edge; the reverse proposal would orient the
    // same edge twice, so the later node simply keeps out-degree 0 here.
    if (edge_set.insert(e).second) succ.emplace(v, s);
  }
  return {Graph(iota_ids(n), std::vector<Edge>(edge_set.begin(), edge_set.end())),
          std::move(succ)};
}

Graph generate(const std::string& family, const GenParams& params) {
  if (family == "cycle") return cycle_graph(params.n);
  if (family == "path") return path_graph(params.n);
  if (family == "clique") return clique_graph(params.n);
  if (family == "grid") return grid_graph(params.rows, params.cols);
  if (family == "petersen") return petersen_graph();
  if (family == "random_regular")
    return random_regular_graph(params.n, params.degree, params.seed);
  if (family == "gnp") return gnp_graph(params.n, params.p, params.seed);
  if (family == "pseudoforest") return random_pseudoforest(params.n, params.seed).graph;
  throw ConfigError("generate: unknown family '" + family + "'");
}

}  // namespace supsim
