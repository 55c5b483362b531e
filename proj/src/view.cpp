#include "supsim/view.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace supsim {

int LocalView::dist_of(NodeId v) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
  if (it == nodes.end() || *it != v)
    throw LookupError("view: node " + std::to_string(v) + " not in view");
  return dist[static_cast<std::size_t>(it - nodes.begin())];
}

std::vector<NodeId> LocalView::view_neighbors(NodeId v) const {
  std::vector<NodeId> out;
  for (const ViewEdge& e : edges) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LocalView::has_view_edge(NodeId u, NodeId v) const {
  Edge key = make_edge(u, v);
  for (const ViewEdge& e : edges)
    if (e.a == key.first && e.b == key.second) return true;
  return false;
}

LocalView extract_view(const SupportedInstance& inst, NodeId v, int t, ViewOver over) {
  if (t < 0) throw ParameterError("extract_view: negative radius");
  const Graph& h = inst.support();
  h.index_of(v);  // raises LookupError for unknown nodes

  LocalView view;
  view.root = v;
  view.radius = t;

  if (over == ViewOver::support) {
    std::vector<int> dist = distances_from(h, v, t);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (dist[i] >= 0) {
        view.nodes.push_back(h.id_at(i));
        view.dist.push_back(dist[i]);
      }
    for (const Edge& e : h.edges()) {
      if (std::binary_search(view.nodes.begin(), view.nodes.end(), e.first) &&
          std::binary_search(view.nodes.begin(), view.nodes.end(), e.second)) {
        ViewEdge ve;
        ve.a = e.first;
        ve.b = e.second;
        ve.in_input = inst.edge_in_input(e.first, e.second);
        view.edges.push_back(ve);
      }
    }
  } else {
    Graph g = subgraph(inst);
    std::vector<int> dist = distances_from(g, v, t);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (dist[i] >= 0) {
        view.nodes.push_back(g.id_at(i));
        view.dist.push_back(dist[i]);
      }
    for (const Edge& e : g.edges())
      if (std::binary_search(view.nodes.begin(), view.nodes.end(), e.first) &&
          std::binary_search(view.nodes.begin(), view.nodes.end(), e.second))
        view.edges.push_back({e.first, e.second, std::nullopt});
  }
  return view;
}

namespace {

char flag_char(const std::optional<bool>& f) {
  if (!f.has_value()) return '.';
  return *f ? '1' : '0';
}

// Per-node invariant signature used for candidate filtering and refinement.
std::string node_signature(const LocalView& v, std::size_t i, Respect respect) {
  std::ostringstream sig;
  sig << "d" << v.dist[i];
  NodeId node = v.nodes[i];
  std::vector<std::string> incident;
  for (const ViewEdge& e : v.edges) {
    if (e.a != node && e.b != node) continue;
    std::string tag = "e";
    if (respect.input_flags) tag += flag_char(e.in_input);
    incident.push_back(tag);
  }
  std::sort(incident.begin(), incident.end());
  sig << "|deg" << incident.size();
  for (const auto& s : incident) sig << s;
  if (respect.annotations) {
    auto it = v.annotations.find(node);
    sig << "|a" << (it == v.annotations.end() ? std::string("~") : it->second.dump());
  }
  return sig.str();
}

struct ViewIndex {
  // node id -> (neighbor id -> flag char) over view edges
  std::map<NodeId, std::map<NodeId, char>> adj;
  explicit ViewIndex(const LocalView& v) {
    for (NodeId n : v.nodes) adj[n];
    for (const ViewEdge& e : v.edges) {
      adj[e.a][e.b] = flag_char(e.in_input);
      adj[e.b][e.a] = flag_char(e.in_input);
    }
  }
};

bool annotations_equal(const LocalView& a, NodeId av, const LocalView& b, NodeId bv) {
  auto ia = a.annotations.find(av);
  auto ib = b.annotations.find(bv);
  bool ha = ia != a.annotations.end();
  bool hb = ib != b.annotations.end();
  if (ha != hb) return false;
  return !ha || ia->second == ib->second;
}

// WL-style refinement: iterate signatures extended with sorted neighbor
// signatures until the partition stabilizes.
std::vector<std::string> refined_signatures(const LocalView& v, Respect respect) {
  ViewIndex idx(v);
  std::vector<std::string> sig(v.nodes.size());
  for (std::size_t i = 0; i < v.nodes.size(); ++i) sig[i] = node_signature(v, i, respect);
  std::map<NodeId, std::size_t> pos;
  for (std::size_t i = 0; i < v.nodes.size(); ++i) pos[v.nodes[i]] = i;
  for (std::size_t round = 0; round < v.nodes.size(); ++round) {
    std::vector<std::string> next(v.nodes.size());
    for (std::size_t i = 0; i < v.nodes.size(); ++i) {
      std::vector<std::string> nb;
      for (const auto& [w, f] : idx.adj[v.nodes[i]]) {
        std::string s = sig[pos[w]];
        if (respect.input_flags) s += f;
        nb.push_back(std::move(s));
      }
      std::sort(nb.begin(), nb.end());
      std::ostringstream o;
      o << sig[i] << "#";
      for (const auto& s : nb) o << "(" << s << ")";
      next[i] = o.str();
    }
    std::set<std::string> before(sig.begin(), sig.end());
    std::set<std::string> after(next.begin(), next.end());
    bool stable = before.size() == after.size();
    sig = std::move(next);
    if (stable) break;
  }
  return sig;
}

}  // namespace

IsoWitness views_isomorphic(const LocalView& a, const LocalView& b, Respect respect) {
  IsoWitness result;
  if (a.radius != b.radius) return result;
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size())
    return result;

  if (respect.ids) {
    // The only candidate mapping is the identity.
    if (a.root != b.root || a.nodes != b.nodes || a.dist != b.dist) return result;
    if (a.edges.size() != b.edges.size()) return result;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
      const ViewEdge& ea = a.edges[i];
      const ViewEdge& eb = b.edges[i];
      if (ea.a != eb.a || ea.b != eb.b) return result;
      if (respect.input_flags && ea.in_input != eb.in_input) return result;
    }
    if (respect.annotations)
      for (NodeId v : a.nodes)
        if (!annotations_equal(a, v, b, v)) return result;
    result.isomorphic = true;
    for (NodeId v : a.nodes) result.mapping[v] = v;
    return result;
  }

  std::vector<std::string> sig_a = refined_signatures(a, respect);
  std::vector<std::string> sig_b = refined_signatures(b, respect);
  {
    std::vector<std::string> sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return result;
  }

  ViewIndex ia(a), ib(b);
  std::map<NodeId, std::size_t> pos_b;
  for (std::size_t i = 0; i < b.nodes.size(); ++i) pos_b[b.nodes[i]] = i;

  // Map a-nodes in order of ascending candidate-set size; root first.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    if (a.nodes[i] != a.root) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(a.dist[x], a.nodes[x]) < std::pair(a.dist[y], a.nodes[y]);
  });
  std::size_t root_idx = static_cast<std::size_t>(
      std::lower_bound(a.nodes.begin(), a.nodes.end(), a.root) - a.nodes.begin());
  order.insert(order.begin(), root_idx);

  std::map<NodeId, NodeId> fwd;
  std::set<NodeId> used;

  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    std::size_t ai = order[k];
    NodeId av = a.nodes[ai];
    for (std::size_t bi = 0; bi < b.nodes.size(); ++bi) {
      NodeId bv = b.nodes[bi];
      if (used.count(bv)) continue;
      if (av == a.root && bv != b.root) continue;
      if (av != a.root && bv == b.root) continue;
      if (a.dist[ai] != b.dist[bi]) continue;
      if (sig_a[ai] != sig_b[bi]) continue;
      if (respect.annotations && !annotations_equal(a, av, b, bv)) continue;
      // Edges toward already-mapped nodes must agree (including flags).
      bool ok = true;
      for (const auto& [w, mapped_w] : fwd) {
        auto eaw = ia.adj[av].find(w);
        auto ebw = ib.adj[bv].find(mapped_w);
        bool ha = eaw != ia.adj[av].end();
        bool hb = ebw != ib.adj[bv].end();
        if (ha != hb) { ok = false; break; }
        if (ha && respect.input_flags && eaw->second != ebw->second) { ok = false; break; }
      }
      if (!ok) continue;
      fwd[av] = bv;
      used.insert(bv);
      if (dfs(k + 1)) return true;
      fwd.erase(av);
      used.erase(bv);
    }
    return false;
  };

  if (dfs(0)) {
    result.isomorphic = true;
    result.mapping = fwd;
  }
  return result;
}

std::string canonical_view_string(const LocalView& v, Respect respect) {
  if (respect.ids) {
    // With ids respected the literal serialization is already canonical.
    std::ostringstream out;
    out << "r" << v.root << ";t" << v.radius << ";";
    for (std::size_t i = 0; i < v.nodes.size(); ++i) {
      out << "n" << v.nodes[i] << "@" << v.dist[i];
      if (respect.annotations) {
        auto it = v.annotations.find(v.nodes[i]);
        out << "=" << (it == v.annotations.end() ? std::string("~") : it->second.dump());
      }
      out << ";";
    }
    for (const ViewEdge& e : v.edges) {
      out << "e" << e.a << "-" << e.b;
      if (respect.input_flags) out << flag_char(e.in_input);
      out << ";";
    }
    return out.str();
  }

  // Canonical ordering search: positions are filled class by class (classes in
  // signature order, root pinned first); the minimal serialization over all
  // consistent orderings is the canonical form.
  std::vector<std::string> sig = refined_signatures(v, respect);
  ViewIndex idx(v);
  std::size_t n = v.nodes.size();

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::size_t root_idx = static_cast<std::size_t>(
      std::lower_bound(v.nodes.begin(), v.nodes.end(), v.root) - v.nodes.begin());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    bool rx = x == root_idx, ry = y == root_idx;
    if (rx != ry) return rx;
    return sig[x] < sig[y];
  });

  auto serialize = [&](const std::vector<std::size_t>& perm) {
    std::ostringstream out;
    out << "t" << v.radius << ";";
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t ni = perm[i];
      out << "d" << v.dist[ni];
      if (respect.annotations) {
        auto it = v.annotations.find(v.nodes[ni]);
        out << "=" << (it == v.annotations.end() ? std::string("~") : it->second.dump());
      }
      out << ";";
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto e = idx.adj[v.nodes[perm[i]]].find(v.nodes[perm[j]]);
        if (e == idx.adj[v.nodes[perm[i]]].end())
          out << "_";
        else
          out << (respect.input_flags ? e->second : 'x');
      }
    return out.str();
  };

  std::string best;
  std::vector<std::size_t> perm = order;
  // Enumerate permutations that keep the class order fixed; within each
  // class all arrangements are tried. Views are small, so this stays cheap.
  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (k == n) {
      std::string s = serialize(perm);
      if (best.empty() || s < best) best = s;
      return;
    }
    // positions of the class containing slot k
    std::size_t end = k + 1;
    while (end < n && sig[perm[end]] == sig[perm[k]]) ++end;
    std::vector<std::size_t> klass(perm.begin() + k, perm.begin() + end);
    std::sort(klass.begin(), klass.end());
    do {
      std::copy(klass.begin(), klass.end(), perm.begin() + k);
      search(end);
    } while (std::next_permutation(klass.begin(), klass.end()));
    std::sort(klass.begin(), klass.end());
    std::copy(klass.begin(), klass.end(), perm.begin() + k);
  };
  search(0);
  return best;
}

IsoWitness graphs_isomorphic(const Graph& a, const Graph& b, std::size_t cap) {
  if (a.size() > cap || b.size() > cap)
    throw CapacityError("graphs_isomorphic: graphs exceed node cap " +
                        std::to_string(cap));
  IsoWitness result;
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return result;

  std::vector<std::size_t> deg_a, deg_b;
  for (NodeId v : a.ids()) deg_a.push_back(a.degree(v));
  for (NodeId v : b.ids()) deg_b.push_back(b.degree(v));
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return result;
  }

  // Map a-nodes in order of descending degree (most constrained first).
  std::vector<std::size_t> order(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (deg_a[x] != deg_a[y]) return deg_a[x] > deg_a[y];
    return a.id_at(x) < a.id_at(y);
  });

  std::map<NodeId, NodeId> fwd;
  std::vector<bool> used(b.size(), false);

  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (k == a.size()) return true;
    NodeId av = a.id_at(order[k]);
    for (std::size_t bi = 0; bi < b.size(); ++bi) {
      if (used[bi]) continue;
      NodeId bv = b.id_at(bi);
      if (a.degree(av) != b.degree(bv)) continue;
      bool ok = true;
      for (const auto& [w, mw] : fwd) {
        if (a.has_edge(av, w) != b.has_edge(bv, mw)) { ok = false; break; }
      }
      if (!ok) continue;
      fwd[av] = bv;
      used[bi] = true;
      if (dfs(k + 1)) return true;
      fwd.erase(av);
      used[bi] = false;
    }
    return false;
  };

  if (dfs(0)) {
    result.isomorphic = true;
    result.mapping = fwd;
  }
  return result;
}

}  // namespace supsim
