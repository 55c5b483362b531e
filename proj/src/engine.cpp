#include "supsim/engine.hpp"

#include <algorithm>

#include "supsim/parallel.hpp"

namespace supsim {

Memory preprocess(const Graph& support, const Preprocessor& pre) {
  Memory memory = pre(support);
  for (const auto& [node, value] : memory) {
    (void)value;
    if (!support.has_node(node))
      throw LookupError("preprocess: memory for unknown node " + std::to_string(node));
  }
  // Every node owns a slot; uncovered ones get null.
  for (NodeId v : support.ids())
    memory.try_emplace(v, nullptr);
  return memory;
}

Preprocessor per_node_preprocessor(std::function<json(const Graph&, NodeId)> fn) {
  return [fn](const Graph& h) {
    Memory memory;
    for (NodeId v : h.ids()) {
      try {
        memory[v] = fn(h, v);
      } catch (const SimError&) {
        throw;
      } catch (const std::exception& e) {
        throw SimError("preprocessor failed at node " + std::to_string(v) + ": " +
                       e.what());
      }
    }
    return memory;
  };
}

json ExecutionTrace::to_json() const {
  json outs = json::object();
  for (const auto& [node, label] : outputs) outs[std::to_string(node)] = label;
  return json{{"rounds", rounds_used},
              {"halted", halted},
              {"outputs", outs},
              {"messages", message_count}};
}

namespace {

class NodeSlot final : public NodeApi {
 public:
  NodeEnv node_env;
  RandomStream stream;
  int current_round = 0;
  bool is_halted = false;
  Message output;
  std::vector<std::pair<NodeId, Message>> outbox;
  std::vector<NodeId> sent_this_round;

  const NodeEnv& env() const override { return node_env; }
  int round() const override { return current_round; }
  RandomStream& rng() override { return stream; }
  bool halted() const override { return is_halted; }

  void send(NodeId to, Message payload) override {
    if (is_halted)
      throw ProtocolViolation("node " + std::to_string(node_env.id) +
                              " sent after halting");
    if (!std::binary_search(node_env.comm_neighbors.begin(),
                            node_env.comm_neighbors.end(), to))
      throw ProtocolViolation("node " + std::to_string(node_env.id) +
                              " sent outside the communication graph to " +
                              std::to_string(to));
    if (std::find(sent_this_round.begin(), sent_this_round.end(), to) !=
        sent_this_round.end())
      throw ProtocolViolation("node " + std::to_string(node_env.id) +
                              " sent twice on one edge in one round");
    sent_this_round.push_back(to);
    outbox.emplace_back(to, std::move(payload));
  }

  void halt(Message out) override {
    if (is_halted)
      throw ProtocolViolation("node " + std::to_string(node_env.id) +
                              " halted twice");
    is_halted = true;
    output = std::move(out);
  }
};

}  // namespace

ExecutionTrace run(const SupportedInstance& inst, const NodeProgram& program,
                   const Memory& memory, const RunOptions& opts) {
  if (opts.max_rounds < 0) throw ParameterError("run: negative round budget");
  const Graph& h = inst.support();
  std::size_t n = h.size();

  std::vector<NodeSlot> slots(n);
  std::vector<std::unique_ptr<NodeAgent>> agents(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeId v = h.id_at(i);
    NodeEnv env;
    env.id = v;
    auto comm = inst.comm_neighbors(v);
    env.comm_neighbors.assign(comm.begin(), comm.end());
    env.neighbor_in_input.reserve(env.comm_neighbors.size());
    for (NodeId w : env.comm_neighbors)
      env.neighbor_in_input.push_back(inst.edge_in_input(v, w));
    auto mit = memory.find(v);
    env.memory = mit == memory.end() ? json(nullptr) : mit->second;
    auto lit = opts.input_labels.find(v);
    env.input_label = lit == opts.input_labels.end() ? json(nullptr) : lit->second;
    slots[i].node_env = std::move(env);
    slots[i].stream = node_stream(opts.seed, v);
    agents[i] = program.make_agent(slots[i].node_env);
  }

  ExecutionTrace trace;
  std::vector<Inbox> inboxes(n);

  auto collect = [&]() {
    // Deliver outboxes in ascending sender order; inboxes end up sorted by
    // sender without an extra sort, and the result is independent of how the
    // step phase was scheduled.
    for (auto& inbox : inboxes) inbox.clear();
    for (std::size_t i = 0; i < n; ++i) {
      trace.message_count += slots[i].outbox.size();
      for (auto& [to, payload] : slots[i].outbox) {
        std::size_t ti = h.index_of(to);
        if (!slots[ti].is_halted)
          inboxes[ti].push_back({h.id_at(i), std::move(payload)});
      }
      slots[i].outbox.clear();
      slots[i].sent_this_round.clear();
    }
  };

  // Round 0: initialization before any message exchange.
  parallel_for_index(n, opts.parallel, [&](std::size_t i) {
    slots[i].current_round = 0;
    agents[i]->init(slots[i]);
  });
  collect();

  auto all_halted = [&]() {
    for (const NodeSlot& s : slots)
      if (!s.is_halted) return false;
    return true;
  };

  int r = 0;
  bool done = all_halted();
  while (!done && r < opts.max_rounds) {
    ++r;
    parallel_for_index(n, opts.parallel, [&](std::size_t i) {
      if (slots[i].is_halted) return;
      slots[i].current_round = r;
      agents[i]->step(slots[i], inboxes[i]);
    });
    collect();
    done = all_halted();
  }

  trace.rounds_used = r;
  trace.halted = done;
  for (std::size_t i = 0; i < n; ++i)
    if (slots[i].is_halted) trace.outputs[h.id_at(i)] = slots[i].output;
  return trace;
}

}  // namespace supsim
