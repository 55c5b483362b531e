#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "supsim/instance.hpp"
#include "supsim/rng.hpp"

namespace supsim {

using Message = json;

// Per-node opaque preprocessing output. Nodes without an entry see null.
using Memory = std::map<NodeId, json>;

// Preprocessors see the support graph and nothing else; the signature is the
// isolation boundary (input edges are simply not passed in).
using Preprocessor = std::function<Memory(const Graph&)>;

Memory preprocess(const Graph& support, const Preprocessor& pre);

// Convenience wrapper for node-at-a-time preprocessors; failures are
// rethrown with the offending node id attached.
Preprocessor per_node_preprocessor(std::function<json(const Graph&, NodeId)> fn);

struct InboxEntry {
  NodeId from;
  Message payload;
};
using Inbox = std::vector<InboxEntry>;  // sorted by sender id

// Stable per-node environment. Note there is no global size field: a node
// program learns anything global only through preprocessed memory.
struct NodeEnv {
  NodeId id = 0;
  std::vector<NodeId> comm_neighbors;  // sorted
  std::vector<bool> neighbor_in_input; // aligned with comm_neighbors
  json memory;                         // null when the preprocessor skipped us
  json input_label;                    // per-node problem input, may be null
};

// Handed to program callbacks; send/halt go through here so the engine can
// enforce communication legality.
class NodeApi {
 public:
  virtual ~NodeApi() = default;
  virtual const NodeEnv& env() const = 0;
  virtual int round() const = 0;  // 0 while initializing
  virtual RandomStream& rng() = 0;
  // One message per incident communication edge per round.
  virtual void send(NodeId to, Message payload) = 0;
  virtual void halt(Message output) = 0;
  virtual bool halted() const = 0;
};

// Per-node state machine. init runs before any message exchange (round 0);
// step runs once per round with the messages sent in the previous round.
class NodeAgent {
 public:
  virtual ~NodeAgent() = default;
  virtual void init(NodeApi&) {}
  virtual void step(NodeApi& api, const Inbox& inbox) = 0;
};

class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual std::unique_ptr<NodeAgent> make_agent(const NodeEnv& env) const = 0;
};

struct RunOptions {
  int max_rounds = 100000;
  bool parallel = false;     // evaluate node steps with OpenMP
  std::uint64_t seed = 0;    // source of every node's random stream
  std::map<NodeId, json> input_labels;  // optional per-node problem inputs
};

struct ExecutionTrace {
  int rounds_used = 0;
  bool halted = false;  // false means the round budget ran out
  std::map<NodeId, Message> outputs;
  std::uint64_t message_count = 0;

  json to_json() const;
};

// Lockstep execution of program on the instance. Outboxes of a round are
// computed from the previous round's inboxes only, so evaluation order
// within a round is unobservable; the parallel path is byte-identical to the
// serial reference.
ExecutionTrace run(const SupportedInstance& inst, const NodeProgram& program,
                   const Memory& memory, const RunOptions& opts);

}  // namespace supsim
