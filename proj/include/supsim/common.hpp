#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace supsim {

using NodeId = std::uint64_t;
using json = nlohmann::json;

// Canonical undirected edge: first < second always.
using Edge = std::pair<NodeId, NodeId>;

inline Edge make_edge(NodeId u, NodeId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Error taxonomy. Everything derives from SimError so callers can catch
// broadly; the concrete type tells what kind of misuse happened.
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values (infeasible generator parameters, x <= 3, ...).
struct ParameterError : SimError {
  using SimError::SimError;
};

// Reference to a node id that is not part of the graph.
struct LookupError : SimError {
  using SimError::SimError;
};

// An input edge that is not an edge of the support graph.
struct ContainmentError : SimError {
  using SimError::SimError;
};

// A size cap was exceeded (exact solvers, exhaustive enumerations).
struct CapacityError : SimError {
  using SimError::SimError;
};

// An operation was invoked on a state that does not satisfy its contract
// (missing preprocessed memory, wrong mode, girth too small, ...).
struct PreconditionError : SimError {
  using SimError::SimError;
};

// A node program tried to communicate outside the communication graph.
struct ProtocolViolation : SimError {
  using SimError::SimError;
};

// Structured data failed validation (improper input coloring, label outside
// the problem alphabet, malformed file).
struct ValidationError : SimError {
  using SimError::SimError;
};

// An algorithm exceeded a budget it declared up front.
struct ContractViolation : SimError {
  using SimError::SimError;
};

// Unresolvable experiment configuration (unknown registry key, bad schema).
struct ConfigError : SimError {
  using SimError::SimError;
};

}  // namespace supsim
