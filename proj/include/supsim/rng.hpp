#pragma once

#include <cstdint>

#include "supsim/common.hpp"

namespace supsim {

// splitmix64 step; the standard 64-bit finalizer-based generator.
std::uint64_t splitmix64(std::uint64_t& state);

// One mixing pass; used to derive independent seeds from (seed, tag) pairs.
std::uint64_t mix64(std::uint64_t x);

// Derive a child seed. Stream independence comes from mixing, not from
// sequential draws, so derivation order never matters.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag_a,
                          std::uint64_t tag_b);

// A deterministic per-entity random stream (splitmix64 under the hood).
// Node streams are derived from (experiment seed, node id), so results do
// not depend on the order nodes are evaluated in.
class RandomStream {
 public:
  RandomStream() : state_(0) {}
  explicit RandomStream(std::uint64_t seed) : state_(mix64(seed ^ 0x9e3779b97f4a7c15ull)) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

  // Uniform double in [0, 1).
  double next_double();

  bool next_bool() { return (next_u64() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

inline RandomStream node_stream(std::uint64_t seed, NodeId node) {
  return RandomStream(derive_seed(seed, node));
}

}  // namespace supsim
