#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supsim/instance.hpp"

namespace supsim {

// Declarative experiment description, loadable from JSON. One experiment
// sweeps a graph family over `sizes`, repeats each size with derived seeds,
// runs one registered algorithm per instance, and verifies every labeling.
struct ExperimentConfig {
  std::string experiment_id = "exp";
  std::string family = "cycle";   // generator family name
  std::vector<std::size_t> sizes;
  json family_params = json::object();     // degree / rows / cols / p
  Mode mode = Mode::SUPPORTED;
  double deletion_fraction = 0.0;          // input mask density (non-LOCAL)
  std::string algorithm;                   // registry key
  json algorithm_params = json::object();  // epsilon / iterations / ...
  int repetitions = 1;
  std::uint64_t seed = 0;
  int max_rounds = 100000;
  bool parallel = false;

  static ExperimentConfig from_json(const json& j);
  json to_json() const;
};

struct ExperimentRow {
  std::string experiment_id;
  std::size_t n = 0;
  std::string mode;
  std::string algorithm;
  int rounds = 0;
  double quality = 0.0;
  bool accepted = false;
  std::uint64_t seed = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
  json summary;  // per-size aggregates
};

// Deterministic end to end: all randomness is derived from config.seed, so
// rerunning the same config reproduces every row byte for byte.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Stable CSV rendering (fixed header, %.10g qualities, accepted as 1/0).
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

// Registered algorithm keys, sorted.
std::vector<std::string> algorithm_names();

}  // namespace supsim
