#include "supsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "supsim/generators.hpp"
#include "supsim/mis.hpp"
#include "supsim/simulate.hpp"
#include "supsim/verify.hpp"

namespace supsim {

namespace {

struct AlgoRun {
  std::map<NodeId, json> outputs;
  int rounds = 0;
  LclProblem problem;
};

AlgoRun dispatch(const SupportedInstance& inst, const ExperimentConfig& config,
                 std::uint64_t rep_seed) {
  RunOptions ro;
  ro.max_rounds = config.max_rounds;
  ro.parallel = config.parallel;
  ro.seed = rep_seed;
  const json& params = config.algorithm_params;

  if (config.algorithm == "slocal_greedy_mis" ||
      config.algorithm == "slocal_greedy_coloring") {
    bool mis = config.algorithm == "slocal_greedy_mis";
    SlocalAlgorithm alg = mis ? slocal_greedy_mis() : slocal_greedy_coloring();
    SimulationResult res = inst.mode() == Mode::PASSIVE
                               ? passive_slocal_simulation(inst, alg, ro)
                               : supported_slocal_simulation(inst, alg, ro);
    LclProblem problem =
        mis ? lcl_independent_set(true)
            : lcl_coloring(static_cast<int>(subgraph(inst).max_degree()) + 1);
    return AlgoRun{res.outputs, res.trace.rounds_used, problem};
  }
  if (config.algorithm == "collapse_coloring") {
    SimulationResult res = lcl_collapse_solve(inst, ro);
    LclProblem problem = lcl_coloring(static_cast<int>(inst.support().max_degree()) + 1);
    return AlgoRun{res.outputs, res.trace.rounds_used, problem};
  }
  if (config.algorithm == "cluster_mis") {
    double epsilon = params.value("epsilon", 0.5);
    ClusterMisResult res = cluster_optimal_mis(inst, epsilon, ro);
    // Truncation and abstention keep independence but can cost maximality.
    return AlgoRun{res.outputs, res.trace.rounds_used, lcl_independent_set(false)};
  }
  if (config.algorithm == "random_mis") {
    int iterations = params.value("iterations", 5);
    MisRunResult res = random_priority_mis(inst, iterations, ro);
    return AlgoRun{res.outputs, res.trace.rounds_used, lcl_independent_set(false)};
  }
  if (config.algorithm == "greedy_id_mis") {
    MisRunResult res = greedy_id_mis(inst, ro);
    return AlgoRun{res.outputs, res.trace.rounds_used, lcl_independent_set(true)};
  }
  std::string known;
  for (const std::string& name : algorithm_names())
    known += (known.empty() ? "" : ", ") + name;
  throw ConfigError("Unknown algorithm '" + config.algorithm + "'; known: " + known);
}

GenParams params_for(const ExperimentConfig& config, std::size_t size) {
  GenParams gp;
  gp.n = size;
  gp.seed = derive_seed(config.seed, size);
  gp.degree = config.family_params.value("degree", 3);
  gp.p = config.family_params.value("p", 0.5);
  if (config.family == "grid") {
    std::size_t rows = config.family_params.value("rows", 0);
    if (rows == 0)
      for (rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(size)));
           rows > 1 && size % rows != 0; --rows) {
      }
    if (rows == 0 || size % rows != 0)
      throw ConfigError("Grid rows " + std::to_string(rows) + " do not divide size " +
                        std::to_string(size));
    gp.rows = rows;
    gp.cols = size / rows;
  }
  return gp;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  static const std::set<std::string> known_keys = {
      "experiment_id", "family",     "sizes",        "family_params",
      "mode",          "deletion_fraction", "algorithm", "algorithm_params",
      "repetitions",   "seed",       "max_rounds",   "parallel"};
  for (const auto& item : j.items())
    if (known_keys.count(item.key()) == 0)
      throw ConfigError("Unknown config key '" + item.key() + "'");

  ExperimentConfig c;
  c.experiment_id = j.value("experiment_id", std::string("exp"));
  c.family = j.value("family", std::string("cycle"));
  if (!j.contains("sizes") || !j.at("sizes").is_array() || j.at("sizes").empty())
    throw ConfigError("Config needs a nonempty 'sizes' array");
  for (const json& s : j.at("sizes")) c.sizes.push_back(s.get<std::size_t>());
  c.family_params = j.value("family_params", json::object());
  c.mode = mode_from_name(j.value("mode", std::string("supported")));
  c.deletion_fraction = j.value("deletion_fraction", 0.0);
  if (c.deletion_fraction < 0.0 || c.deletion_fraction >= 1.0)
    throw ConfigError("deletion_fraction must lie in [0,1)");
  if (!j.contains("algorithm")) throw ConfigError("Config needs an 'algorithm'");
  c.algorithm = j.at("algorithm").get<std::string>();
  c.algorithm_params = j.value("algorithm_params", json::object());
  c.repetitions = j.value("repetitions", 1);
  if (c.repetitions < 1) throw ConfigError("repetitions must be at least 1");
  c.seed = j.value("seed", std::uint64_t{0});
  c.max_rounds = j.value("max_rounds", 100000);
  if (c.max_rounds < 1) throw ConfigError("max_rounds must be at least 1");
  c.parallel = j.value("parallel", false);
  return c;
}

json ExperimentConfig::to_json() const {
  json sizes_json = json::array();
  for (std::size_t s : sizes) sizes_json.push_back(s);
  return json{{"experiment_id", experiment_id},
              {"family", family},
              {"sizes", sizes_json},
              {"family_params", family_params},
              {"mode", mode_name(mode)},
              {"deletion_fraction", deletion_fraction},
              {"algorithm", algorithm},
              {"algorithm_params", algorithm_params},
              {"repetitions", repetitions},
              {"seed", seed},
              {"max_rounds", max_rounds},
              {"parallel", parallel}};
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  auto names = algorithm_names();
  if (std::find(names.begin(), names.end(), config.algorithm) == names.end()) {
    std::string known;
    for (const std::string& name : names) known += (known.empty() ? "" : ", ") + name;
    throw ConfigError("Unknown algorithm '" + config.algorithm + "'; known: " + known);
  }

  ExperimentResult result;
  result.config = config;
  json summary = json::array();
  for (std::size_t size : config.sizes) {
    Graph support = generate(config.family, params_for(config, size));
    int accepted_count = 0;
    double sum_rounds = 0.0, sum_quality = 0.0;
    for (int rep = 0; rep < config.repetitions; ++rep) {
      std::uint64_t rep_seed =
          derive_seed(config.seed, size, static_cast<std::uint64_t>(rep));
      std::vector<Edge> input =
          config.mode == Mode::LOCAL
              ? support.edges()
              : random_input_mask(support, config.deletion_fraction,
                                  derive_seed(rep_seed, 1));
      SupportedInstance inst(support, input, config.mode);
      AlgoRun algo = dispatch(inst, config, rep_seed);

      ExperimentRow row;
      row.experiment_id = config.experiment_id;
      row.n = support.size();
      row.mode = mode_name(config.mode);
      row.algorithm = config.algorithm;
      row.rounds = algo.rounds;
      row.seed = rep_seed;
      if (algo.outputs.size() == support.size()) {
        CheckReport check =
            check_labeling(subgraph(inst), algo.problem, labeling_from_outputs(algo.outputs));
        row.accepted = check.accepted;
        row.quality = check.quality.value_or(0.0);
      } else {
        row.accepted = false;  // round budget ran out before everyone halted
        row.quality = 0.0;
      }
      result.rows.push_back(row);
      accepted_count += row.accepted ? 1 : 0;
      sum_rounds += row.rounds;
      sum_quality += row.quality;
    }
    summary.push_back(json{{"n", support.size()},
                           {"repetitions", config.repetitions},
                           {"accepted", accepted_count},
                           {"mean_rounds", sum_rounds / config.repetitions},
                           {"mean_quality", sum_quality / config.repetitions}});
  }
  result.summary = summary;
  return result;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "experiment_id,n,mode,algorithm,rounds,quality,accepted,seed\n";
  char quality[64];
  for (const ExperimentRow& r : rows) {
    std::snprintf(quality, sizeof quality, "%.10g", r.quality);
    out += r.experiment_id + "," + std::to_string(r.n) + "," + r.mode + "," +
           r.algorithm + "," + std::to_string(r.rounds) + "," + quality + "," +
           (r.accepted ? "1" : "0") + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

std::vector<std::string> algorithm_names() {
  return {"cluster_mis",   "collapse_coloring",      "greedy_id_mis",
          "random_mis",    "slocal_greedy_coloring", "slocal_greedy_mis"};
}

}  // namespace supsim
