#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "supsim/adversarial.hpp"
#include "supsim/experiment.hpp"
#include "supsim/generators.hpp"
#include "supsim/mis.hpp"
#include "supsim/parallel.hpp"
#include "supsim/simulate.hpp"
#include "supsim/verify.hpp"

namespace supsim {
namespace {

json memory_to_json(const Memory& memory) {
  json out = json::object();
  for (const auto& [v, val] : memory) out[std::to_string(v)] = val;
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("Cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("Cannot open " + path);
  out << text;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("Cannot open " + path);
  return read_edge_list(in);
}

struct RunArgs {
  std::string config_path;
  std::string out_path;
  std::string summary_path;
  std::string mode;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int max_rounds = 0;
  bool parallel = false;
  bool strict = false;
};

int cmd_run(const RunArgs& args) {
  ExperimentConfig config = ExperimentConfig::from_json(load_json_file(args.config_path));
  if (args.seed_set) config.seed = args.seed;
  if (!args.mode.empty()) config.mode = mode_from_name(args.mode);
  if (args.max_rounds > 0) config.max_rounds = args.max_rounds;
  if (args.parallel) config.parallel = true;

  ExperimentResult result = run_experiment(config);
  std::string csv = rows_to_csv(result.rows);
  if (args.out_path.empty())
    std::cout << csv;
  else
    write_text_file(args.out_path, csv);
  if (!args.summary_path.empty())
    write_text_file(args.summary_path, result.summary.dump(2) + "\n");
  if (!args.out_path.empty()) std::cout << result.summary.dump(2) << "\n";

  if (args.strict)
    for (const ExperimentRow& row : result.rows)
      if (!row.accepted) return 1;
  return 0;
}

struct PreprocessArgs {
  std::string family = "cycle";
  std::size_t n = 12;
  std::size_t degree = 3;
  double p = 0.5;
  int locality = 1;
  std::string kind = "support";
  std::string out_path;
  std::uint64_t seed = 0;
};

int cmd_preprocess(const PreprocessArgs& args) {
  GenParams gp;
  gp.n = args.n;
  gp.degree = args.degree;
  gp.p = args.p;
  gp.seed = args.seed;
  if (args.family == "grid") {
    gp.rows = args.n;
    gp.cols = args.n;
  }
  Graph support = generate(args.family, gp);

  json out;
  if (args.kind == "support") {
    SupportPlan plan = build_support_plan(support, args.locality);
    json depths = json::array();
    for (int d : plan.gather_depth) depths.push_back(d);
    out = json{{"kind", "support"},
               {"locality", plan.locality},
               {"total_rounds", plan.total_rounds},
               {"gather_depth", depths},
               {"decomposition", plan.decomposition.to_json()},
               {"effective_order", plan.effective_order},
               {"memory", memory_to_json(plan.memory)}};
  } else if (args.kind == "passive") {
    PassivePlan plan = build_passive_plan(support, args.locality);
    out = json{{"kind", "passive"},
               {"locality", plan.locality},
               {"total_rounds", plan.total_rounds},
               {"coloring", plan.coloring.to_json()},
               {"effective_order", plan.effective_order},
               {"memory", memory_to_json(plan.memory)}};
  } else if (args.kind == "collapse") {
    int delta = static_cast<int>(support.max_degree());
    CollapsePlan plan = collapse_plan(delta);
    json schedule = json::array();
    for (const auto& step : plan.schedule) schedule.push_back(json::array({step[0], step[1]}));
    out = json{{"kind", "collapse"},
               {"max_degree", plan.max_degree},
               {"rounds", collapse_declared_rounds(delta)},
               {"distance", plan.distance},
               {"schedule", schedule},
               {"final_palette", plan.final_palette},
               {"target", plan.target},
               {"threshold",
                json{{"big", plan.threshold.big},
                     {"exact", plan.threshold.exact},
                     {"log2", plan.threshold.log2_value},
                     {"t", plan.threshold.t}}},
               {"memory", memory_to_json(collapse_preprocess(support))}};
  } else {
    throw ConfigError("Unknown plan kind '" + args.kind + "'");
  }

  std::string text = out.dump(2) + "\n";
  if (args.out_path.empty())
    std::cout << text;
  else
    write_text_file(args.out_path, text);
  return 0;
}

struct VerifyArgs {
  std::string graph_path;
  std::string labels_path;
  std::string problem = "independent_set";
  int colors = 0;
  bool allow_nonmaximal = false;
};

int cmd_verify(const VerifyArgs& args) {
  Graph g = load_graph(args.graph_path);
  json labels_json = load_json_file(args.labels_path);
  if (!labels_json.is_object())
    throw ValidationError("Labels file must hold one JSON object keyed by node id");
  std::map<NodeId, json> outputs;
  for (const auto& item : labels_json.items())
    outputs[std::stoull(item.key())] = item.value();

  LclProblem problem;
  if (args.problem == "independent_set")
    problem = lcl_independent_set(!args.allow_nonmaximal);
  else if (args.problem == "coloring")
    problem = lcl_coloring(args.colors > 0 ? args.colors
                                           : static_cast<int>(g.max_degree()) + 1);
  else if (args.problem == "maximal_matching")
    problem = lcl_maximal_matching();
  else if (args.problem == "edge_coloring")
    problem = lcl_edge_coloring(args.colors > 0 ? args.colors
                                                : 2 * static_cast<int>(g.max_degree()) - 1);
  else if (args.problem == "sinkless_orientation")
    problem = lcl_sinkless_orientation();
  else if (args.problem == "dominating_set")
    problem = lcl_dominating_set();
  else
    throw ConfigError("Unknown problem '" + args.problem + "'");

  CheckReport report = check_labeling(g, problem, labeling_from_outputs(outputs));
  std::cout << report.to_json().dump(2) << "\n";
  return report.accepted ? 0 : 1;
}

struct LowerboundArgs {
  std::string kind = "paths";
  int n = 8;
  int radius = -1;
  int degree = 3;
  int min_girth = 5;
  int universe = 7;
  std::uint64_t seed = 1;
  bool parallel = false;
};

int cmd_lowerbound(const LowerboundArgs& args) {
  if (args.kind == "paths") {
    SinklessFamily fam = build_sinkless_family(args.n);
    int radius = args.radius >= 0 ? args.radius : fam.critical_radius - 1;
    auto higher = make_orient_higher_id_program();
    auto wait = make_wait_lower_id_program(radius);
    auto gather = make_gather_orient_program(radius);
    IndistinguishabilityReport report = sinkless_indistinguishability(
        fam, radius,
        {{"orient_higher_id", higher.get()},
         {"wait_lower_id", wait.get()},
         {"gather_orient", gather.get()}});
    std::cout << report.to_json().dump(2) << "\n";
    return 0;
  }
  if (args.kind == "cover") {
    Graph base = high_girth_base(args.degree, args.min_girth, args.seed);
    LiftFamily fam = build_double_cover(base);
    int radius = args.radius >= 0 ? args.radius : (args.min_girth - 2) / 2;
    std::set<Edge> cut = random_cut(base, args.seed);
    std::vector<NodeId> probes;
    for (NodeId v : base.ids()) {
      probes.push_back(v);
      if (probes.size() == 4) break;
    }
    std::vector<Edge> universe;
    for (const Edge& e : base.edges()) {
      universe.push_back(e);
      if (static_cast<int>(universe.size()) == args.universe) break;
    }
    DistributionReport dist =
        view_distribution_equality(fam, probes, radius, universe, args.parallel);
    json out{{"base_n", base.size()},
             {"degree", args.degree},
             {"radius", radius},
             {"copy_swap_ok", verify_cover_isomorphisms(fam, cut)},
             {"parity_ok", parity_views_equal(fam, base.ids().front(), radius, cut)},
             {"distribution", dist.to_json()}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  throw ConfigError("Unknown lower-bound kind '" + args.kind + "'");
}

struct BenchArgs {
  std::size_t n = 300;
  std::size_t degree = 3;
  int iterations = 5;
  std::uint64_t seed = 7;
};

int cmd_bench(const BenchArgs& args) {
  Graph support = random_regular_graph(args.n, args.degree, args.seed);
  SupportedInstance inst(support, support.edges(), Mode::SUPPORTED);
  auto timed = [&](bool parallel) {
    RunOptions ro;
    ro.seed = args.seed;
    ro.parallel = parallel;
    auto start = std::chrono::steady_clock::now();
    MisRunResult res = random_priority_mis(inst, args.iterations, ro);
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return std::pair<double, MisRunResult>(ms, std::move(res));
  };
  auto [serial_ms, serial] = timed(false);
  auto [parallel_ms, concurrent] = timed(true);
  bool identical = serial.outputs == concurrent.outputs &&
                   serial.trace.rounds_used == concurrent.trace.rounds_used;
  json out{{"n", args.n},
           {"degree", args.degree},
           {"threads", max_threads()},
           {"openmp", openmp_available()},
           {"serial_ms", serial_ms},
           {"parallel_ms", parallel_ms},
           {"identical", identical}};
  std::cout << out.dump(2) << "\n";
  return identical ? 0 : 1;
}

}  // namespace
}  // namespace supsim

int main(int argc, char** argv) {
  CLI::App app{"Round-based simulator for preprocessing-aware distributed graph algorithms"};
  app.require_subcommand(1);

  supsim::RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment config and emit CSV rows");
  run_cmd->add_option("--config", run_args.config_path, "Experiment JSON config")->required();
  run_cmd->add_option("--out", run_args.out_path, "CSV output path (default: stdout)");
  run_cmd->add_option("--summary", run_args.summary_path, "Summary JSON output path");
  run_cmd->add_option("--mode", run_args.mode, "Override mode: local|supported|passive");
  auto* seed_opt = run_cmd->add_option("--seed", run_args.seed, "Override config seed");
  run_cmd->add_option("--max-rounds", run_args.max_rounds, "Override round budget");
  run_cmd->add_flag("--parallel", run_args.parallel, "Evaluate node steps with OpenMP");
  run_cmd->add_flag("--strict", run_args.strict, "Exit 1 when any row is rejected");

  supsim::PreprocessArgs pre_args;
  CLI::App* pre_cmd = app.add_subcommand("preprocess", "Build and print a preprocessing plan");
  pre_cmd->add_option("--family", pre_args.family, "Support family (cycle, grid, random_regular, ...)");
  pre_cmd->add_option("--n", pre_args.n, "Support size parameter");
  pre_cmd->add_option("--degree", pre_args.degree, "Degree for regular families");
  pre_cmd->add_option("--p", pre_args.p, "Edge probability for gnp");
  pre_cmd->add_option("--locality", pre_args.locality, "Sequential-locality radius t");
  pre_cmd->add_option("--kind", pre_args.kind, "Plan kind: support|passive|collapse");
  pre_cmd->add_option("--out", pre_args.out_path, "Output path (default: stdout)");
  pre_cmd->add_option("--seed", pre_args.seed, "Generator seed");

  supsim::VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a labeling against a local problem");
  verify_cmd->add_option("--graph", verify_args.graph_path, "Edge-list graph file")->required();
  verify_cmd->add_option("--labels", verify_args.labels_path, "JSON labels file")->required();
  verify_cmd->add_option("--problem", verify_args.problem,
                         "independent_set|coloring|maximal_matching|edge_coloring|"
                         "sinkless_orientation|dominating_set");
  verify_cmd->add_option("--colors", verify_args.colors, "Palette size for coloring problems");
  verify_cmd->add_flag("--allow-nonmaximal", verify_args.allow_nonmaximal,
                       "Check independence only");

  supsim::LowerboundArgs lb_args;
  CLI::App* lb_cmd = app.add_subcommand("lowerbound", "Indistinguishable-instance families");
  lb_cmd->add_option("--kind", lb_args.kind, "paths|cover");
  lb_cmd->add_option("--n", lb_args.n, "Path length (paths kind)");
  lb_cmd->add_option("--radius", lb_args.radius, "Probe radius (default: family maximum)");
  lb_cmd->add_option("--degree", lb_args.degree, "Base degree (cover kind)");
  lb_cmd->add_option("--girth", lb_args.min_girth, "Minimum base girth (cover kind)");
  lb_cmd->add_option("--universe", lb_args.universe, "Cut-universe size (cover kind)");
  lb_cmd->add_option("--seed", lb_args.seed, "Cut / base seed");
  lb_cmd->add_flag("--parallel", lb_args.parallel, "Enumerate cuts with OpenMP");

  supsim::BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Serial vs parallel engine timing");
  bench_cmd->add_option("--n", bench_args.n, "Node count");
  bench_cmd->add_option("--degree", bench_args.degree, "Regular degree");
  bench_cmd->add_option("--iterations", bench_args.iterations, "Priority-protocol iterations");
  bench_cmd->add_option("--seed", bench_args.seed, "Run seed");

  CLI11_PARSE(app, argc, argv);
  run_args.seed_set = seed_opt->count() > 0;

  try {
    if (*run_cmd) return supsim::cmd_run(run_args);
    if (*pre_cmd) return supsim::cmd_preprocess(pre_args);
    if (*verify_cmd) return supsim::cmd_verify(verify_args);
    if (*lb_cmd) return supsim::cmd_lowerbound(lb_args);
    if (*bench_cmd) return supsim::cmd_bench(bench_args);
  } catch (const supsim::SimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
