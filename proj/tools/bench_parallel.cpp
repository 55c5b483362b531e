#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "supsim/adversarial.hpp"
#include "supsim/generators.hpp"
#include "supsim/mis.hpp"
#include "supsim/parallel.hpp"

using namespace supsim;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Engine kernel: the randomized priority protocol, whole-node steps spread
// over threads. The parallel path must reproduce the serial trace exactly.
int bench_engine(std::size_t n, std::size_t degree, int iterations) {
  Graph support = random_regular_graph(n, degree, 42);
  SupportedInstance inst(support, support.edges(), Mode::SUPPORTED);

  auto run_once = [&](bool parallel) {
    RunOptions ro;
    ro.seed = 42;
    ro.parallel = parallel;
    double start = now_ms();
    MisRunResult res = random_priority_mis(inst, iterations, ro);
    double elapsed = now_ms() - start;
    return std::pair<double, std::string>(elapsed, res.trace.to_json().dump());
  };

  auto [serial_ms, serial_trace] = run_once(false);
  auto [parallel_ms, parallel_trace] = run_once(true);
  bool identical = serial_trace == parallel_trace;
  std::printf("engine      n=%zu d=%zu iters=%d  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n",
              n, degree, iterations, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              identical ? "identical" : "MISMATCH");
  return identical ? 0 : 1;
}

// Enumeration kernel: canonical flagged views over every cut of a small
// lift family, one cut per task.
int bench_enumeration(int universe_bits) {
  Graph base = cycle_graph(7);
  LiftFamily fam = build_double_cover(base);
  std::vector<Edge> universe;
  for (const Edge& e : base.edges()) {
    universe.push_back(e);
    if (static_cast<int>(universe.size()) == universe_bits) break;
  }
  std::vector<NodeId> probes(base.ids().begin(), base.ids().end());

  auto run_once = [&](bool parallel) {
    double start = now_ms();
    DistributionReport rep = view_distribution_equality(fam, probes, 2, universe, parallel);
    double elapsed = now_ms() - start;
    return std::pair<double, bool>(elapsed, rep.equal);
  };

  auto [serial_ms, serial_equal] = run_once(false);
  auto [parallel_ms, parallel_equal] = run_once(true);
  bool agree = serial_equal == parallel_equal && serial_equal;
  std::printf("enumeration cuts=%d probes=%zu    serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n",
              1 << universe.size(), probes.size(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              agree ? "identical" : "MISMATCH");
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 400;
  std::size_t degree = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 3;
  int iterations = argc > 3 ? std::atoi(argv[3]) : 5;

  std::printf("openmp=%s threads=%d\n", openmp_available() ? "yes" : "no", max_threads());
  int rc = 0;
  try {
    rc |= bench_engine(n, degree, iterations);
    rc |= bench_enumeration(7);
  } catch (const SimError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
