#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const fs::path& scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("supsim_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path scratch_file(const std::string& name) { return scratch() / name; }

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// runs the binary, captures stdout+stderr, returns the exit code
int run_cli(const std::string& args, const fs::path& capture) {
  std::string cmd = std::string(SUPSIM_BINARY) + " " + args + " > " +
                    capture.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

const std::string kCsvHeader =
    "experiment_id,n,mode,algorithm,rounds,quality,accepted,seed";

}  // namespace

TEST_CASE("run emits deterministic csv and an aggregate summary") {
  json config = {{"experiment_id", "t1"},
                 {"family", "cycle"},
                 {"sizes", {12, 16}},
                 {"algorithm", "greedy_id_mis"},
                 {"mode", "supported"},
                 {"repetitions", 2},
                 {"seed", 3}};
  fs::path cfg = scratch_file("t1.json");
  write_file(cfg, config.dump());

  fs::path csv1 = scratch_file("t1a.csv"), csv2 = scratch_file("t1b.csv");
  fs::path sum = scratch_file("t1.summary.json");
  fs::path log = scratch_file("t1.log");
  int rc1 = run_cli("run --config " + cfg.string() + " --out " + csv1.string() +
                        " --summary " + sum.string() + " --strict",
                    log);
  CHECK(rc1 == 0);
  int rc2 = run_cli("run --config " + cfg.string() + " --out " + csv2.string() +
                        " --strict",
                    log);
  CHECK(rc2 == 0);

  std::string body = read_file(csv1);
  CHECK(body == read_file(csv2));  // reruns are byte-identical
  CHECK(body.rfind(kCsvHeader, 0) == 0);
  CHECK(count_lines(body) == 5);  // header + 2 sizes x 2 repetitions
  CHECK(body.find(",supported,greedy_id_mis,") != std::string::npos);

  json summary = json::parse(read_file(sum));
  REQUIRE(summary.is_array());
  REQUIRE(summary.size() == 2);
  CHECK(summary[0].at("n") == 12);
  CHECK(summary[1].at("n") == 16);
  for (const json& row : summary) {
    CHECK(row.at("repetitions") == 2);
    CHECK(row.at("accepted") == 2);
    CHECK(row.at("mean_rounds").get<double>() > 0.0);
  }
}

TEST_CASE("run without --out streams csv to stdout and honors --mode") {
  json config = {{"experiment_id", "t2"},
                 {"family", "cycle"},
                 {"sizes", {10}},
                 {"algorithm", "greedy_id_mis"},
                 {"mode", "supported"},
                 {"repetitions", 1},
                 {"seed", 1}};
  fs::path cfg = scratch_file("t2.json");
  write_file(cfg, config.dump());
  fs::path out = scratch_file("t2.out");
  CHECK(run_cli("run --config " + cfg.string() + " --mode local", out) == 0);
  std::string text = read_file(out);
  CHECK(text.rfind(kCsvHeader, 0) == 0);
  CHECK(text.find(",local,") != std::string::npos);
}

TEST_CASE("strict runs fail when the round budget kills a row") {
  json config = {{"experiment_id", "t3"},
                 {"family", "cycle"},
                 {"sizes", {16}},
                 {"algorithm", "cluster_mis"},
                 {"mode", "supported"},
                 {"repetitions", 1},
                 {"seed", 2},
                 {"max_rounds", 1}};  // the gather needs several rounds
  fs::path cfg = scratch_file("t3.json");
  write_file(cfg, config.dump());
  fs::path csv = scratch_file("t3.csv");
  fs::path out = scratch_file("t3.out");
  CHECK(run_cli("run --config " + cfg.string() + " --out " + csv.string(), out) == 0);
  CHECK(read_file(csv).find(",0,") != std::string::npos);  // rejected row
  CHECK(run_cli("run --config " + cfg.string() + " --out " + csv.string() +
                    " --strict",
                out) == 1);
}

TEST_CASE("malformed configs exit with code 2") {
  fs::path out = scratch_file("bad.out");
  fs::path missing = scratch_file("does_not_exist.json");
  CHECK(run_cli("run --config " + missing.string(), out) == 2);

  fs::path unkkey = scratch_file("unk.json");
  write_file(unkkey, R"({"family":"cycle","sizes":[8],"algorithm":"greedy_id_mis","surprise":1})");
  CHECK(run_cli("run --config " + unkkey.string(), out) == 2);

  fs::path unkalg = scratch_file("unkalg.json");
  write_file(unkalg, R"({"family":"cycle","sizes":[8],"algorithm":"quantum_mis"})");
  CHECK(run_cli("run --config " + unkalg.string(), out) == 2);

  CHECK(run_cli("run", out) != 0);           // --config is required
  CHECK(run_cli("frobnicate", out) != 0);    // unknown subcommand
}

TEST_CASE("verify accepts and rejects through exit codes") {
  fs::path graph = scratch_file("c6.edges");
  write_file(graph, "6 6\n1 2\n1 6\n2 3\n3 4\n4 5\n5 6\n");

  fs::path good = scratch_file("good.json");
  write_file(good, R"({"1":"in","2":"out","3":"in","4":"out","5":"in","6":"out"})");
  fs::path out = scratch_file("verify.out");
  CHECK(run_cli("verify --graph " + graph.string() + " --labels " + good.string() +
                    " --problem independent_set",
                out) == 0);
  json report = json::parse(read_file(out));
  CHECK(report.at("accepted") == true);
  CHECK(report.at("quality") == 3.0);

  fs::path empty = scratch_file("empty.json");
  write_file(empty, R"({"1":"out","2":"out","3":"out","4":"out","5":"out","6":"out"})");
  CHECK(run_cli("verify --graph " + graph.string() + " --labels " + empty.string() +
                    " --problem independent_set",
                out) == 1);
  CHECK(run_cli("verify --graph " + graph.string() + " --labels " + empty.string() +
                    " --problem independent_set --allow-nonmaximal",
                out) == 0);

  // a 2-coloring of an even cycle
  fs::path colors = scratch_file("colors.json");
  write_file(colors, R"({"1":1,"2":2,"3":1,"4":2,"5":1,"6":2})");
  CHECK(run_cli("verify --graph " + graph.string() + " --labels " + colors.string() +
                    " --problem coloring --colors 2",
                out) == 0);

  fs::path broken = scratch_file("broken.json");
  write_file(broken, "[1, 2]");
  CHECK(run_cli("verify --graph " + graph.string() + " --labels " + broken.string(),
                out) == 2);
  CHECK(run_cli("verify --graph " + scratch_file("nope.edges").string() +
                    " --labels " + good.string(),
                out) == 2);
}

TEST_CASE("preprocess prints each plan kind as json") {
  fs::path out = scratch_file("plan.out");

  CHECK(run_cli("preprocess --family cycle --n 10 --kind support --locality 1", out) == 0);
  json support = json::parse(read_file(out));
  CHECK(support.at("kind") == "support");
  CHECK(support.at("locality") == 1);
  CHECK(support.at("total_rounds").get<int>() >= 1);
  CHECK(support.at("decomposition").is_object());
  CHECK(support.at("effective_order").size() == 10);

  CHECK(run_cli("preprocess --family cycle --n 10 --kind passive --locality 1", out) == 0);
  json passive = json::parse(read_file(out));
  CHECK(passive.at("kind") == "passive");
  CHECK(passive.at("coloring").is_object());
  int palette = passive.at("coloring").at("palette").get<int>();
  CHECK(passive.at("total_rounds") == palette * 1);

  CHECK(run_cli("preprocess --family cycle --n 10 --kind collapse", out) == 0);
  json collapse = json::parse(read_file(out));
  CHECK(collapse.at("kind") == "collapse");
  CHECK(collapse.at("max_degree") == 2);
  CHECK(collapse.at("target") == 3);
  CHECK(collapse.at("schedule").is_array());
  CHECK(collapse.at("final_palette").get<long long>() >= 3);

  CHECK(run_cli("preprocess --family cycle --n 10 --kind mystery", out) == 2);

  fs::path plan_file = scratch_file("plan.json");
  CHECK(run_cli("preprocess --family grid --n 4 --kind passive --out " +
                    plan_file.string(),
                out) == 0);
  CHECK(json::parse(read_file(plan_file)).at("kind") == "passive");
}

TEST_CASE("lowerbound reports cover both families") {
  fs::path out = scratch_file("lb.out");
  CHECK(run_cli("lowerbound --kind paths --n 8", out) == 0);
  json paths = json::parse(read_file(out));
  CHECK(paths.at("radius") == 3);
  CHECK(paths.at("views_identical") == true);
  REQUIRE(paths.at("programs").size() == 3);
  for (const json& p : paths.at("programs")) {
    CHECK(p.at("probe_outputs_equal") == true);
    CHECK((p.at("accepted_a") == false || p.at("accepted_b") == false));
  }

  CHECK(run_cli("lowerbound --kind cover --degree 2 --girth 5 --universe 5 --radius 1",
                out) == 0);
  json cover = json::parse(read_file(out));
  CHECK(cover.at("degree") == 2);
  CHECK(cover.at("copy_swap_ok") == true);
  CHECK(cover.at("parity_ok") == true);
  CHECK(cover.at("distribution").at("equal") == true);
  CHECK(cover.at("distribution").at("cuts") == 32);

  CHECK(run_cli("lowerbound --kind sideways", out) == 2);
}

TEST_CASE("bench compares the serial and parallel engines") {
  fs::path out = scratch_file("bench.out");
  CHECK(run_cli("bench --n 60 --degree 3 --iterations 2 --seed 7", out) == 0);
  std::string text = read_file(out);
  CHECK(text.find("identical") != std::string::npos);
}
