#include <filesystem>
#include <fstream>
#include <sstream>

#include "biclust/instances.hpp"
#include "biclust/mip_export.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace biclust;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "biclust_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve prints the bicluster") {
  auto r = run({"solve", "--instance", "algorithm_12x12", "--mode", "0", "--bound", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 5\n1 2 3\n6 8 10 11 12\n");

  auto csv = run({"solve", "--instance", "algorithm_12x12", "--mode", "1", "--bound", "4", "--seed-row", "4",
                  "--algo", "accelerated", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("size_S,size_N,rows,cols\n3,5,3;4;5,", 0) == 0);

  auto js = run({"solve", "--instance", "algorithm_12x12", "--mode", "01", "--problem", "g2", "--bound", "2",
                 "--algo", "exact", "--format", "json"});
  CHECK(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["size_S"] == 2);
  CHECK(j["size_N"] == 11);
}

TEST_CASE("solve failures") {
  auto inf = run({"solve", "--instance", "algorithm_12x12", "--mode", "0", "--bound", "9", "--seed-row", "1"});
  CHECK(inf.code == 2);
  CHECK(inf.err.find(">= 9") != std::string::npos);
  auto exact = run({"solve", "--instance", "algorithm_12x12", "--mode", "0", "--bound", "9", "--algo", "exact"});
  CHECK(exact.code == 2);
  CHECK(run({"solve", "--instance", "/nonexistent.bmat", "--mode", "0", "--bound", "1"}).code == 2);
  CHECK(run({"solve", "--instance", "algorithm_12x12", "--mode", "2", "--bound", "1"}).code == 1);
  CHECK(run({"solve", "--mode", "0", "--bound", "1"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("generate then solve from the file") {
  fs::path inst = scratch("gen.bmat");
  CHECK(run({"generate", "--r", "6", "--n", "9", "--density", "0.4", "--seed", "3", "--out", inst.string()}).code == 0);
  CHECK(read_instance_file(inst.string()) == generate({6, 9, 0.4, 3}));
  auto r = run({"solve", "--instance", inst.string(), "--mode", "1", "--bound", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("6 ", 0) == 0);
  auto gen = run({"generate", "--r", "2", "--n", "2", "--density", "1"});
  CHECK(gen.out == "2 2\n1 1\n1 1\n");
}

TEST_CASE("pareto output") {
  auto r = run({"pareto", "--instance", "algorithm_12x12", "--mode", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("iter,L,size_S,size_N,rows,cols\n1,0,12,0,", 0) == 0);
  fs::path out = scratch("front.json");
  auto js = run({"pareto", "--instance", "algorithm_12x12", "--mode", "1", "--p", "2", "--solver", "heuristic",
                 "--multi-seed", "--accelerated", "--format", "json", "--out", out.string()});
  CHECK(js.code == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["trace"].size() >= 1);
  CHECK(j["front"].size() >= 1);
  CHECK(run({"pareto", "--instance", "algorithm_12x12", "--mode", "0", "--p", "3"}).code == 1);
}

TEST_CASE("export-mip writes readable models") {
  fs::path lp = scratch("g1.lp");
  CHECK(run({"export-mip", "--instance", "algorithm_12x12", "--mode", "0", "--problem", "g1", "--bound", "5",
             "--out", lp.string()})
            .code == 0);
  std::ifstream in(lp);
  CHECK(read_model(in) == build_ip1(paper_examples().at("algorithm_12x12"), IntersectMode::Zero, 5));

  fs::path bi = scratch("pair.lp");
  CHECK(run({"export-mip", "--instance", "algorithm_12x12", "--mode", "1", "--problem", "bi", "--strengthen",
             "--out", bi.string()})
            .code == 0);
  CHECK(fs::exists(scratch("pair_obj1.lp")));
  CHECK(fs::exists(scratch("pair_obj2.lp")));
  CHECK(run({"export-mip", "--instance", "algorithm_12x12", "--mode", "1", "--problem", "g2"}).code == 1);
  CHECK(run({"export-mip", "--instance", "algorithm_12x12", "--mode", "1", "--problem", "g2", "--bound", "0"})
            .code == 2);
}

TEST_CASE("bench writes the report and the log") {
  fs::path cfg = scratch("bench.json");
  std::ofstream(cfg) << R"({"grid": [{"r": 6, "n": 8, "density": 0.5, "alpha": 0.5}], "instances_per_cell": 2})";
  fs::path dir = scratch("bench_out");
  fs::remove_all(dir);
  auto r = run({"bench", "--config", cfg.string(), "--out", dir.string(), "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "report.csv").rfind("r,n,density,alpha,v,", 0) == 0);
  std::istringstream log(slurp(dir / "solves.jsonl"));
  std::size_t lines = 0;
  for (std::string line; std::getline(log, line);) ++lines;
  CHECK(lines == 6);
}

TEST_CASE("master report") {
  auto r = run({"master", "--instance", "algorithm_12x12", "--mode", "1", "--bound", "4", "--max-sets", "2",
                "--min-size", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("set 1 seed 4: 3 5") != std::string::npos);
  CHECK(r.out.find("set 2 seed 9") != std::string::npos);
  auto js = run({"master", "--instance", "algorithm_12x12", "--mode", "1", "--bound", "4", "--max-sets", "2",
                 "--format", "json"});
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out).is_object());
}

}  // TEST_SUITE
