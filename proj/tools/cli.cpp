#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "biclust/bench.hpp"
#include "biclust/construct.hpp"
#include "biclust/exact.hpp"
#include "biclust/instances.hpp"
#include "biclust/mip_export.hpp"
#include "biclust/pareto.hpp"
#include "json.hpp"

namespace biclust {

namespace {

using nlohmann::json;

// Failure while solving or reading input; maps to exit code 2.
struct SolveFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kModes{"0", "1", "01"};
const std::vector<std::string> kFormats{"text", "csv", "json"};

std::string spaced(const std::vector<std::size_t>& v) { return join_indices(v, ' '); }

json bicluster_json(const Bicluster& b) {
  return {{"mode", std::string(to_string(b.mode))},
          {"size_S", b.rows.size()},
          {"size_N", b.cols.size()},
          {"rows", b.rows},
          {"cols", b.cols}};
}

void print_bicluster(const Bicluster& b, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << bicluster_json(b).dump() << '\n';
  } else if (format == "csv") {
    out << "size_S,size_N,rows,cols\n"
        << b.rows.size() << ',' << b.cols.size() << ',' << join_indices(b.rows) << ','
        << join_indices(b.cols) << '\n';
  } else {
    out << b.rows.size() << ' ' << b.cols.size() << '\n' << spaced(b.rows) << '\n' << spaced(b.cols) << '\n';
  }
}

// Writes through `emit` to `path`, or to `out` when the path is empty.
template <class Emit>
void to_destination(const std::string& path, std::ostream& out, Emit&& emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw SolveFailure("cannot write '" + path + "'");
  emit(file);
  if (!file) throw SolveFailure("write failed for '" + path + "'");
}

struct SolveArgs {
  std::string instance;
  std::string mode;
  std::string problem = "g1";
  std::size_t bound = 0;
  std::optional<std::size_t> seed_row;
  std::string algo = "heuristic";
  std::string format = "text";
  std::optional<double> adaptive_cutoff;
};

void cmd_solve(const SolveArgs& a, std::ostream& out) {
  BinaryMatrix m = load_instance(a.instance);
  IntersectMode mode = parse_mode(a.mode);
  const bool g1 = a.problem == "g1";
  Bicluster result;
  if (a.algo == "exact") {
    ExactOptions eo;
    eo.limits = limits_from_env();
    eo.seed_row = a.seed_row;
    if (g1) {
      auto best = exact_g1(m, mode, a.bound, eo);
      if (!best) {
        throw SolveFailure("infeasible: no row set reaches |N_v(S)| >= " + std::to_string(a.bound));
      }
      result = *best;
    } else {
      result = exact_g2(m, mode, a.bound, eo);
    }
  } else {
    HeuristicConfig hc;
    hc.mode = mode;
    hc.bound = a.bound;
    hc.seed_row = a.seed_row.value_or(choose_target(m, mode));
    hc.adaptive_cutoff = a.adaptive_cutoff;
    const bool fast = a.algo == "accelerated";
    try {
      if (g1) {
        result = fast ? algorithm1_accelerated(m, hc) : algorithm1(m, hc);
      } else {
        result = fast ? algorithm2_accelerated(m, hc) : algorithm2(m, hc);
      }
    } catch (const InfeasibleSeed& e) {
      throw SolveFailure("infeasible: bound |N_v(S)| >= " + std::to_string(e.bound()) +
                         " exceeds |N_v({" + std::to_string(e.seed_row()) + "})| = " +
                         std::to_string(e.seed_count()));
    }
  }
  print_bicluster(result, a.format, out);
}

struct ParetoArgs {
  std::string instance;
  std::string mode;
  int p = 1;
  std::string solver = "exact";
  std::size_t epsilon = 1;
  bool multi_seed = false;
  bool accelerated = false;
  bool filtered = false;
  std::string format = "csv";
  std::string out;
};

void cmd_pareto(const ParetoArgs& a, std::ostream& out) {
  BinaryMatrix m = load_instance(a.instance);
  EpsilonConfig cfg;
  cfg.mode = parse_mode(a.mode);
  cfg.p = a.p;
  cfg.epsilon = a.epsilon;
  cfg.solver = a.solver == "exact" ? SubproblemSolver::Exact : SubproblemSolver::Heuristic;
  cfg.seed_rule = a.multi_seed ? SeedRule::MultiSeed : SeedRule::Target;
  cfg.accelerated = a.accelerated;
  cfg.limits = limits_from_env();
  ParetoFront front = epsilon_constraint(m, cfg);
  to_destination(a.out, out, [&](std::ostream& os) {
    if (a.format == "json") {
      json trace = json::array();
      for (const auto& t : front.trace) {
        json row = {{"iter", t.iter}, {"L", t.bound}};
        row["solution"] = t.solution ? bicluster_json(*t.solution) : json(nullptr);
        trace.push_back(row);
      }
      json points = json::array();
      for (const auto& e : front.points) points.push_back(bicluster_json(e.representative));
      os << json{{"trace", trace}, {"front", points}}.dump() << '\n';
    } else {
      write_front_csv(front, os, a.filtered);
    }
  });
}

struct GenerateArgs {
  std::size_t r = 0;
  std::size_t n = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

void cmd_generate(const GenerateArgs& a, std::ostream& out) {
  BinaryMatrix m = generate({a.r, a.n, a.density, a.seed});
  to_destination(a.out, out, [&](std::ostream& os) { write_instance(m, os); });
}

struct ExportArgs {
  std::string instance;
  std::string mode;
  std::string problem = "g1";
  std::size_t bound = 0;
  std::optional<std::size_t> seed_row;
  bool strengthen = false;
  bool preprocess = false;
  std::string out;
};

void cmd_export(const ExportArgs& a, std::ostream& out) {
  BinaryMatrix m = load_instance(a.instance);
  IntersectMode mode = parse_mode(a.mode);
  ExportOptions opts{a.strengthen, a.preprocess, a.seed_row};
  if (a.problem == "bi") {
    auto [first, second] = build_biobjective(m, mode, opts);
    if (a.out.empty()) {
      write_model(first, out);
      write_model(second, out);
      return;
    }
    std::filesystem::path p(a.out);
    std::string stem = (p.parent_path() / p.stem()).string();
    to_destination(stem + "_obj1.lp", out, [&](std::ostream& os) { write_model(first, os); });
    to_destination(stem + "_obj2.lp", out, [&](std::ostream& os) { write_model(second, os); });
    return;
  }
  IPModel model = a.problem == "g1" ? build_ip1(m, mode, a.bound, opts) : build_ip2(m, mode, a.bound, opts);
  to_destination(a.out, out, [&](std::ostream& os) { write_model(model, os); });
}

struct BenchArgs {
  std::string config;
  std::string out;
  std::optional<std::size_t> jobs;
};

void cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig cfg = load_bench_config(a.config);
  if (a.jobs) cfg.jobs = *a.jobs;
  if (std::getenv("BICLUST_MAX_R")) cfg.max_r = limits_from_env().max_r_enumeration;
  std::filesystem::create_directories(a.out);
  std::string log_path = (std::filesystem::path(a.out) / "solves.jsonl").string();
  std::string csv_path = (std::filesystem::path(a.out) / "report.csv").string();
  std::ofstream log(log_path);
  if (!log) throw SolveFailure("cannot write '" + log_path + "'");
  BenchResult res = run_bench(cfg, &log);
  to_destination(csv_path, out, [&](std::ostream& os) { write_report(res.rows, os); });
  out << "report: " << csv_path << '\n' << "log: " << log_path << '\n';
}

struct MasterArgs {
  std::string instance;
  std::string mode;
  std::size_t max_sets = 1;
  std::size_t min_size = 1;
  std::string problem = "g1";
  std::size_t bound = 0;
  bool accelerated = false;
  bool balanced_seed = false;
  std::string format = "text";
};

const char* stop_text(MasterStop s) {
  switch (s) {
    case MasterStop::BelowMinSize: return "below_min_size";
    case MasterStop::LimitReached: return "limit_reached";
    case MasterStop::SeedsExhausted: return "seeds_exhausted";
    case MasterStop::InfeasibleSeed: return "infeasible_seed";
  }
  return "?";
}

void cmd_master(const MasterArgs& a, std::ostream& out) {
  BinaryMatrix m = load_instance(a.instance);
  MasterConfig cfg;
  cfg.mode = parse_mode(a.mode);
  cfg.max_sets = a.max_sets;
  cfg.min_size = a.min_size;
  cfg.problem = a.problem == "g1" ? Problem::G1 : Problem::G2;
  cfg.bound = a.bound;
  cfg.accelerated = a.accelerated;
  cfg.balanced_seed = a.balanced_seed;
  QuasiClusterReport rep = master(m, cfg);
  if (a.format == "json") {
    json sets = json::array();
    for (std::size_t k = 0; k < rep.sets.size(); ++k) {
      json s = bicluster_json(rep.sets[k]);
      s["seed"] = rep.seeds[k];
      sets.push_back(s);
    }
    json j = {{"sets", sets}, {"higher_order_freq", rep.higher_order_freq}, {"stop", stop_text(rep.stop)}};
    j["infeasible_seed"] = rep.infeasible_seed ? json(*rep.infeasible_seed) : json(nullptr);
    out << j.dump() << '\n';
    return;
  }
  for (std::size_t k = 0; k < rep.sets.size(); ++k) {
    const auto& s = rep.sets[k];
    out << "set " << k + 1 << " seed " << rep.seeds[k] << ": " << s.rows.size() << ' ' << s.cols.size() << '\n'
        << "  rows " << spaced(s.rows) << '\n'
        << "  cols " << spaced(s.cols) << '\n';
  }
  for (std::size_t i = 0; i < rep.sets.size(); ++i) {
    for (std::size_t k = i + 1; k < rep.sets.size(); ++k) {
      out << "overlap " << i + 1 << ' ' << k + 1 << ": " << spaced(rep.overlaps[i][k]) << '\n';
    }
  }
  out << "higher-order frequency: " << spaced(rep.higher_order_freq) << '\n';
  out << "stop: " << stop_text(rep.stop);
  if (rep.infeasible_seed) out << " (seed " << *rep.infeasible_seed << ")";
  out << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-objective biclustering of 0/1 matrices", "biclust"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve one bound-constrained problem");
  solve->add_option("--instance", sa.instance, "Instance file or reserved example name")->required();
  solve->add_option("--mode", sa.mode, "Intersect mode")->required()->check(CLI::IsMember(kModes));
  solve->add_option("--problem", sa.problem, "g1: max |S| with |N| >= bound; g2: max |N| with |S| >= bound")
      ->check(CLI::IsMember({"g1", "g2"}));
  solve->add_option("--bound", sa.bound, "Lower limit on the constrained objective")->required();
  solve->add_option("--seed-row", sa.seed_row, "Row that must belong to S (1-based)");
  solve->add_option("--algo", sa.algo, "Solver")->check(CLI::IsMember({"heuristic", "accelerated", "exact"}));
  solve->add_option("--adaptive-cutoff", sa.adaptive_cutoff, "Stop when |z|_v would drop below this fraction")
      ->check(CLI::Range(0.0, 1.0));
  solve->add_option("--format", sa.format, "Output format")->check(CLI::IsMember(kFormats));

  ParetoArgs pa;
  auto* pareto = app.add_subcommand("pareto", "Sweep the efficient front with the epsilon-constraint method");
  pareto->add_option("--instance", pa.instance, "Instance file or reserved example name")->required();
  pareto->add_option("--mode", pa.mode, "Intersect mode")->required()->check(CLI::IsMember(kModes));
  pareto->add_option("--p", pa.p, "Objective kept: 1 = |S|, 2 = |N_v(S)|")->check(CLI::IsMember({1, 2}));
  pareto->add_option("--solver", pa.solver, "Subproblem solver")->check(CLI::IsMember({"exact", "heuristic"}));
  pareto->add_option("--epsilon", pa.epsilon, "Bound step")->check(CLI::PositiveNumber);
  pareto->add_flag("--multi-seed", pa.multi_seed, "Heuristic: restart from every row");
  pareto->add_flag("--accelerated", pa.accelerated, "Heuristic: use the accelerated variants");
  pareto->add_flag("--filtered", pa.filtered, "CSV: write the nondominated front instead of the raw trace");
  pareto->add_option("--format", pa.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  pareto->add_option("--out", pa.out, "Output file (default stdout)");

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Draw a random instance");
  gen->add_option("--r", ga.r, "Rows")->required()->check(CLI::PositiveNumber);
  gen->add_option("--n", ga.n, "Columns")->required()->check(CLI::PositiveNumber);
  gen->add_option("--density", ga.density, "Probability of a one")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", ga.seed, "RNG seed");
  gen->add_option("--out", ga.out, "Output file (default stdout)");

  ExportArgs ea;
  auto* exp = app.add_subcommand("export-mip", "Write an integer program in LP format");
  exp->add_option("--instance", ea.instance, "Instance file or reserved example name")->required();
  exp->add_option("--mode", ea.mode, "Intersect mode")->required()->check(CLI::IsMember(kModes));
  exp->add_option("--problem", ea.problem, "g1, g2 or bi (two single-objective files)")
      ->check(CLI::IsMember({"g1", "g2", "bi"}));
  exp->add_option("--bound", ea.bound, "Lower limit on the constrained objective");
  exp->add_option("--seed-row", ea.seed_row, "Seeded formulation around this row");
  exp->add_flag("--strengthen", ea.strengthen, "Tighten the linking rows with column counts");
  exp->add_flag("--preprocess", ea.preprocess, "Fix forced variables and add valid inequalities");
  exp->add_option("--out", ea.out, "Output file (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run the heuristic-versus-oracle experiment grid");
  bench->add_option("--config", ba.config, "JSON bench configuration")->required();
  bench->add_option("--out", ba.out, "Output directory")->required();
  bench->add_option("--jobs", ba.jobs, "Worker threads")->check(CLI::PositiveNumber);

  MasterArgs ma;
  auto* mst = app.add_subcommand("master", "Generate several quasi-clusters from successive seeds");
  mst->add_option("--instance", ma.instance, "Instance file or reserved example name")->required();
  mst->add_option("--mode", ma.mode, "Intersect mode")->required()->check(CLI::IsMember(kModes));
  mst->add_option("--max-sets", ma.max_sets, "U: maximum number of sets")->check(CLI::PositiveNumber);
  mst->add_option("--min-size", ma.min_size, "L: stop after a set smaller than this")->check(CLI::PositiveNumber);
  mst->add_option("--problem", ma.problem, "Inner problem")->check(CLI::IsMember({"g1", "g2"}));
  mst->add_option("--bound", ma.bound, "Bound for the inner problem")->required();
  mst->add_flag("--accelerated", ma.accelerated, "Use the accelerated variants");
  mst->add_flag("--balanced-seed", ma.balanced_seed, "v = 01: seed with the most balanced row");
  mst->add_option("--format", ma.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  if (exp->parsed() && ea.problem != "bi" && exp->count("--bound") == 0) {
    err << "export-mip: --bound is required for --problem " << ea.problem << '\n';
    return 1;
  }

  try {
    if (solve->parsed()) cmd_solve(sa, out);
    else if (pareto->parsed()) cmd_pareto(pa, out);
    else if (gen->parsed()) cmd_generate(ga, out);
    else if (exp->parsed()) cmd_export(ea, out);
    else if (bench->parsed()) cmd_bench(ba, out);
    else if (mst->parsed()) cmd_master(ma, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace biclust
