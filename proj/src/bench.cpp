#include "biclust/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <mutex>
#include <thread>

#include "biclust/construct.hpp"
#include "biclust/exact.hpp"
#include "biclust/instances.hpp"
#include "json.hpp"

namespace biclust {

using nlohmann::json;

namespace {

std::vector<json> as_list(const json& j, const char* key) {
  if (!j.contains(key)) throw PreconditionError(std::string("grid is missing '") + key + "'");
  const json& v = j.at(key);
  if (v.is_array()) return v.get<std::vector<json>>();
  return {v};
}

BenchCell cell_from(const json& j) {
  BenchCell c;
  c.rows = j.at("r").get<std::size_t>();
  c.cols = j.at("n").get<std::size_t>();
  c.density = j.value("density", 0.5);
  c.alpha = j.value("alpha", 0.5);
  return c;
}

}  // namespace

BenchConfig bench_config_from_json(const std::string& text) {
  BenchConfig cfg;
  try {
    json j = json::parse(text);
    const json& grid = j.at("grid");
    if (grid.is_array()) {
      for (const auto& item : grid) cfg.grid.push_back(cell_from(item));
    } else if (grid.is_object()) {
      for (const auto& r : as_list(grid, "r")) {
        for (const auto& n : as_list(grid, "n")) {
          for (const auto& d : as_list(grid, "density")) {
            for (const auto& a : as_list(grid, "alpha")) {
              cfg.grid.push_back({r.get<std::size_t>(), n.get<std::size_t>(), d.get<double>(), a.get<double>()});
            }
          }
        }
      }
    } else {
      throw PreconditionError("'grid' must be a list of cells or an object of value lists");
    }
    cfg.instances_per_cell = j.value("instances_per_cell", cfg.instances_per_cell);
    if (j.contains("modes")) {
      cfg.modes.clear();
      for (const auto& m : j.at("modes")) {
        cfg.modes.push_back(parse_mode(m.is_string() ? m.get<std::string>() : m.dump()));
      }
    }
    cfg.time_budget_seconds = j.value("time_budget_seconds", cfg.time_budget_seconds);
    cfg.rng_seed_base = j.value("rng_seed_base", cfg.rng_seed_base);
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.max_r = j.value("max_r", cfg.max_r);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("invalid bench config: ") + e.what());
  }
  if (cfg.instances_per_cell < 1) throw PreconditionError("instances_per_cell must be at least 1");
  if (cfg.modes.empty()) throw PreconditionError("modes must not be empty");
  if (cfg.jobs < 1) throw PreconditionError("jobs must be at least 1");
  for (const auto& c : cfg.grid) {
    if (c.rows < 1 || c.cols < 1) throw PreconditionError("grid cells need r, n >= 1");
    if (!(c.density >= 0 && c.density <= 1)) throw PreconditionError("density must lie in [0,1]");
    if (!(c.alpha >= 0 && c.alpha <= 1)) throw PreconditionError("alpha must lie in [0,1]");
  }
  return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open bench config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return bench_config_from_json(ss.str());
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
SolveRecord timed(F&& solve) {
  auto t0 = Clock::now();
  Bicluster b = solve();
  auto t1 = Clock::now();
  return {b.rows.size(), b.cols.size(), std::chrono::duration<double>(t1 - t0).count(), b.rows};
}

InstanceRecord run_instance(const BenchConfig& cfg, std::size_t grid_index, std::size_t k,
                            IntersectMode mode) {
  const BenchCell& cell = cfg.grid[grid_index];
  InstanceRecord rec;
  rec.cell = grid_index;
  rec.instance = k;
  rec.rng_seed = cfg.rng_seed_base + grid_index * cfg.instances_per_cell + k;
  rec.params = cell;
  rec.mode = mode;
  BinaryMatrix a = generate({cell.rows, cell.cols, cell.density, rec.rng_seed});
  rec.target_row = choose_target(a, mode);
  rec.bound = compute_l1(a, mode, rec.target_row, cell.alpha);
  HeuristicConfig hc;
  hc.mode = mode;
  hc.bound = rec.bound;
  hc.seed_row = rec.target_row;
  rec.heuristic = timed([&] { return algorithm1(a, hc); });
  rec.accelerated = timed([&] { return algorithm1_accelerated(a, hc); });
  if (cell.rows <= cfg.max_r) {
    ExactOptions eo;
    eo.limits.max_r_enumeration = cfg.max_r;
    eo.seed_row = rec.target_row;
    eo.tie_break = ExactTieBreak::FirstFound;
    eo.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(cfg.time_budget_seconds));
    try {
      rec.oracle = timed([&] {
        auto best = exact_g1(a, mode, rec.bound, eo);
        // The target row alone satisfies the bound, so an optimum exists.
        return *best;
      });
      rec.oracle_status = OracleStatus::Optimal;
    } catch (const TimeBudgetExceeded&) {
      rec.oracle_status = OracleStatus::TimedOut;
    }
  }
  return rec;
}

const char* status_text(OracleStatus s) {
  switch (s) {
    case OracleStatus::Optimal: return "optimal";
    case OracleStatus::TimedOut: return "timeout";
    case OracleStatus::Skipped: return "skipped";
  }
  return "?";
}

void log_record(std::ostream& log, const InstanceRecord& rec) {
  auto emit = [&](const char* solver, const SolveRecord* s, const char* status) {
    json j = {{"cell", rec.cell},
              {"instance", rec.instance},
              {"rng_seed", rec.rng_seed},
              {"r", rec.params.rows},
              {"n", rec.params.cols},
              {"density", rec.params.density},
              {"alpha", rec.params.alpha},
              {"mode", std::string(to_string(rec.mode))},
              {"target_row", rec.target_row},
              {"L", rec.bound},
              {"solver", solver},
              {"status", status}};
    if (s) {
      j["size_S"] = s->size_s;
      j["size_N"] = s->size_n;
      j["seconds"] = s->seconds;
      j["rows"] = s->rows;
    }
    log << j.dump() << '\n';
  };
  emit("H", &rec.heuristic, "done");
  emit("AH", &rec.accelerated, "done");
  emit("exact", rec.oracle ? &*rec.oracle : nullptr, status_text(rec.oracle_status));
}

BenchRow aggregate(const std::vector<InstanceRecord>& recs, std::size_t first, std::size_t count,
                   const BenchConfig& cfg) {
  BenchRow row;
  row.params = recs[first].params;
  row.mode = recs[first].mode;
  row.instances = count;
  double ex_s = 0, ex_n = 0, ex_t = 0;
  bool skipped = false;
  for (std::size_t k = first; k < first + count; ++k) {
    const auto& r = recs[k];
    row.h_size_s += static_cast<double>(r.heuristic.size_s);
    row.h_size_n += static_cast<double>(r.heuristic.size_n);
    row.ah_size_s += static_cast<double>(r.accelerated.size_s);
    row.ah_size_n += static_cast<double>(r.accelerated.size_n);
    row.h_seconds += r.heuristic.seconds;
    row.ah_seconds += r.accelerated.seconds;
    if (r.heuristic.rows != r.accelerated.rows || r.heuristic.size_n != r.accelerated.size_n) {
      ++row.mismatches;
    }
    bool violated = r.heuristic.size_n < r.bound;
    if (r.oracle) {
      ++row.opt;
      ex_s += static_cast<double>(r.oracle->size_s);
      ex_n += static_cast<double>(r.oracle->size_n);
      ex_t += r.oracle->seconds;
      if (r.heuristic.size_s > r.oracle->size_s) violated = true;
      if (r.heuristic.size_s == r.oracle->size_s) {
        ++row.e1;
        if (r.heuristic.size_n > r.oracle->size_n) ++row.e2;
      }
    }
    if (r.oracle_status == OracleStatus::Skipped) skipped = true;
    if (violated) ++row.violations;
  }
  const double c = static_cast<double>(count);
  row.h_size_s /= c;
  row.h_size_n /= c;
  row.ah_size_s /= c;
  row.ah_size_n /= c;
  row.h_seconds /= c;
  row.ah_seconds /= c;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  row.ex_size_s = row.opt ? ex_s / static_cast<double>(row.opt) : nan;
  row.ex_size_n = row.opt ? ex_n / static_cast<double>(row.opt) : nan;
  row.ex_seconds = row.opt ? ex_t / static_cast<double>(row.opt) : nan;
  if (skipped) row.note = "heuristics only (r > max_r = " + std::to_string(cfg.max_r) + ")";
  return row;
}

}  // namespace

BenchResult run_bench(const BenchConfig& cfg, std::ostream* log) {
  if (cfg.instances_per_cell < 1) throw PreconditionError("instances_per_cell must be at least 1");
  if (cfg.jobs < 1) throw PreconditionError("jobs must be at least 1");
  struct Task {
    std::size_t grid_index;
    std::size_t k;
    IntersectMode mode;
  };
  std::vector<Task> tasks;
  for (std::size_t g = 0; g < cfg.grid.size(); ++g) {
    for (IntersectMode m : cfg.modes) {
      for (std::size_t k = 0; k < cfg.instances_per_cell; ++k) tasks.push_back({g, k, m});
    }
  }
  BenchResult result;
  result.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      try {
        result.records[t] = run_instance(cfg, tasks[t].grid_index, tasks[t].k, tasks[t].mode);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t workers = std::min(cfg.jobs, std::max<std::size_t>(tasks.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  if (log) {
    for (const auto& rec : result.records) log_record(*log, rec);
  }
  for (std::size_t first = 0; first < tasks.size(); first += cfg.instances_per_cell) {
    result.rows.push_back(aggregate(result.records, first, cfg.instances_per_cell, cfg));
  }
  return result;
}

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

}  // namespace

void write_report(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "r,n,density,alpha,v,instances,H_size_S,H_size_N,AH_size_S,AH_size_N,Ex_size_S,Ex_size_N,"
         "H_cpu_s,AH_cpu_s,Ex_cpu_s,#OptOracle,#E1,#E2,violations,H_AH_mismatch,note\n";
  if (rows.empty()) return;
  double total = 0, opt_total = 0;
  double h_s = 0, h_n = 0, ah_s = 0, ah_n = 0, ex_s = 0, ex_n = 0, h_t = 0, ah_t = 0, ex_t = 0;
  double opt = 0, e1 = 0, e2 = 0, viol = 0, mism = 0;
  for (const auto& r : rows) {
    out << r.params.rows << ',' << r.params.cols << ',' << r.params.density << ',' << r.params.alpha << ','
        << to_string(r.mode) << ',' << r.instances << ',' << fmt(r.h_size_s) << ',' << fmt(r.h_size_n) << ','
        << fmt(r.ah_size_s) << ',' << fmt(r.ah_size_n) << ',' << fmt(r.ex_size_s) << ',' << fmt(r.ex_size_n)
        << ',' << fmt(r.h_seconds) << ',' << fmt(r.ah_seconds) << ',' << fmt(r.ex_seconds) << ',' << r.opt
        << ',' << r.e1 << ',' << r.e2 << ',' << r.violations << ',' << r.mismatches << ',' << r.note << '\n';
    const double w = static_cast<double>(r.instances);
    const double wo = static_cast<double>(r.opt);
    total += w;
    opt_total += wo;
    h_s += w * r.h_size_s;
    h_n += w * r.h_size_n;
    ah_s += w * r.ah_size_s;
    ah_n += w * r.ah_size_n;
    h_t += w * r.h_seconds;
    ah_t += w * r.ah_seconds;
    if (r.opt) {
      ex_s += wo * r.ex_size_s;
      ex_n += wo * r.ex_size_n;
      ex_t += wo * r.ex_seconds;
    }
    opt += wo;
    e1 += static_cast<double>(r.e1);
    e2 += static_cast<double>(r.e2);
    viol += static_cast<double>(r.violations);
    mism += static_cast<double>(r.mismatches);
  }
  const double cells = static_cast<double>(rows.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto exact_mean = [&](double sum) { return opt_total > 0 ? sum / opt_total : nan; };
  // Count columns: mean per cell.
  out << "Average,,,,," << total / cells << ',' << fmt(h_s / total) << ',' << fmt(h_n / total) << ','
      << fmt(ah_s / total) << ',' << fmt(ah_n / total) << ',' << fmt(exact_mean(ex_s)) << ','
      << fmt(exact_mean(ex_n)) << ',' << fmt(h_t / total) << ',' << fmt(ah_t / total) << ','
      << fmt(exact_mean(ex_t)) << ',' << fmt(opt / cells) << ',' << fmt(e1 / cells) << ','
      << fmt(e2 / cells) << ',' << fmt(viol / cells) << ',' << fmt(mism / cells) << ",\n";
}

}  // namespace biclust
