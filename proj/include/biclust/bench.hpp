#pragma once

// Heuristic-versus-oracle experiment harness on random instances.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "biclust/core.hpp"

namespace biclust {

struct BenchCell {
  std::size_t rows = 10;
  std::size_t cols = 20;
  double density = 0.5;
  double alpha = 0.5;
};

struct BenchConfig {
  std::vector<BenchCell> grid;
  std::size_t instances_per_cell = 10;
  std::vector<IntersectMode> modes{IntersectMode::Zero};
  double time_budget_seconds = 60.0;
  std::uint64_t rng_seed_base = 1;
  std::size_t jobs = 1;
  /// Cells with more rows run the heuristics only.
  std::size_t max_r = 22;
};

/// JSON config. The grid is either an explicit list
///   {"grid": [{"r": 12, "n": 24, "density": 0.5, "alpha": 0.8}, ...]}
/// or a cartesian product
///   {"grid": {"r": [...], "n": [...], "density": [...], "alpha": [...]}}.
/// Other keys: instances_per_cell, modes (["0","1","01"]), time_budget_seconds,
/// rng_seed_base, jobs, max_r. Throws PreconditionError on invalid content.
BenchConfig bench_config_from_json(const std::string& text);
BenchConfig load_bench_config(const std::string& path);

struct SolveRecord {
  std::size_t size_s = 0;
  std::size_t size_n = 0;
  double seconds = 0.0;
  RowSet rows;
};

enum class OracleStatus { Optimal, TimedOut, Skipped };

struct InstanceRecord {
  std::size_t cell = 0;
  std::size_t instance = 0;
  std::uint64_t rng_seed = 0;
  BenchCell params;
  IntersectMode mode = IntersectMode::Zero;
  std::size_t target_row = 1;
  std::size_t bound = 0;
  SolveRecord heuristic;
  SolveRecord accelerated;
  OracleStatus oracle_status = OracleStatus::Skipped;
  std::optional<SolveRecord> oracle;
};

struct BenchRow {
  BenchCell params;
  IntersectMode mode = IntersectMode::Zero;
  std::size_t instances = 0;
  double h_size_s = 0, h_size_n = 0;
  double ah_size_s = 0, ah_size_n = 0;
  /// Means over instances the oracle finished; NaN when it never did.
  double ex_size_s = 0, ex_size_n = 0;
  double h_seconds = 0, ah_seconds = 0, ex_seconds = 0;
  std::size_t opt = 0;
  std::size_t e1 = 0;
  std::size_t e2 = 0;
  /// Heuristic result infeasible or larger than the oracle optimum.
  std::size_t violations = 0;
  /// H and AH returned different sets.
  std::size_t mismatches = 0;
  /// Why the oracle did not run, empty otherwise.
  std::string note;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<InstanceRecord> records;
};

/// One row per (grid cell, mode). Instance k of grid cell c uses the seed
/// rng_seed_base + c * instances_per_cell + k for every mode. When `log` is
/// given, one JSON object per solve is written to it.
BenchResult run_bench(const BenchConfig& cfg, std::ostream* log = nullptr);

/// CSV, one line per row plus a trailing "Average" line weighted by instance count.
void write_report(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace biclust
