#include "biclust/construct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace biclust {

namespace {

bool agrees(Trit z, std::uint8_t x) {
  return z != Trit::Hash && static_cast<std::uint8_t>(z) == x;
}

bool counts_toward(Trit t, IntersectMode mode) {
  switch (mode) {
    case IntersectMode::Zero: return t == Trit::Zero;
    case IntersectMode::One: return t == Trit::One;
    case IntersectMode::ZeroOne: return t != Trit::Hash;
  }
  return false;
}

void validate(const BinaryMatrix& matrix, const HeuristicConfig& cfg) {
  matrix.check_row(cfg.seed_row);
  if (cfg.adaptive_cutoff && !(*cfg.adaptive_cutoff >= 0.0 && *cfg.adaptive_cutoff <= 1.0)) {
    throw PreconditionError("adaptive_cutoff must lie in [0,1]");
  }
  if (cfg.tie_break == TieBreak::HighestObjective && cfg.row_scores.size() != matrix.rows()) {
    throw PreconditionError("HighestObjective tie-break needs one score per row");
  }
}

// Candidate i beats the incumbent. Rows are visited in ascending order, so a
// plain tie keeps the lower index.
bool better(const HeuristicConfig& cfg, std::size_t count, std::size_t row, long best_count,
            std::size_t best_row) {
  if (best_count < 0 || static_cast<long>(count) > best_count) return true;
  if (static_cast<long>(count) < best_count) return false;
  return cfg.tie_break == TieBreak::HighestObjective &&
         cfg.row_scores[row - 1] > cfg.row_scores[best_row - 1];
}

bool cutoff_hit(const HeuristicConfig& cfg, std::size_t best, std::size_t current) {
  return cfg.adaptive_cutoff &&
         static_cast<double>(best) < *cfg.adaptive_cutoff * static_cast<double>(current);
}

TernaryVector project(const TernaryVector& z, std::span<const std::uint8_t> x, IntersectMode mode) {
  std::vector<Trit> out(z.size(), Trit::Hash);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (counts_toward(z[j], mode)) out[j] = static_cast<Trit>(x[j]);
  }
  return TernaryVector(std::move(out));
}

GrowthStep make_step(std::size_t row, TernaryVector z) {
  GrowthStep s;
  s.added_row = row;
  s.count_zero = count_v(z, IntersectMode::Zero);
  s.count_one = count_v(z, IntersectMode::One);
  s.count_zero_one = count_v(z, IntersectMode::ZeroOne);
  s.z = std::move(z);
  return s;
}

// Shared body of the plain algorithms: full-length meet of z with every
// candidate. `target_size` is set for problem 2, `bound` is used for problem 1.
Bicluster grow_plain(const BinaryMatrix& matrix, const HeuristicConfig& cfg,
                     std::optional<std::size_t> target_size, GrowthTrace* trace) {
  const std::size_t r = matrix.rows();
  const std::size_t n = matrix.cols();
  const IntersectMode mode = cfg.mode;
  std::vector<Trit> z(n);
  {
    auto seed = matrix.row_values(cfg.seed_row);
    for (std::size_t j = 0; j < n; ++j) z[j] = static_cast<Trit>(seed[j]);
  }
  std::vector<char> in_s(r + 1, 0);
  in_s[cfg.seed_row] = 1;
  std::size_t size = 1;
  std::size_t current = 0;
  for (Trit t : z) current += counts_toward(t, mode);
  if (trace) trace->steps.push_back(make_step(cfg.seed_row, TernaryVector(z)));

  while (size < r) {
    if (target_size && size >= *target_size) break;
    long best_count = -1;
    std::size_t best_row = 0;
    std::vector<CandidateEvaluation> round;
    for (std::size_t i = 1; i <= r; ++i) {
      if (in_s[i]) continue;
      auto x = matrix.row_values(i);
      std::size_t c = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (agrees(z[j], x[j]) && counts_toward(z[j], mode)) ++c;
      }
      if (trace) round.push_back({i, project(TernaryVector(z), x, mode), c});
      if (better(cfg, c, i, best_count, best_row)) {
        best_count = static_cast<long>(c);
        best_row = i;
      }
    }
    if (trace) trace->rounds.push_back(std::move(round));
    std::size_t best = static_cast<std::size_t>(best_count);
    if (!target_size && best < cfg.bound) break;
    if (cutoff_hit(cfg, best, current)) break;
    auto x = matrix.row_values(best_row);
    for (std::size_t j = 0; j < n; ++j) {
      if (!agrees(z[j], x[j])) z[j] = Trit::Hash;
    }
    in_s[best_row] = 1;
    ++size;
    current = best;
    if (trace) {
      trace->steps.push_back(make_step(best_row, TernaryVector(z)));
    }
  }
  RowSet rows;
  for (std::size_t i = 1; i <= r; ++i) {
    if (in_s[i]) rows.push_back(i);
  }
  return make_bicluster(matrix, std::move(rows), mode);
}

// Accelerated body: only the columns still counting toward v are scanned, and
// for problem 1 rows proven unable to reach the bound are dropped for good.
Bicluster grow_accelerated(const BinaryMatrix& matrix, const HeuristicConfig& cfg,
                           std::optional<std::size_t> target_size) {
  const std::size_t r = matrix.rows();
  const std::size_t n = matrix.cols();
  const IntersectMode mode = cfg.mode;
  const bool problem1 = !target_size;

  std::vector<std::size_t> active;
  std::vector<std::uint8_t> active_val;
  {
    auto seed = matrix.row_values(cfg.seed_row);
    for (std::size_t j = 0; j < n; ++j) {
      if (counts_toward(static_cast<Trit>(seed[j]), mode)) {
        active.push_back(j);
        active_val.push_back(seed[j]);
      }
    }
  }

  // 0: open, 1: in S, 2: excluded (F)
  std::vector<std::uint8_t> state(r + 1, 0);
  state[cfg.seed_row] = 1;
  std::size_t open = r - 1;
  if (problem1 && cfg.bound > 0 && mode != IntersectMode::ZeroOne) {
    for (std::size_t i = 1; i <= r; ++i) {
      if (state[i] == 0 && row_count(matrix, i, mode) < cfg.bound) {
        state[i] = 2;
        --open;
      }
    }
  }

  std::size_t size = 1;
  while (open > 0) {
    if (target_size && size >= *target_size) break;
    long best_count = -1;
    std::size_t best_row = 0;
    for (std::size_t i = 1; i <= r; ++i) {
      if (state[i] != 0) continue;
      auto x = matrix.row_values(i);
      std::size_t c = 0;
      for (std::size_t k = 0; k < active.size(); ++k) c += (x[active[k]] == active_val[k]);
      if (better(cfg, c, i, best_count, best_row)) {
        best_count = static_cast<long>(c);
        best_row = i;
      }
      if (problem1 && c < cfg.bound) {
        state[i] = 2;
        --open;
      }
    }
    if (best_count < 0) break;
    std::size_t best = static_cast<std::size_t>(best_count);
    if (problem1 && best < cfg.bound) break;
    if (cutoff_hit(cfg, best, active.size())) break;
    auto x = matrix.row_values(best_row);
    std::size_t keep = 0;
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (x[active[k]] == active_val[k]) {
        active[keep] = active[k];
        active_val[keep] = active_val[k];
        ++keep;
      }
    }
    active.resize(keep);
    active_val.resize(keep);
    if (state[best_row] == 0) --open;
    state[best_row] = 1;
    ++size;
  }
  RowSet rows;
  for (std::size_t i = 1; i <= r; ++i) {
    if (state[i] == 1) rows.push_back(i);
  }
  return make_bicluster(matrix, std::move(rows), mode);
}

void check_seed_feasible(const BinaryMatrix& matrix, const HeuristicConfig& cfg) {
  std::size_t seed_count = row_count(matrix, cfg.seed_row, cfg.mode);
  if (cfg.bound > seed_count) throw InfeasibleSeed(cfg.seed_row, seed_count, cfg.bound);
}

void check_target(const BinaryMatrix& matrix, const HeuristicConfig& cfg) {
  if (cfg.bound < 1 || cfg.bound > matrix.rows()) {
    throw PreconditionError("set-size bound must lie in [1, r], got " + std::to_string(cfg.bound));
  }
}

}  // namespace

Bicluster algorithm1(const BinaryMatrix& matrix, const HeuristicConfig& cfg, GrowthTrace* trace) {
  validate(matrix, cfg);
  check_seed_feasible(matrix, cfg);
  return grow_plain(matrix, cfg, std::nullopt, trace);
}

Bicluster algorithm2(const BinaryMatrix& matrix, const HeuristicConfig& cfg, GrowthTrace* trace) {
  validate(matrix, cfg);
  check_target(matrix, cfg);
  return grow_plain(matrix, cfg, cfg.bound, trace);
}

Bicluster algorithm1_accelerated(const BinaryMatrix& matrix, const HeuristicConfig& cfg) {
  validate(matrix, cfg);
  check_seed_feasible(matrix, cfg);
  return grow_accelerated(matrix, cfg, std::nullopt);
}

Bicluster algorithm2_accelerated(const BinaryMatrix& matrix, const HeuristicConfig& cfg) {
  validate(matrix, cfg);
  check_target(matrix, cfg);
  return grow_accelerated(matrix, cfg, cfg.bound);
}

std::size_t select_seed(const BinaryMatrix& matrix, IntersectMode mode, const RowSet& excluded,
                        bool balanced) {
  std::vector<char> skip(matrix.rows() + 1, 0);
  for (std::size_t i : excluded) {
    matrix.check_row(i);
    skip[i] = 1;
  }
  std::optional<std::size_t> best_row;
  std::size_t best_score = 0;
  for (std::size_t i = 1; i <= matrix.rows(); ++i) {
    if (skip[i]) continue;
    std::size_t score;
    if (mode == IntersectMode::ZeroOne) {
      std::size_t n0 = row_count(matrix, i, IntersectMode::Zero);
      std::size_t n1 = row_count(matrix, i, IntersectMode::One);
      score = n0 > n1 ? n0 - n1 : n1 - n0;
    } else {
      score = row_count(matrix, i, mode);
    }
    bool wins = !best_row || (balanced && mode == IntersectMode::ZeroOne ? score < best_score
                                                                         : score > best_score);
    if (wins) {
      best_row = i;
      best_score = score;
    }
  }
  if (!best_row) throw PreconditionError("every row is excluded; no seed left");
  return *best_row;
}

QuasiClusterReport master(const BinaryMatrix& matrix, const MasterConfig& cfg) {
  if (cfg.max_sets < 1) throw PreconditionError("U must be at least 1");
  if (cfg.min_size < 1) throw PreconditionError("L must be at least 1");
  QuasiClusterReport report;
  RowSet covered;
  for (;;) {
    if (covered.size() == matrix.rows()) {
      report.stop = MasterStop::SeedsExhausted;
      break;
    }
    std::size_t seed = select_seed(matrix, cfg.mode, covered, cfg.balanced_seed);
    HeuristicConfig hc;
    hc.mode = cfg.mode;
    hc.bound = cfg.bound;
    hc.seed_row = seed;
    hc.tie_break = cfg.tie_break;
    hc.adaptive_cutoff = cfg.adaptive_cutoff;
    Bicluster s;
    try {
      if (cfg.problem == Problem::G1) {
        s = cfg.accelerated ? algorithm1_accelerated(matrix, hc) : algorithm1(matrix, hc);
      } else {
        hc.bound = std::min(cfg.bound, matrix.rows());
        s = cfg.accelerated ? algorithm2_accelerated(matrix, hc) : algorithm2(matrix, hc);
      }
    } catch (const InfeasibleSeed&) {
      report.stop = MasterStop::InfeasibleSeed;
      report.infeasible_seed = seed;
      break;
    }
    report.seeds.push_back(seed);
    RowSet merged;
    std::set_union(covered.begin(), covered.end(), s.rows.begin(), s.rows.end(),
                   std::back_inserter(merged));
    covered = std::move(merged);
    std::size_t size = s.rows.size();
    report.sets.push_back(std::move(s));
    if (size < cfg.min_size) {
      report.stop = MasterStop::BelowMinSize;
      break;
    }
    if (report.sets.size() >= cfg.max_sets) {
      report.stop = MasterStop::LimitReached;
      break;
    }
  }
  const std::size_t k = report.sets.size();
  report.overlaps.assign(k, std::vector<RowSet>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      report.overlaps[a][b] = overlap(report.sets[a].rows, report.sets[b].rows);
    }
  }
  report.higher_order_freq = higher_order_frequency(report.sets, cfg.mode, matrix.cols());
  return report;
}

std::vector<std::size_t> frequency_counts(const BinaryMatrix& matrix, IntersectMode mode) {
  if (mode == IntersectMode::ZeroOne) {
    throw PreconditionError("frequency counts are defined for v = 0 or v = 1 only");
  }
  std::vector<std::size_t> freq(matrix.cols());
  for (std::size_t j = 1; j <= matrix.cols(); ++j) {
    std::size_t ones = matrix.column_ones(j);
    freq[j - 1] = mode == IntersectMode::One ? ones : matrix.rows() - ones;
  }
  return freq;
}

std::vector<std::size_t> higher_order_frequency(const std::vector<Bicluster>& sets,
                                                IntersectMode mode, std::size_t cols) {
  std::vector<std::size_t> freq(cols, 0);
  for (const auto& s : sets) {
    if (s.mode != mode) throw PreconditionError("all sets must share the requested mode");
    for (std::size_t j : s.cols) {
      if (j < 1 || j > cols) throw PreconditionError("column index out of range");
      ++freq[j - 1];
    }
  }
  return freq;
}

}  // namespace biclust
