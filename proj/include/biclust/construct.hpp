#pragma once

// Constructive heuristics for the seeded problems
//   G1(h): max |S|        s.t. |N_v(S)| >= L, x(h) in S
//   G2(h): max |N_v(S)|   s.t. |S| >= L,      x(h) in S
// plus the master loop that produces several (possibly overlapping) sets.

#include <optional>
#include <vector>

#include "biclust/core.hpp"

namespace biclust {

enum class TieBreak {
  /// Equal counts keep the candidate with the lowest row index.
  LowestIndex,
  /// Equal counts prefer the larger externally supplied row score, then the lowest index.
  HighestObjective,
};

struct HeuristicConfig {
  IntersectMode mode = IntersectMode::Zero;
  /// Lower limit on |N_v(S)| for problem 1, target |S| for problem 2.
  std::size_t bound = 0;
  std::size_t seed_row = 1;
  TieBreak tie_break = TieBreak::LowestIndex;
  /// When set to q, stop as soon as the best addition would leave
  /// |z|_v < q * (current |z|_v).
  std::optional<double> adaptive_cutoff;
  /// One score per row (index 0 is row 1); read only under HighestObjective.
  std::vector<double> row_scores;
};

/// How a candidate row looked when evaluated against the current set.
struct CandidateEvaluation {
  std::size_t row = 0;
  /// x(row) on the columns of N_v(S), # elsewhere.
  TernaryVector projected;
  /// |z ∩ x(row)|_v.
  std::size_t count = 0;
};

struct GrowthStep {
  std::size_t added_row = 0;
  /// Analog vector of S after this addition.
  TernaryVector z;
  std::size_t count_zero = 0;
  std::size_t count_one = 0;
  std::size_t count_zero_one = 0;
};

/// Iteration log of the plain algorithms. `rounds[k]` holds the evaluations
/// of every row outside S made right after `steps[k]`; the last round is the
/// one the method stopped on (absent when S reached R).
struct GrowthTrace {
  std::vector<GrowthStep> steps;
  std::vector<std::vector<CandidateEvaluation>> rounds;
};

/// Greedy growth for G1(h). Throws InfeasibleSeed when |N_v({h})| < bound.
Bicluster algorithm1(const BinaryMatrix& matrix, const HeuristicConfig& cfg,
                     GrowthTrace* trace = nullptr);

/// Greedy growth for G2(h); requires 1 <= bound <= r.
Bicluster algorithm2(const BinaryMatrix& matrix, const HeuristicConfig& cfg,
                     GrowthTrace* trace = nullptr);

/// Same result as algorithm1. Scans only the still-agreeing columns and
/// permanently drops rows that can no longer meet the bound.
Bicluster algorithm1_accelerated(const BinaryMatrix& matrix, const HeuristicConfig& cfg);

/// Same result as algorithm2, scanning only the still-agreeing columns.
Bicluster algorithm2_accelerated(const BinaryMatrix& matrix, const HeuristicConfig& cfg);

/// Seed for the next set: argmax |x|_v over rows outside `excluded` for
/// Zero/One; for ZeroOne argmax ||x|_1 - |x|_0|, or argmin when `balanced`.
/// Ties go to the lowest index.
std::size_t select_seed(const BinaryMatrix& matrix, IntersectMode mode, const RowSet& excluded,
                        bool balanced = false);

enum class Problem { G1 = 1, G2 = 2 };

struct MasterConfig {
  IntersectMode mode = IntersectMode::Zero;
  /// U: maximum number of sets.
  std::size_t max_sets = 1;
  /// L: generation stops after a set smaller than this.
  std::size_t min_size = 1;
  Problem problem = Problem::G1;
  /// Bound handed to the inner algorithm.
  std::size_t bound = 0;
  bool accelerated = false;
  bool balanced_seed = false;
  TieBreak tie_break = TieBreak::LowestIndex;
  std::optional<double> adaptive_cutoff;
};

enum class MasterStop { BelowMinSize, LimitReached, SeedsExhausted, InfeasibleSeed };

struct QuasiClusterReport {
  std::vector<Bicluster> sets;
  std::vector<std::size_t> seeds;
  /// overlaps[i][k] = sets[i].rows ∩ sets[k].rows.
  std::vector<std::vector<RowSet>> overlaps;
  /// Per column (index 0 is column 1): number of sets whose N_v contains it.
  std::vector<std::size_t> higher_order_freq;
  MasterStop stop = MasterStop::LimitReached;
  /// Seed whose singleton already violated the bound, when stop == InfeasibleSeed.
  std::optional<std::size_t> infeasible_seed;
};

QuasiClusterReport master(const BinaryMatrix& matrix, const MasterConfig& cfg);

/// Per column: number of rows holding v. Only defined for Zero and One.
std::vector<std::size_t> frequency_counts(const BinaryMatrix& matrix, IntersectMode mode);

/// Per column: number of sets whose intersect columns contain it. Every set
/// must have been built with `mode`.
std::vector<std::size_t> higher_order_frequency(const std::vector<Bicluster>& sets,
                                                IntersectMode mode, std::size_t cols);

}  // namespace biclust
