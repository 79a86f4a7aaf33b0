#pragma once

// Exhaustive oracles for the parametric problems and the full efficient set.
// Row subsets are enumerated depth-first in lexicographic order of their
// sorted index sequences; since |N_v| can only shrink when rows are added,
// whole subtrees are cut as soon as they cannot matter.

#include <chrono>
#include <optional>

#include "biclust/core.hpp"

namespace biclust {

struct ExactLimits {
  std::size_t max_r_enumeration = 22;
};

/// Defaults, overridden by the BICLUST_MAX_R environment variable when set.
ExactLimits limits_from_env();

enum class ExactTieBreak {
  /// Among optima prefer the larger other objective, then the lexicographically smallest rows.
  LargerSecondary,
  /// The lexicographically first optimum of the primary objective alone.
  FirstFound,
};

struct ExactOptions {
  ExactLimits limits;
  /// Restrict to sets containing this row.
  std::optional<std::size_t> seed_row;
  ExactTieBreak tie_break = ExactTieBreak::LargerSecondary;
  /// Throws TimeBudgetExceeded once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// max |S| s.t. |N_v(S)| >= L1. Empty when nothing is feasible.
std::optional<Bicluster> exact_g1(const BinaryMatrix& matrix, IntersectMode mode, std::size_t l1,
                                  const ExactOptions& opts = {});

/// max |N_v(S)| s.t. |S| >= L2, with 1 <= L2 <= r.
Bicluster exact_g2(const BinaryMatrix& matrix, IntersectMode mode, std::size_t l2,
                   const ExactOptions& opts = {});

/// Complete nondominated front, one representative per point (lexicographically
/// smallest rows), sorted by descending |S|. The trace stays empty.
ParetoFront exact_pareto(const BinaryMatrix& matrix, IntersectMode mode, const ExactLimits& limits = {});

/// Every a_ij with i in S, j in M equals v. Only Zero and One are accepted.
bool is_biclique(const BinaryMatrix& matrix, IntersectMode mode, const RowSet& rows, const ColSet& cols);

/// A biclique to which no further row or column can be added.
bool is_maximal_biclique(const BinaryMatrix& matrix, IntersectMode mode, const RowSet& rows,
                         const ColSet& cols);

}  // namespace biclust
