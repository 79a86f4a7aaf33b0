#pragma once

// Epsilon-constraint sweep: keep objective p, impose a lower limit on the
// other one and raise it past each solved point until it exceeds the ideal.

#include <iosfwd>
#include <vector>

#include "biclust/core.hpp"
#include "biclust/exact.hpp"

namespace biclust {

enum class SubproblemSolver { Exact, Heuristic };

enum class SeedRule {
  /// One greedy run from the target row chosen by choose_target.
  Target,
  /// A greedy run from every row; the best (|S|, |N|) wins, earliest seed on ties.
  MultiSeed,
};

struct EpsilonConfig {
  IntersectMode mode = IntersectMode::Zero;
  /// 1 keeps |S| as the objective, 2 keeps |N_v(S)|.
  int p = 1;
  std::size_t epsilon = 1;
  SubproblemSolver solver = SubproblemSolver::Exact;
  SeedRule seed_rule = SeedRule::Target;
  ExactLimits limits;
  /// Use the accelerated greedy variants under the heuristic solver.
  bool accelerated = false;
};

/// Runs the sweep. The first trace row is the initial extreme point
/// (ideal_p, nadir_{3-p}) with the bound set to nadir_{3-p}.
ParetoFront epsilon_constraint(const BinaryMatrix& matrix, const EpsilonConfig& cfg);

/// Drops dominated points and repeats, keeping survivors in input order.
std::vector<ObjectivePoint> filter_dominated(const std::vector<ObjectivePoint>& points);

/// CSV with header `iter,L,size_S,size_N,rows,cols`. With `filtered` false
/// the raw trace is written (a failed subproblem leaves the last four fields
/// empty); otherwise one line per front point.
void write_front_csv(const ParetoFront& front, std::ostream& out, bool filtered = false);

}  // namespace biclust
