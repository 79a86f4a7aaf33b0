#include "biclust/pareto.hpp"

#include <algorithm>
#include <ostream>

#include "biclust/construct.hpp"
#include "biclust/instances.hpp"

namespace biclust {

namespace {

RowSet all_rows(const BinaryMatrix& matrix) {
  RowSet rows(matrix.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i + 1;
  return rows;
}

// Indices of the entries of `points` that survive dominance and duplicate removal.
std::vector<std::size_t> surviving(const std::vector<ObjectivePoint>& points) {
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < points.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < points.size() && !drop; ++b) {
      if (b == a) continue;
      if (dominates(points[b], points[a]) || (b < a && points[b] == points[a])) drop = true;
    }
    if (!drop) keep.push_back(a);
  }
  return keep;
}

bool better_pair(const Bicluster& cand, const Bicluster& incumbent, int p) {
  auto c = cand.objectives();
  auto i = incumbent.objectives();
  if (p == 1) return c.size_s > i.size_s || (c.size_s == i.size_s && c.size_n > i.size_n);
  return c.size_n > i.size_n || (c.size_n == i.size_n && c.size_s > i.size_s);
}

std::optional<Bicluster> heuristic_solve(const BinaryMatrix& matrix, const EpsilonConfig& cfg,
                                         std::size_t bound) {
  std::vector<std::size_t> seeds;
  if (cfg.seed_rule == SeedRule::Target) {
    seeds.push_back(choose_target(matrix, cfg.mode));
  } else {
    seeds = all_rows(matrix);
  }
  std::optional<Bicluster> best;
  for (std::size_t h : seeds) {
    HeuristicConfig hc;
    hc.mode = cfg.mode;
    hc.bound = bound;
    hc.seed_row = h;
    Bicluster s;
    if (cfg.p == 1) {
      if (bound > row_count(matrix, h, cfg.mode)) continue;
      s = cfg.accelerated ? algorithm1_accelerated(matrix, hc) : algorithm1(matrix, hc);
    } else {
      s = cfg.accelerated ? algorithm2_accelerated(matrix, hc) : algorithm2(matrix, hc);
    }
    if (!best || better_pair(s, *best, cfg.p)) best = std::move(s);
  }
  return best;
}

}  // namespace

std::vector<ObjectivePoint> filter_dominated(const std::vector<ObjectivePoint>& points) {
  std::vector<ObjectivePoint> out;
  for (std::size_t k : surviving(points)) out.push_back(points[k]);
  return out;
}

ParetoFront epsilon_constraint(const BinaryMatrix& matrix, const EpsilonConfig& cfg) {
  if (cfg.p != 1 && cfg.p != 2) throw PreconditionError("p must be 1 or 2");
  if (cfg.epsilon < 1) throw PreconditionError("epsilon must be at least 1");
  const bool exact = cfg.solver == SubproblemSolver::Exact;
  ExactOptions eopts;
  eopts.limits = cfg.limits;
  if (exact && matrix.rows() > cfg.limits.max_r_enumeration) {
    throw EnumerationLimit(matrix.rows(), cfg.limits.max_r_enumeration);
  }

  const IdealNadir in = ideal_nadir(matrix, cfg.mode);
  ParetoFront front;
  TraceRow first;
  first.iter = 1;
  if (cfg.p == 1) {
    first.bound = in.nadir.size_n;
    first.solution = make_bicluster(matrix, all_rows(matrix), cfg.mode);
  } else {
    first.bound = in.nadir.size_s;
    std::size_t h = 1;
    for (std::size_t i = 1; i <= matrix.rows(); ++i) {
      if (row_count(matrix, i, cfg.mode) == in.ideal.size_n) {
        h = i;
        break;
      }
    }
    first.solution = make_bicluster(matrix, {h}, cfg.mode);
  }
  front.trace.push_back(std::move(first));

  const std::size_t limit = cfg.p == 1 ? in.ideal.size_n : in.ideal.size_s;
  std::size_t bound = (cfg.p == 1 ? in.nadir.size_n : in.nadir.size_s) + cfg.epsilon;
  while (bound <= limit) {
    TraceRow row;
    row.iter = front.trace.size() + 1;
    row.bound = bound;
    if (exact) {
      if (cfg.p == 1) {
        row.solution = exact_g1(matrix, cfg.mode, bound, eopts);
      } else {
        row.solution = exact_g2(matrix, cfg.mode, bound, eopts);
      }
    } else {
      row.solution = heuristic_solve(matrix, cfg, bound);
    }
    if (!row.solution) {
      front.trace.push_back(std::move(row));
      break;
    }
    auto pt = row.solution->objectives();
    bound = (cfg.p == 1 ? pt.size_n : pt.size_s) + cfg.epsilon;
    front.trace.push_back(std::move(row));
  }

  std::vector<ObjectivePoint> pts;
  std::vector<const Bicluster*> reps;
  for (const auto& t : front.trace) {
    if (!t.solution) continue;
    pts.push_back(t.solution->objectives());
    reps.push_back(&*t.solution);
  }
  for (std::size_t k : surviving(pts)) front.points.push_back({pts[k], *reps[k]});
  std::stable_sort(front.points.begin(), front.points.end(), [](const FrontEntry& a, const FrontEntry& b) {
    return a.point.size_s > b.point.size_s;
  });
  return front;
}

void write_front_csv(const ParetoFront& front, std::ostream& out, bool filtered) {
  out << "iter,L,size_S,size_N,rows,cols\n";
  if (!filtered) {
    for (const auto& t : front.trace) {
      out << t.iter << ',' << t.bound << ',';
      if (t.solution) {
        const auto& s = *t.solution;
        out << s.rows.size() << ',' << s.cols.size() << ',' << join_indices(s.rows) << ','
            << join_indices(s.cols);
      } else {
        out << ",,,";
      }
      out << '\n';
    }
    return;
  }
  std::size_t k = 0;
  for (const auto& e : front.points) {
    ++k;
    // Reuse the originating trace row when there is one.
    std::size_t iter = k;
    std::string bound;
    for (const auto& t : front.trace) {
      if (t.solution && t.solution->rows == e.representative.rows) {
        iter = t.iter;
        bound = std::to_string(t.bound);
        break;
      }
    }
    out << iter << ',' << bound << ',' << e.point.size_s << ',' << e.point.size_n << ','
        << join_indices(e.representative.rows) << ',' << join_indices(e.representative.cols) << '\n';
  }
}

}  // namespace biclust
