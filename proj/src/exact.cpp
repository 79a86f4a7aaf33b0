#include "biclust/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace biclust {

ExactLimits limits_from_env() {
  ExactLimits limits;
  if (const char* env = std::getenv("BICLUST_MAX_R"); env && *env) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value < 1) {
      throw PreconditionError(std::string("BICLUST_MAX_R must be a positive integer, got '") + env + "'");
    }
    limits.max_r_enumeration = static_cast<std::size_t>(value);
  }
  return limits;
}

namespace {

void check_limit(const BinaryMatrix& matrix, const ExactLimits& limits) {
  if (limits.max_r_enumeration < 1) throw PreconditionError("max_r_enumeration must be at least 1");
  if (matrix.rows() > limits.max_r_enumeration) {
    throw EnumerationLimit(matrix.rows(), limits.max_r_enumeration);
  }
}

// Depth-first walk over nonempty row subsets in lexicographic preorder.
// Level d of the mask stacks holds the all-zero / all-one column masks of the
// current d-element prefix. The visitor sees (size, |N_v|, last row, holds
// seed) and answers whether to descend.
class Walker {
 public:
  Walker(const BinaryMatrix& matrix, IntersectMode mode, std::optional<std::size_t> seed,
         std::optional<std::chrono::steady_clock::time_point> deadline)
      : m_(matrix),
        mode_(mode),
        seed_(seed.value_or(0)),
        deadline_(deadline),
        words_(matrix.words_per_row()),
        zeros_((matrix.rows() + 1) * words_),
        ones_((matrix.rows() + 1) * words_) {
    std::copy(matrix.full_mask().begin(), matrix.full_mask().end(), zeros_.begin());
    std::copy(matrix.full_mask().begin(), matrix.full_mask().end(), ones_.begin());
  }

  const RowSet& current() const { return stack_; }

  template <class Visit>
  void run(Visit&& visit) {
    descend(0, 1, seed_ == 0, visit);
  }

 private:
  template <class Visit>
  void descend(std::size_t depth, std::size_t start, bool has_seed, Visit& visit) {
    const std::size_t r = m_.rows();
    for (std::size_t i = start; i <= r; ++i) {
      if (!has_seed && i > seed_) break;
      if (deadline_ && (++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
        throw TimeBudgetExceeded("exhaustive solve exceeded its time budget");
      }
      const Word* pz = zeros_.data() + depth * words_;
      const Word* po = ones_.data() + depth * words_;
      Word* nz = zeros_.data() + (depth + 1) * words_;
      Word* no = ones_.data() + (depth + 1) * words_;
      auto rz = m_.packed_zeros(i);
      auto ro = m_.packed_ones(i);
      std::size_t count = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        nz[w] = pz[w] & rz[w];
        no[w] = po[w] & ro[w];
        if (mode_ != IntersectMode::One) count += static_cast<std::size_t>(std::popcount(nz[w]));
        if (mode_ != IntersectMode::Zero) count += static_cast<std::size_t>(std::popcount(no[w]));
      }
      bool with_seed = has_seed || i == seed_;
      stack_.push_back(i);
      if (visit(depth + 1, count, i, with_seed)) descend(depth + 1, i + 1, with_seed, visit);
      stack_.pop_back();
    }
  }

  const BinaryMatrix& m_;
  IntersectMode mode_;
  std::size_t seed_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t words_;
  std::vector<Word> zeros_;
  std::vector<Word> ones_;
  RowSet stack_;
  std::size_t ticks_ = 0;
};

}  // namespace

std::optional<Bicluster> exact_g1(const BinaryMatrix& matrix, IntersectMode mode, std::size_t l1,
                                  const ExactOptions& opts) {
  check_limit(matrix, opts.limits);
  if (opts.seed_row) matrix.check_row(*opts.seed_row);
  const std::size_t r = matrix.rows();
  const bool secondary = opts.tie_break == ExactTieBreak::LargerSecondary;
  std::optional<RowSet> best;
  std::size_t best_size = 0;
  std::size_t best_count = 0;
  Walker walker(matrix, mode, opts.seed_row, opts.deadline);
  walker.run([&](std::size_t size, std::size_t count, std::size_t last, bool has_seed) {
    if (count < l1) return false;
    if (has_seed) {
      bool improves = !best || size > best_size ||
                      (secondary && size == best_size && count > best_count);
      if (improves) {
        best = walker.current();
        best_size = size;
        best_count = count;
      }
    }
    std::size_t reachable = size + (r - last);
    return best ? (reachable > best_size || (secondary && reachable == best_size && count > best_count))
                : true;
  });
  if (!best) return std::nullopt;
  return make_bicluster(matrix, *best, mode);
}

Bicluster exact_g2(const BinaryMatrix& matrix, IntersectMode mode, std::size_t l2,
                   const ExactOptions& opts) {
  check_limit(matrix, opts.limits);
  if (l2 < 1 || l2 > matrix.rows()) {
    throw PreconditionError("set-size bound must lie in [1, r], got " + std::to_string(l2));
  }
  if (opts.seed_row) matrix.check_row(*opts.seed_row);
  const std::size_t r = matrix.rows();
  const bool secondary = opts.tie_break == ExactTieBreak::LargerSecondary;
  std::optional<RowSet> best;
  std::size_t best_size = 0;
  std::size_t best_count = 0;
  Walker walker(matrix, mode, opts.seed_row, opts.deadline);
  walker.run([&](std::size_t size, std::size_t count, std::size_t last, bool has_seed) {
    std::size_t reachable = size + (r - last);
    if (reachable < l2) return false;
    if (best && count < best_count) return false;
    if (has_seed && size >= l2) {
      bool improves = !best || count > best_count ||
                      (secondary && count == best_count && size > best_size);
      if (improves) {
        best = walker.current();
        best_size = size;
        best_count = count;
      }
    }
    if (!best) return true;
    return count > best_count || (secondary && reachable > best_size);
  });
  // Every seed-containing set of size r qualifies, so a solution always exists.
  return make_bicluster(matrix, *best, mode);
}

ParetoFront exact_pareto(const BinaryMatrix& matrix, IntersectMode mode, const ExactLimits& limits) {
  check_limit(matrix, limits);
  const std::size_t r = matrix.rows();
  // best[k]: max |N_v| over sets of size k, holder[k] the first set reaching it.
  std::vector<long> best(r + 2, -1);
  std::vector<RowSet> holder(r + 1);
  Walker walker(matrix, mode, std::nullopt, std::nullopt);
  walker.run([&](std::size_t size, std::size_t count, std::size_t last, bool) {
    if (static_cast<long>(count) > best[size]) {
      best[size] = static_cast<long>(count);
      holder[size] = walker.current();
    }
    // Deeper sets have at most `count` columns; descend only if one of the
    // reachable sizes could still improve.
    std::size_t reachable = size + (r - last);
    for (std::size_t k = size + 1; k <= reachable; ++k) {
      if (static_cast<long>(count) > best[k]) return true;
    }
    return false;
  });
  ParetoFront front;
  for (std::size_t k = r; k >= 1; --k) {
    if (best[k] > best[k + 1]) {
      FrontEntry e;
      e.representative = make_bicluster(matrix, holder[k], mode);
      e.point = e.representative.objectives();
      front.points.push_back(std::move(e));
    }
  }
  return front;
}

namespace {

void check_biclique_args(IntersectMode mode, const RowSet& rows, const ColSet& cols) {
  if (mode == IntersectMode::ZeroOne) {
    throw PreconditionError("bicliques are defined for v = 0 or v = 1; split v = 01 into both graphs");
  }
  if (rows.empty() || cols.empty()) throw PreconditionError("biclique needs nonempty S and M");
}

}  // namespace

bool is_biclique(const BinaryMatrix& matrix, IntersectMode mode, const RowSet& rows, const ColSet& cols) {
  check_biclique_args(mode, rows, cols);
  const bool v = mode == IntersectMode::One;
  for (std::size_t i : rows) {
    for (std::size_t j : cols) {
      if (matrix.at(i, j) != v) return false;
    }
  }
  return true;
}

bool is_maximal_biclique(const BinaryMatrix& matrix, IntersectMode mode, const RowSet& rows,
                         const ColSet& cols) {
  if (!is_biclique(matrix, mode, rows, cols)) return false;
  RowSet s = normalize_rows(matrix, rows);
  ColSet m(cols);
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  if (intersect_sets(matrix, s, mode) != m) return false;
  const bool v = mode == IntersectMode::One;
  for (std::size_t i = 1; i <= matrix.rows(); ++i) {
    if (std::binary_search(s.begin(), s.end(), i)) continue;
    bool fits = std::all_of(m.begin(), m.end(), [&](std::size_t j) { return matrix.at(i, j) == v; });
    if (fits) return false;
  }
  return true;
}

}  // namespace biclust
