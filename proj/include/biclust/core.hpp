#pragma once

// Core data types for bi-objective biclustering of 0/1 matrices and the
// intersect-set / analog-vector algebra the solvers are built on.
//
// Index convention: every row and column index that crosses this API is
// 1-based (row 1 is x(1), column 1 is the first feature). Row and column sets
// are kept sorted ascending.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biclust/errors.hpp"

namespace biclust {

/// Which agreement value defines the intersect set N_v(S).
enum class IntersectMode { Zero, One, ZeroOne };

/// "0", "1" or "01".
std::string_view to_string(IntersectMode mode);
/// Accepts "0", "1", "01" (also "zero", "one", "zeroone"); throws PreconditionError otherwise.
IntersectMode parse_mode(std::string_view text);

using RowSet = std::vector<std::size_t>;
using ColSet = std::vector<std::size_t>;
using Word = std::uint64_t;

/// The reference set R stored as an r x n matrix of bits. Row i is the
/// solution x(i). Besides the byte-per-cell view, each row is also kept as
/// packed 64-bit masks of its one- and zero-positions for fast intersection.
class BinaryMatrix {
 public:
  /// All-zeros matrix. Both dimensions must be at least 1.
  BinaryMatrix(std::size_t rows, std::size_t cols);

  /// Builds from nested rows; every entry must be 0 or 1 and rows must have equal length.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BinaryMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);

  /// Cell values of x(row), one byte (0 or 1) per column.
  std::span<const std::uint8_t> row_values(std::size_t row) const;
  std::span<const Word> packed_ones(std::size_t row) const;
  std::span<const Word> packed_zeros(std::size_t row) const;

  /// f_j: number of rows with a one in column `col`.
  std::size_t column_ones(std::size_t col) const;

  /// Words with every valid column bit set (tail bits of the last word cleared).
  const std::vector<Word>& full_mask() const noexcept { return full_mask_; }

  void check_row(std::size_t row) const;
  void check_col(std::size_t col) const;

  bool operator==(const BinaryMatrix& other) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint8_t> cells_;
  std::vector<Word> ones_;
  std::vector<Word> zeros_;
  std::vector<Word> full_mask_;
};

/// One component of an analog vector.
enum class Trit : std::uint8_t { Zero = 0, One = 1, Hash = 2 };

/// Vector over {0, 1, #}. The # symbol is stored explicitly and marks a
/// column on which the combined rows disagree.
class TernaryVector {
 public:
  TernaryVector() = default;
  explicit TernaryVector(std::vector<Trit> comps) : comps_(std::move(comps)) {}

  /// Copies a 0/1 row verbatim.
  static TernaryVector from_row(std::span<const std::uint8_t> values);
  /// Parses "01#..." (whitespace ignored). Throws PreconditionError on other symbols.
  static TernaryVector parse(std::string_view text);

  std::size_t size() const noexcept { return comps_.size(); }
  Trit operator[](std::size_t j) const { return comps_[j]; }
  const std::vector<Trit>& components() const noexcept { return comps_; }

  /// Compact rendering, e.g. "#10##1####0".
  std::string to_string() const;

  bool operator==(const TernaryVector&) const = default;

 private:
  std::vector<Trit> comps_;
};

/// Objective pair (|S|, |N_v(S)|).
struct ObjectivePoint {
  std::size_t size_s = 0;
  std::size_t size_n = 0;

  bool operator==(const ObjectivePoint&) const = default;
};

/// A row subset S together with its intersect columns N_v(S).
struct Bicluster {
  RowSet rows;
  ColSet cols;
  IntersectMode mode = IntersectMode::Zero;

  ObjectivePoint objectives() const { return {rows.size(), cols.size()}; }

  bool operator==(const Bicluster&) const = default;
};

struct IdealNadir {
  ObjectivePoint ideal;
  ObjectivePoint nadir;
};

/// Efficient point with a representative bicluster attaining it.
struct FrontEntry {
  ObjectivePoint point;
  Bicluster representative;
};

/// One iteration of an epsilon-constraint sweep. `bound` is the lower limit
/// imposed on the constrained objective; `solution` is empty when the
/// subproblem could not be solved at that bound.
struct TraceRow {
  std::size_t iter = 0;
  std::size_t bound = 0;
  std::optional<Bicluster> solution;
};

struct ParetoFront {
  /// Mutually nondominated, sorted by descending |S|.
  std::vector<FrontEntry> points;
  /// Raw iteration log including dominated points.
  std::vector<TraceRow> trace;

  std::vector<ObjectivePoint> objective_points() const;
};

/// Sorts and deduplicates a row set, checking every index against the matrix.
/// Throws PreconditionError on an empty set or an out-of-range index.
RowSet normalize_rows(const BinaryMatrix& matrix, RowSet rows);

/// N_v(S): columns where every row of S holds v (either value for ZeroOne).
ColSet intersect_sets(const BinaryMatrix& matrix, const RowSet& rows, IntersectMode mode);

/// Builds the bicluster (S, N_v(S)) for a nonempty row set.
Bicluster make_bicluster(const BinaryMatrix& matrix, RowSet rows, IntersectMode mode);

/// Componentwise meet: equal components survive, everything else becomes #.
TernaryVector ternary_meet(const TernaryVector& lhs, const TernaryVector& rhs);

/// Fold of ternary_meet over the rows of S (in ascending row order).
TernaryVector analog_vector(const BinaryMatrix& matrix, const RowSet& rows);

/// |z|_v.
std::size_t count_v(const TernaryVector& z, IntersectMode mode);

/// Replaces every component that does not count toward |z|_v with #.
TernaryVector restrict_to_mode(const TernaryVector& z, IntersectMode mode);

/// |N_v({row})|, i.e. |x(row)|_v.
std::size_t row_count(const BinaryMatrix& matrix, std::size_t row, IntersectMode mode);

/// Pareto dominance on (|S|, |N|): weakly better in both, strictly in one.
bool dominates(const ObjectivePoint& p, const ObjectivePoint& q) noexcept;

IdealNadir ideal_nadir(const BinaryMatrix& matrix, IntersectMode mode);

/// Row indices in both sets.
RowSet overlap(const RowSet& a, const RowSet& b);

/// "1;2;3" style join used by the CSV writers.
std::string join_indices(const std::vector<std::size_t>& indices, char sep = ';');

}  // namespace biclust
