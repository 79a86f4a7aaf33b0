#include "biclust/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace biclust {

InfeasibleSeed::InfeasibleSeed(std::size_t seed_row, std::size_t seed_count, std::size_t bound)
    : std::runtime_error("seed row " + std::to_string(seed_row) + " has |N_v| = " +
                         std::to_string(seed_count) + " < bound " + std::to_string(bound)),
      seed_row_(seed_row),
      seed_count_(seed_count),
      bound_(bound) {}

EnumerationLimit::EnumerationLimit(std::size_t rows, std::size_t limit)
    : std::runtime_error("exhaustive enumeration refused: r = " + std::to_string(rows) +
                         " exceeds limit " + std::to_string(limit)),
      rows_(rows),
      limit_(limit) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

std::string_view to_string(IntersectMode mode) {
  switch (mode) {
    case IntersectMode::Zero:
      return "0";
    case IntersectMode::One:
      return "1";
    case IntersectMode::ZeroOne:
      return "01";
  }
  return "?";
}

IntersectMode parse_mode(std::string_view text) {
  if (text == "0" || text == "zero") return IntersectMode::Zero;
  if (text == "1" || text == "one") return IntersectMode::One;
  if (text == "01" || text == "zeroone") return IntersectMode::ZeroOne;
  throw PreconditionError("unknown intersect mode '" + std::string(text) + "' (expected 0, 1 or 01)");
}

// ---------------------------------------------------------------------------
// BinaryMatrix
// ---------------------------------------------------------------------------

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  if (rows == 0 || cols == 0) {
    throw PreconditionError("matrix needs at least one row and one column");
  }
  cells_.assign(rows_ * cols_, 0);
  ones_.assign(rows_ * words_, 0);
  full_mask_.assign(words_, ~Word{0});
  if (cols_ % 64 != 0) full_mask_.back() = (Word{1} << (cols_ % 64)) - 1;
  zeros_.resize(rows_ * words_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(full_mask_.begin(), full_mask_.end(), zeros_.begin() + i * words_);
  }
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw PreconditionError("matrix needs at least one row and one column");
  }
  BinaryMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw PreconditionError("row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(m.cols_));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) {
      int v = rows[i][j];
      if (v != 0 && v != 1) {
        throw PreconditionError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") is not 0/1");
      }
      m.set(i + 1, j + 1, v == 1);
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> nested;
  nested.reserve(rows.size());
  for (const auto& r : rows) nested.emplace_back(r);
  return from_rows(nested);
}

void BinaryMatrix::check_row(std::size_t row) const {
  if (row < 1 || row > rows_) {
    throw PreconditionError("row index " + std::to_string(row) + " outside 1.." + std::to_string(rows_));
  }
}

void BinaryMatrix::check_col(std::size_t col) const {
  if (col < 1 || col > cols_) {
    throw PreconditionError("column index " + std::to_string(col) + " outside 1.." +
                            std::to_string(cols_));
  }
}

bool BinaryMatrix::at(std::size_t row, std::size_t col) const {
  check_row(row);
  check_col(col);
  return cells_[(row - 1) * cols_ + (col - 1)] != 0;
}

void BinaryMatrix::set(std::size_t row, std::size_t col, bool value) {
  check_row(row);
  check_col(col);
  std::size_t i = row - 1;
  std::size_t j = col - 1;
  cells_[i * cols_ + j] = value ? 1 : 0;
  Word bit = Word{1} << (j % 64);
  Word& one = ones_[i * words_ + j / 64];
  Word& zero = zeros_[i * words_ + j / 64];
  if (value) {
    one |= bit;
    zero &= ~bit;
  } else {
    one &= ~bit;
    zero |= bit;
  }
}

std::span<const std::uint8_t> BinaryMatrix::row_values(std::size_t row) const {
  check_row(row);
  return {cells_.data() + (row - 1) * cols_, cols_};
}

std::span<const Word> BinaryMatrix::packed_ones(std::size_t row) const {
  check_row(row);
  return {ones_.data() + (row - 1) * words_, words_};
}

std::span<const Word> BinaryMatrix::packed_zeros(std::size_t row) const {
  check_row(row);
  return {zeros_.data() + (row - 1) * words_, words_};
}

std::size_t BinaryMatrix::column_ones(std::size_t col) const {
  check_col(col);
  std::size_t f = 0;
  for (std::size_t i = 0; i < rows_; ++i) f += cells_[i * cols_ + (col - 1)];
  return f;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && cells_ == other.cells_;
}

// ---------------------------------------------------------------------------
// TernaryVector
// ---------------------------------------------------------------------------

TernaryVector TernaryVector::from_row(std::span<const std::uint8_t> values) {
  std::vector<Trit> comps;
  comps.reserve(values.size());
  for (auto v : values) comps.push_back(v ? Trit::One : Trit::Zero);
  return TernaryVector(std::move(comps));
}

TernaryVector TernaryVector::parse(std::string_view text) {
  std::vector<Trit> comps;
  for (char c : text) {
    switch (c) {
      case '0':
        comps.push_back(Trit::Zero);
        break;
      case '1':
        comps.push_back(Trit::One);
        break;
      case '#':
        comps.push_back(Trit::Hash);
        break;
      case ' ':
      case '\t':
      case ',':
        break;
      default:
        throw PreconditionError(std::string("invalid ternary symbol '") + c + "'");
    }
  }
  return TernaryVector(std::move(comps));
}

std::string TernaryVector::to_string() const {
  std::string out;
  out.reserve(comps_.size());
  for (Trit t : comps_) out.push_back(t == Trit::Zero ? '0' : t == Trit::One ? '1' : '#');
  return out;
}

std::vector<ObjectivePoint> ParetoFront::objective_points() const {
  std::vector<ObjectivePoint> out;
  out.reserve(points.size());
  for (const auto& e : points) out.push_back(e.point);
  return out;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

RowSet normalize_rows(const BinaryMatrix& matrix, RowSet rows) {
  if (rows.empty()) throw PreconditionError("row set S must be nonempty");
  for (auto i : rows) matrix.check_row(i);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

namespace {

bool counts_toward(Trit t, IntersectMode mode) {
  switch (mode) {
    case IntersectMode::Zero:
      return t == Trit::Zero;
    case IntersectMode::One:
      return t == Trit::One;
    case IntersectMode::ZeroOne:
      return t != Trit::Hash;
  }
  return false;
}

}  // namespace

ColSet intersect_sets(const BinaryMatrix& matrix, const RowSet& rows, IntersectMode mode) {
  RowSet s = normalize_rows(matrix, rows);
  const std::size_t words = matrix.words_per_row();
  std::vector<Word> all_zero(matrix.full_mask());
  std::vector<Word> all_one(matrix.full_mask());
  for (auto i : s) {
    auto z = matrix.packed_zeros(i);
    auto o = matrix.packed_ones(i);
    for (std::size_t w = 0; w < words; ++w) {
      all_zero[w] &= z[w];
      all_one[w] &= o[w];
    }
  }
  ColSet cols;
  for (std::size_t w = 0; w < words; ++w) {
    Word bits = 0;
    if (mode != IntersectMode::One) bits |= all_zero[w];
    if (mode != IntersectMode::Zero) bits |= all_one[w];
    while (bits) {
      cols.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)) + 1);
      bits &= bits - 1;
    }
  }
  return cols;
}

Bicluster make_bicluster(const BinaryMatrix& matrix, RowSet rows, IntersectMode mode) {
  Bicluster b;
  b.rows = normalize_rows(matrix, std::move(rows));
  b.cols = intersect_sets(matrix, b.rows, mode);
  b.mode = mode;
  return b;
}

TernaryVector ternary_meet(const TernaryVector& lhs, const TernaryVector& rhs) {
  if (lhs.size() != rhs.size()) {
    throw PreconditionError("ternary_meet: length mismatch " + std::to_string(lhs.size()) + " vs " +
                            std::to_string(rhs.size()));
  }
  std::vector<Trit> out(lhs.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (lhs[j] == rhs[j]) ? lhs[j] : Trit::Hash;
  }
  return TernaryVector(std::move(out));
}

TernaryVector analog_vector(const BinaryMatrix& matrix, const RowSet& rows) {
  RowSet s = normalize_rows(matrix, rows);
  TernaryVector z = TernaryVector::from_row(matrix.row_values(s.front()));
  for (std::size_t k = 1; k < s.size(); ++k) {
    z = ternary_meet(z, TernaryVector::from_row(matrix.row_values(s[k])));
  }
  return z;
}

std::size_t count_v(const TernaryVector& z, IntersectMode mode) {
  return static_cast<std::size_t>(std::count_if(z.components().begin(), z.components().end(),
                                                [mode](Trit t) { return counts_toward(t, mode); }));
}

TernaryVector restrict_to_mode(const TernaryVector& z, IntersectMode mode) {
  std::vector<Trit> out(z.components());
  for (auto& t : out) {
    if (!counts_toward(t, mode)) t = Trit::Hash;
  }
  return TernaryVector(std::move(out));
}

std::size_t row_count(const BinaryMatrix& matrix, std::size_t row, IntersectMode mode) {
  auto ones = matrix.packed_ones(row);
  std::size_t n1 = 0;
  for (auto w : ones) n1 += static_cast<std::size_t>(std::popcount(w));
  switch (mode) {
    case IntersectMode::Zero:
      return matrix.cols() - n1;
    case IntersectMode::One:
      return n1;
    case IntersectMode::ZeroOne:
      return matrix.cols();
  }
  return 0;
}

bool dominates(const ObjectivePoint& p, const ObjectivePoint& q) noexcept {
  return p.size_s >= q.size_s && p.size_n >= q.size_n && (p.size_s > q.size_s || p.size_n > q.size_n);
}

IdealNadir ideal_nadir(const BinaryMatrix& matrix, IntersectMode mode) {
  IdealNadir out;
  out.ideal.size_s = matrix.rows();
  if (mode == IntersectMode::ZeroOne) {
    out.ideal.size_n = matrix.cols();
  } else {
    for (std::size_t i = 1; i <= matrix.rows(); ++i) {
      out.ideal.size_n = std::max(out.ideal.size_n, row_count(matrix, i, mode));
    }
  }
  RowSet all(matrix.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
  out.nadir.size_s = 1;
  out.nadir.size_n = intersect_sets(matrix, all, mode).size();
  return out;
}

RowSet overlap(const RowSet& a, const RowSet& b) {
  RowSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string join_indices(const std::vector<std::size_t>& indices, char sep) {
  std::ostringstream os;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) os << sep;
    os << indices[k];
  }
  return os.str();
}

}  // namespace biclust
