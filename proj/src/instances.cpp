#include "biclust/instances.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace biclust {

BinaryMatrix generate(const GenSpec& spec) {
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw PreconditionError("density must lie in [0,1]");
  }
  BinaryMatrix m(spec.rows, spec.cols);
  std::mt19937_64 rng(spec.rng_seed);
  constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
  for (std::size_t i = 1; i <= spec.rows; ++i) {
    for (std::size_t j = 1; j <= spec.cols; ++j) {
      double u = static_cast<double>(rng() >> 11) * scale;
      if (u < spec.density) m.set(i, j, true);
    }
  }
  return m;
}

std::size_t choose_target(const BinaryMatrix& matrix, IntersectMode mode) {
  std::size_t best_row = 1;
  std::size_t best_score = 0;
  for (std::size_t i = 1; i <= matrix.rows(); ++i) {
    std::size_t score;
    if (mode == IntersectMode::ZeroOne) {
      std::size_t n0 = row_count(matrix, i, IntersectMode::Zero);
      std::size_t n1 = row_count(matrix, i, IntersectMode::One);
      score = n0 > n1 ? n0 - n1 : n1 - n0;
    } else {
      score = row_count(matrix, i, mode);
    }
    if (i == 1 || score > best_score) {
      best_row = i;
      best_score = score;
    }
  }
  return best_row;
}

std::size_t compute_l1(const BinaryMatrix& matrix, IntersectMode mode, std::size_t target_row,
                       double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw PreconditionError("alpha must lie in [0,1]");
  matrix.check_row(target_row);
  RowSet all(matrix.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
  double whole = static_cast<double>(intersect_sets(matrix, all, mode).size());
  double seed = static_cast<double>(intersect_sets(matrix, {target_row}, mode).size());
  double value = whole + alpha * (seed - whole);
  // The epsilon absorbs representation error in products like 0.3 * 5.
  return static_cast<std::size_t>(std::floor(value + 0.5 + 1e-9));
}

// ---------------------------------------------------------------------------
// Text I/O
// ---------------------------------------------------------------------------

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

BinaryMatrix read_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream hs(line);
    long long r = -1;
    long long n = -1;
    std::string extra;
    if (!(hs >> r >> n) || (hs >> extra) || r < 1 || n < 1) {
      throw ParseError(line_no, "malformed header, expected 'r n' with positive integers");
    }
    rows = static_cast<std::size_t>(r);
    cols = static_cast<std::size_t>(n);
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(line_no, "missing header line 'r n'");

  BinaryMatrix m(rows, cols);
  std::size_t filled = 0;
  while (filled < rows && std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    std::size_t j = 0;
    while (ls >> tok) {
      if (tok != "0" && tok != "1") {
        throw ParseError(line_no, "token '" + tok + "' is not 0 or 1");
      }
      ++j;
      if (j > cols) break;
      m.set(filled + 1, j, tok == "1");
    }
    if (j != cols) {
      throw ParseError(line_no, "expected " + std::to_string(cols) + " tokens, found " +
                                    (j > cols ? "more" : std::to_string(j)));
    }
    ++filled;
  }
  if (filled < rows) {
    throw ParseError(line_no, "expected " + std::to_string(rows) + " rows, found " + std::to_string(filled));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!skippable(line)) throw ParseError(line_no, "unexpected content after the last row");
  }
  return m;
}

void write_instance(const BinaryMatrix& matrix, std::ostream& out) {
  out << matrix.rows() << ' ' << matrix.cols() << '\n';
  for (std::size_t i = 1; i <= matrix.rows(); ++i) {
    auto row = matrix.row_values(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << static_cast<int>(row[j]);
    }
    out << '\n';
  }
}

BinaryMatrix read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open instance file '" + path + "'");
  return read_instance(in);
}

void write_instance_file(const BinaryMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file '" + path + "'");
  write_instance(matrix, out);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

const std::map<std::string, BinaryMatrix>& paper_examples() {
  static const std::map<std::string, BinaryMatrix> examples = {
      {"construction_4x11", BinaryMatrix::from_rows({
                                {0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 0},
                                {1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0},
                                {0, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0},
                                {1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0},
                            })},
      {"algorithm_12x12", BinaryMatrix::from_rows({
                              {1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0},
                              {0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0},
                              {1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0},
                              {1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0},
                              {1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0},
                              {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
                              {0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1},
                              {0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1},
                              {0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1},
                              {0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
                              {1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1},
                              {0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1},
                          })},
  };
  return examples;
}

BinaryMatrix load_instance(const std::string& path_or_name) {
  const auto& named = paper_examples();
  if (auto it = named.find(path_or_name); it != named.end()) return it->second;
  return read_instance_file(path_or_name);
}

}  // namespace biclust
