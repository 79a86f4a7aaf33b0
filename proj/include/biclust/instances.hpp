#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "biclust/core.hpp"

namespace biclust {

/// Parameters of a random instance. Each entry is 1 with probability `density`.
struct GenSpec {
  std::size_t rows = 1;
  std::size_t cols = 1;
  double density = 0.5;
  std::uint64_t rng_seed = 0;
};

/// Draws a matrix from std::mt19937_64 seeded with `rng_seed`. Each cell
/// consumes one 64-bit draw, converted to a uniform double in [0,1) from its
/// top 53 bits, so the output is identical on every conforming platform.
BinaryMatrix generate(const GenSpec& spec);

/// Target row x(h): argmax |N_v({i})| for Zero/One, argmax ||N_0| - |N_1|| for
/// ZeroOne. Ties go to the lowest index.
std::size_t choose_target(const BinaryMatrix& matrix, IntersectMode mode);

/// L = |N_v(R)| + alpha (|N_v({h})| - |N_v(R)|), rounded to nearest with halves up.
std::size_t compute_l1(const BinaryMatrix& matrix, IntersectMode mode, std::size_t target_row,
                       double alpha);

/// Text format: header "r n", then r lines of n space-separated 0/1 tokens.
/// Blank lines and lines starting with '#' are skipped.
BinaryMatrix read_instance(std::istream& in);
void write_instance(const BinaryMatrix& matrix, std::ostream& out);

BinaryMatrix read_instance_file(const std::string& path);
void write_instance_file(const BinaryMatrix& matrix, const std::string& path);

/// The two worked examples: "construction_4x11" and "algorithm_12x12".
const std::map<std::string, BinaryMatrix>& paper_examples();

/// Resolves a reserved example name, or reads the file at `path_or_name`.
BinaryMatrix load_instance(const std::string& path_or_name);

}  // namespace biclust
