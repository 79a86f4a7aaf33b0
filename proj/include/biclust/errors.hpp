#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biclust {

/// Raised when a caller violates an operation's documented precondition
/// (empty row set, index out of range, mismatched lengths, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The seed row alone already violates the lower bound on |N_v(S)|.
class InfeasibleSeed : public std::runtime_error {
 public:
  InfeasibleSeed(std::size_t seed_row, std::size_t seed_count, std::size_t bound);

  std::size_t seed_row() const noexcept { return seed_row_; }
  /// |N_v({h})| for the rejected seed.
  std::size_t seed_count() const noexcept { return seed_count_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t seed_row_;
  std::size_t seed_count_;
  std::size_t bound_;
};

/// The exhaustive oracle refuses instances with more rows than its limit.
class EnumerationLimit : public std::runtime_error {
 public:
  EnumerationLimit(std::size_t rows, std::size_t limit);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t rows_;
  std::size_t limit_;
};

/// An exhaustive solve ran past its wall-clock deadline.
class TimeBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance or model text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace biclust
