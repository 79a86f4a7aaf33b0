#pragma once

// Integer-programming models of the parametric problems, serialized in the
// LP text format understood by common MIP solvers.
//
// Variables: y<i> = 1 iff row i is in S; z<j>_<k> = 0 iff column j is in N_k(S).
// Seeded models drop y<h> (row h is always in S) and keep z<j>_k only for the
// columns where x(h) holds k.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biclust/core.hpp"

namespace biclust {

struct LinearTerm {
  long long coef = 0;
  std::string var;

  bool operator==(const LinearTerm&) const = default;
};

enum class Sense { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::LessEqual;
  long long rhs = 0;

  bool operator==(const LinearConstraint&) const = default;
};

struct ModelVariable {
  std::string name;
  bool binary = true;
  std::optional<int> fixed;

  bool operator==(const ModelVariable&) const = default;
};

struct ModelObjective {
  bool maximize = true;
  std::vector<LinearTerm> terms;
  long long constant = 0;

  bool operator==(const ModelObjective&) const = default;
};

struct IPModel {
  std::string name;
  std::vector<std::string> comments;
  /// Row fixed into S by a seeded formulation.
  std::optional<std::size_t> seed_row;
  std::vector<ModelVariable> variables;
  ModelObjective objective;
  std::vector<LinearConstraint> constraints;

  bool operator==(const IPModel&) const = default;
};

struct ExportOptions {
  /// Replace r in the upper linking rows by the column counts f_j or r - f_j.
  bool strengthen = false;
  /// Fix variables whose value is forced and add the |S| valid inequalities.
  bool preprocess = false;
  std::optional<std::size_t> seed_row;
};

/// max |S| s.t. |N_v(S)| >= L1.
IPModel build_ip1(const BinaryMatrix& matrix, IntersectMode mode, std::size_t l1,
                  const ExportOptions& opts = {});

/// max |N_v(S)| s.t. |S| >= L2, with 1 <= L2 <= r.
IPModel build_ip2(const BinaryMatrix& matrix, IntersectMode mode, std::size_t l2,
                  const ExportOptions& opts = {});

/// The bi-objective model as two single-objective models over the same
/// linking rows: first max |S|, then max |N_v(S)|. Seeding is not supported.
std::pair<IPModel, IPModel> build_biobjective(const BinaryMatrix& matrix, IntersectMode mode,
                                              const ExportOptions& opts = {});

void write_model(const IPModel& model, std::ostream& out);
std::string model_to_string(const IPModel& model);
/// Reads text produced by write_model. Throws ParseError on anything else.
IPModel read_model(std::istream& in);

/// Sets y, z from S and checks fixings and every constraint. A seeded model
/// rejects any S without its seed row.
bool verify_assignment(const IPModel& model, const RowSet& rows, const BinaryMatrix& matrix,
                       IntersectMode mode);

}  // namespace biclust
