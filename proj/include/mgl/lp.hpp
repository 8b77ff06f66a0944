#pragma once

#include <vector>

#include "mgl/rational.hpp"

namespace mgl::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Row {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::Equal;
  Rational rhs;
};

/// maximize objective·x subject to rows; every variable is free (unbounded
/// in both directions).
struct Problem {
  std::size_t num_variables = 0;
  std::vector<Row> rows;
  std::vector<Rational> objective;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Exact two-phase primal simplex over the rationals with Bland's rule, so
/// the pivot sequence (and the returned vertex) is deterministic.
Result solve(const Problem& problem);

}  // namespace mgl::lp
