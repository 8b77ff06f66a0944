#include "mgl/lp.hpp"

#include <optional>

namespace mgl::lp {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols + 1)), cost_(cols + 1), basis_(rows), cols_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  /// Installs objective coefficients (maximize) and prices out the basis.
  void set_objective(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = j < c.size() ? c[j] : Rational(0);
    cost_[cols_] = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= cb * a_[r][j];
    }
  }

  Rational objective_value() const { return -cost_[cols_]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
    }
    if (cost_[c] != 0) {
      const Rational f = cost_[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (a_[r][j] != 0) cost_[j] -= f * a_[r][j];
      }
    }
    basis_[r] = c;
  }

  /// Bland's rule over columns [0, allowed).  Returns false when unbounded.
  bool run(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (a_[r][*enter] <= 0) continue;
        Rational ratio = a_[r][cols_] / a_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

Result solve(const Problem& problem) {
  const std::size_t n = problem.num_variables;
  const std::size_t m = problem.rows.size();
  for (const auto& row : problem.rows) {
    if (row.coefficients.size() != n) throw Error("LP row has the wrong number of coefficients");
  }

  // Normalize every row to a nonnegative right-hand side.
  struct NormalRow {
    std::vector<Rational> coef;
    Relation rel;
    Rational rhs;
  };
  std::vector<NormalRow> rows;
  rows.reserve(m);
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : problem.rows) {
    NormalRow nr{row.coefficients, row.relation, row.rhs};
    if (nr.rhs < 0) {
      for (auto& c : nr.coef) c = -c;
      nr.rhs = -nr.rhs;
      if (nr.rel == Relation::LessEqual) {
        nr.rel = Relation::GreaterEqual;
      } else if (nr.rel == Relation::GreaterEqual) {
        nr.rel = Relation::LessEqual;
      }
    }
    if (nr.rel != Relation::Equal) ++slack_count;
    if (nr.rel != Relation::LessEqual) ++artificial_count;
    rows.push_back(std::move(nr));
  }

  // Columns: x+ / x- pairs, then slacks, then artificials.
  const std::size_t structural = 2 * n;
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t cols = first_artificial + artificial_count;
  Tableau t(m, cols);
  std::size_t next_slack = structural;
  std::size_t next_art = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& nr = rows[r];
    for (std::size_t j = 0; j < n; ++j) {
      t.at(r, 2 * j) = nr.coef[j];
      t.at(r, 2 * j + 1) = -nr.coef[j];
    }
    t.rhs(r) = nr.rhs;
    if (nr.rel == Relation::LessEqual) {
      t.at(r, next_slack) = 1;
      t.basis()[r] = next_slack++;
    } else {
      if (nr.rel == Relation::GreaterEqual) t.at(r, next_slack++) = -1;
      t.at(r, next_art) = 1;
      t.basis()[r] = next_art++;
    }
  }

  Result result;
  if (artificial_count > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    if (!t.run(cols)) throw Error("LP phase one reported unbounded (solver inconsistency)");
    if (t.objective_value() < 0) {
      result.status = Status::Infeasible;
      return result;
    }
    // Drive artificial variables out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.at(r, j) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
  }

  std::vector<Rational> phase2(cols);
  for (std::size_t j = 0; j < n && j < problem.objective.size(); ++j) {
    phase2[2 * j] = problem.objective[j];
    phase2[2 * j + 1] = -problem.objective[j];
  }
  t.set_objective(phase2);
  if (!t.run(first_artificial)) {
    result.status = Status::Unbounded;
    return result;
  }
  result.status = Status::Optimal;
  result.value = t.objective_value();
  std::vector<Rational> raw(cols);
  for (std::size_t r = 0; r < t.rows(); ++r) raw[t.basis()[r]] = t.rhs(r);
  result.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.x[j] = raw[2 * j] - raw[2 * j + 1];
  return result;
}

}  // namespace mgl::lp
