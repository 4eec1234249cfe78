// Copyright 2026 The skrates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKRATES_LP_HPP_
#define SKRATES_LP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "skrates/error.hpp"
#include "skrates/rational.hpp"

namespace skrates::lp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMinimize, kMaximize };
enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Variables are nonnegative; `upper_bounds`, when nonempty, holds one
// optional finite upper bound per variable.
struct LinearProgram {
  Sense sense = Sense::kMinimize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> upper_bounds;

  std::size_t num_variables() const { return objective.size(); }

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    constraints.push_back(Constraint{std::move(coefficients), relation, std::move(rhs)});
  }
};

struct Solution {
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Rational> point;
};

struct SolveOptions {
  // Among all optimal points return the lexicographically smallest one.
  bool lexicographic = true;
};

inline const char* to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace detail {

// Dense tableau for a minimization in equality form with Bland's rule.
// Row updates skip zero entries, which keeps the mostly-sparse tableaus of
// this library cheap.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols)), rhs_(rows), basis_(rows), cost_(cols), allowed_(cols, true) {}

  std::vector<std::vector<Rational>>& a() { return a_; }
  std::vector<Rational>& rhs() { return rhs_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<bool>& allowed() { return allowed_; }
  const std::vector<Rational>& reduced_costs() const { return cost_; }
  std::size_t cols() const { return cost_.size(); }
  std::size_t rows() const { return a_.size(); }

  // Installs a new objective and prices out the current basis.
  void set_objective(const std::vector<Rational>& c) {
    cost_ = c;
    cost_value_ = 0;
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (a_[i][j] != 0) cost_[j] -= cb * a_[i][j];
      }
      cost_value_ -= cb * rhs_[i];
    }
  }

  // Objective value of the current basic solution.
  Rational objective_value() const { return -cost_value_; }

  void pivot(std::size_t r, std::size_t c) {
    std::vector<std::size_t> support;
    const Rational inv = 1 / a_[r][c];
    for (std::size_t j = 0; j < cols(); ++j) {
      if (a_[r][j] != 0) {
        a_[r][j] *= inv;
        support.push_back(j);
      }
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational factor = a_[i][c];
      for (std::size_t j : support) a_[i][j] -= factor * a_[r][j];
      rhs_[i] -= factor * rhs_[r];
    }
    if (cost_[c] != 0) {
      const Rational factor = cost_[c];
      for (std::size_t j : support) cost_[j] -= factor * a_[r][j];
      cost_value_ -= factor * rhs_[r];
    }
    basis_[r] = c;
  }

  // Runs simplex iterations to optimality over the allowed columns.
  Status optimize() {
    for (;;) {
      std::size_t entering = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed_[j] && cost_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == cols()) return Status::kOptimal;
      std::size_t leaving = rows();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / a_[i][entering];
        if (leaving == rows() || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows()) return Status::kUnbounded;
      pivot(leaving, entering);
    }
  }

  void erase_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  std::optional<std::size_t> basic_row(std::size_t col) const {
    for (std::size_t i = 0; i < rows(); ++i) {
      if (basis_[i] == col) return i;
    }
    return std::nullopt;
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  Rational cost_value_;
  std::vector<bool> allowed_;
};

}  // namespace detail

// Two-phase dense simplex over exact rationals with Bland's anti-cycling
// rule. With `lexicographic` set, optimal faces are refined by minimizing
// x_0, x_1, ... in turn, so degenerate problems have a reproducible answer.
inline Solution solve(const LinearProgram& program, const SolveOptions& options = {}) {
  const std::size_t n = program.num_variables();
  if (!program.upper_bounds.empty() && program.upper_bounds.size() != n) {
    throw InputError("LP upper bound vector has the wrong dimension");
  }
  std::vector<Constraint> rows;
  for (const Constraint& c : program.constraints) {
    if (c.coefficients.size() != n) throw InputError("LP constraint has the wrong dimension");
    rows.push_back(c);
  }
  for (std::size_t j = 0; j < program.upper_bounds.size(); ++j) {
    if (!program.upper_bounds[j]) continue;
    std::vector<Rational> unit(n);
    unit[j] = 1;
    rows.push_back(Constraint{std::move(unit), Relation::kLessEqual, *program.upper_bounds[j]});
  }
  // Nonnegative right-hand sides.
  for (Constraint& c : rows) {
    if (c.rhs < 0) {
      for (Rational& x : c.coefficients) x = -x;
      c.rhs = -c.rhs;
      if (c.relation == Relation::kLessEqual) {
        c.relation = Relation::kGreaterEqual;
      } else if (c.relation == Relation::kGreaterEqual) {
        c.relation = Relation::kLessEqual;
      }
    }
  }

  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (const Constraint& c : rows) {
    if (c.relation != Relation::kEqual) ++slacks;
    if (c.relation != Relation::kLessEqual) ++artificials;
  }
  const std::size_t first_artificial = n + slacks;
  const std::size_t cols = first_artificial + artificials;
  detail::Tableau t(rows.size(), cols);
  std::size_t next_slack = n;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) t.a()[i][j] = rows[i].coefficients[j];
    t.rhs()[i] = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::kLessEqual:
        t.a()[i][next_slack] = 1;
        t.basis()[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        t.a()[i][next_slack++] = -1;
        t.a()[i][next_artificial] = 1;
        t.basis()[i] = next_artificial++;
        break;
      case Relation::kEqual:
        t.a()[i][next_artificial] = 1;
        t.basis()[i] = next_artificial++;
        break;
    }
  }

  Solution solution;
  if (artificials > 0) {
    std::vector<Rational> phase_one(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase_one[j] = 1;
    t.set_objective(phase_one);
    t.optimize();
    if (t.objective_value() != 0) return solution;
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant.
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basis()[i] < first_artificial) continue;
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.a()[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial) {
        t.erase_row(i);
      } else {
        t.pivot(i, col);
      }
    }
    for (std::size_t j = first_artificial; j < cols; ++j) t.allowed()[j] = false;
  }

  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = program.sense == Sense::kMinimize ? program.objective[j] : Rational(-program.objective[j]);
  }
  t.set_objective(cost);
  if (t.optimize() == Status::kUnbounded) {
    solution.status = Status::kUnbounded;
    return solution;
  }

  if (options.lexicographic) {
    // Columns priced strictly positive must stay at zero on the optimal face.
    auto freeze_priced_columns = [&t] {
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (t.allowed()[j] && t.reduced_costs()[j] > 0) t.allowed()[j] = false;
      }
    };
    freeze_priced_columns();
    for (std::size_t k = 0; k < n; ++k) {
      if (!t.allowed()[k]) continue;
      if (!t.basic_row(k)) {
        t.allowed()[k] = false;
        continue;
      }
      std::vector<Rational> unit(cols);
      unit[k] = 1;
      t.set_objective(unit);
      t.optimize();
      freeze_priced_columns();
    }
  }

  solution.status = Status::kOptimal;
  solution.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis()[i] < n) solution.point[t.basis()[i]] = t.rhs()[i];
  }
  solution.value = 0;
  for (std::size_t j = 0; j < n; ++j) solution.value += program.objective[j] * solution.point[j];
  return solution;
}

}  // namespace skrates::lp

#endif  // SKRATES_LP_HPP_
