#pragma once

#include <vector>

#include "polyft/core.hpp"

namespace polyft::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Row {
  Vector coeffs;
  Sense sense;
  double rhs;
};

// minimize objective . x  subject to rows, with x_j >= 0 unless free[j].
class Problem {
 public:
  explicit Problem(int num_vars);

  int num_vars() const { return num_vars_; }

  void set_free(int var, bool is_free = true) { free_[var] = is_free; }
  void set_objective(const Vector& c) { objective_ = c; }
  void add_row(const Vector& coeffs, Sense sense, double rhs);

  const std::vector<Row>& rows() const { return rows_; }
  const Vector& objective() const { return objective_; }
  bool is_free(int var) const { return free_[var]; }

 private:
  int num_vars_;
  Vector objective_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

struct Result {
  Status status = Status::Infeasible;
  Vector x;
  double objective = 0.0;
  int iterations = 0;
};

struct Options {
  double pivot_tol = 1e-11;
  double feasibility_tol = 1e-9;
  int max_iterations = 200000;
};

// Dense two-phase tableau simplex with Bland's rule. Deterministic.
Result solve(const Problem& problem, const Options& options = {});

}  // namespace polyft::lp
