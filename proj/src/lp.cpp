#include "polyft/lp.hpp"

#include <cmath>
#include <limits>

namespace polyft::lp {

Problem::Problem(int num_vars)
    : num_vars_(num_vars), objective_(Vector::Zero(num_vars)), free_(num_vars, false) {}

void Problem::add_row(const Vector& coeffs, Sense sense, double rhs) {
  if (coeffs.size() != num_vars_) throw Error(ErrorCode::InvalidInput, "LP row has wrong width");
  rows_.push_back(Row{coeffs, sense, rhs});
}

namespace {

class Tableau {
 public:
  Tableau(Eigen::Index rows, Eigen::Index cols) : t_(Matrix::Zero(rows + 1, cols + 1)), basis_(rows, -1) {}

  double& at(Eigen::Index r, Eigen::Index c) { return t_(r, c); }
  double rhs(Eigen::Index r) const { return t_(r, t_.cols() - 1); }
  double& rhs(Eigen::Index r) { return t_(r, t_.cols() - 1); }
  double cost(Eigen::Index c) const { return t_(t_.rows() - 1, c); }
  double& cost(Eigen::Index c) { return t_(t_.rows() - 1, c); }
  Eigen::Index num_rows() const { return t_.rows() - 1; }
  Eigen::Index num_cols() const { return t_.cols() - 1; }
  std::vector<int>& basis() { return basis_; }
  Matrix& raw() { return t_; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const double p = t_(r, c);
    t_.row(r) /= p;
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    t_(r, c) = 1.0;
    basis_[r] = static_cast<int>(c);
  }

  // Runs Bland's rule on the current cost row. Columns >= allowed_cols never enter.
  Status run(Eigen::Index allowed_cols, const Options& options, int& iterations) {
    while (true) {
      if (iterations >= options.max_iterations) return Status::IterationLimit;
      Eigen::Index enter = -1;
      for (Eigen::Index c = 0; c < allowed_cols; ++c) {
        if (cost(c) < -options.pivot_tol * 10) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return Status::Optimal;
      Eigen::Index leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index r = 0; r < num_rows(); ++r) {
        const double a = t_(r, enter);
        if (a <= options.pivot_tol) continue;
        const double ratio = rhs(r) / a;
        if (leave < 0 || ratio < best_ratio - 1e-12) {
          leave = r;
          best_ratio = ratio;
        } else if (std::abs(ratio - best_ratio) <= 1e-12 && basis_[r] < basis_[leave]) {
          leave = r;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
      ++iterations;
    }
  }

 private:
  Matrix t_;
  std::vector<int> basis_;
};

}  // namespace

Result solve(const Problem& problem, const Options& options) {
  const int n = problem.num_vars();
  // Column layout: structural (free vars split in two), slacks, artificials.
  std::vector<int> pos_col(n), neg_col(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (problem.is_free(j)) neg_col[j] = cols++;
  }
  const int structural = cols;
  const auto& rows = problem.rows();
  const auto m = static_cast<Eigen::Index>(rows.size());

  int slacks = 0, artificials = 0;
  std::vector<double> sign(rows.size(), 1.0);
  std::vector<Sense> sense(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    sense[i] = rows[i].sense;
    if (rows[i].rhs < 0) {
      sign[i] = -1.0;
      if (sense[i] == Sense::LessEqual) sense[i] = Sense::GreaterEqual;
      else if (sense[i] == Sense::GreaterEqual) sense[i] = Sense::LessEqual;
    }
    if (sense[i] != Sense::Equal) ++slacks;
    if (sense[i] != Sense::LessEqual) ++artificials;
  }
  const Eigen::Index total_cols = structural + slacks + artificials;
  const Eigen::Index first_art = structural + slacks;
  Tableau tab(m, total_cols);

  int slack_at = structural, art_at = static_cast<int>(first_art);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Row& row = rows[static_cast<std::size_t>(i)];
    const double s = sign[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      tab.at(i, pos_col[j]) = s * row.coeffs(j);
      if (neg_col[j] >= 0) tab.at(i, neg_col[j]) = -s * row.coeffs(j);
    }
    tab.rhs(i) = s * row.rhs;
    switch (sense[static_cast<std::size_t>(i)]) {
      case Sense::LessEqual:
        tab.at(i, slack_at) = 1.0;
        tab.basis()[i] = slack_at++;
        break;
      case Sense::GreaterEqual:
        tab.at(i, slack_at++) = -1.0;
        tab.at(i, art_at) = 1.0;
        tab.basis()[i] = art_at++;
        break;
      case Sense::Equal:
        tab.at(i, art_at) = 1.0;
        tab.basis()[i] = art_at++;
        break;
    }
  }

  Result result;
  int iterations = 0;

  // Phase 1: minimize the sum of artificials.
  if (artificials > 0) {
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basis()[i] >= first_art) tab.raw().row(m) -= tab.raw().row(i);
    }
    for (Eigen::Index c = first_art; c < total_cols; ++c) tab.cost(c) = 0.0;
    const Status s1 = tab.run(total_cols, options, iterations);
    if (s1 == Status::IterationLimit) {
      result.status = s1;
      result.iterations = iterations;
      return result;
    }
    double scale = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) scale = std::max(scale, std::abs(tab.rhs(i)));
    if (-tab.rhs(m) > options.feasibility_tol * scale) {
      result.status = Status::Infeasible;
      result.iterations = iterations;
      return result;
    }
    // Drive artificials out of the basis; rows with no structural entry are redundant.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basis()[i] < first_art) continue;
      Eigen::Index best = -1;
      double best_abs = options.pivot_tol * 100;
      for (Eigen::Index c = 0; c < first_art; ++c) {
        if (std::abs(tab.at(i, c)) > best_abs) {
          best_abs = std::abs(tab.at(i, c));
          best = c;
        }
      }
      if (best >= 0) tab.pivot(i, best);
    }
  }

  // Phase 2.
  tab.raw().row(m).setZero();
  for (int j = 0; j < n; ++j) {
    tab.cost(pos_col[j]) = problem.objective()(j);
    if (neg_col[j] >= 0) tab.cost(neg_col[j]) = -problem.objective()(j);
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    const int b = tab.basis()[i];
    const double cb = tab.cost(b);
    if (cb != 0.0) tab.raw().row(m) -= cb * tab.raw().row(i);
  }
  const Status s2 = tab.run(first_art, options, iterations);
  result.iterations = iterations;
  if (s2 != Status::Optimal) {
    result.status = s2;
    return result;
  }

  Vector values = Vector::Zero(total_cols);
  for (Eigen::Index i = 0; i < m; ++i) values(tab.basis()[i]) = tab.rhs(i);
  result.x = Vector::Zero(n);
  for (int j = 0; j < n; ++j) {
    result.x(j) = values(pos_col[j]) - (neg_col[j] >= 0 ? values(neg_col[j]) : 0.0);
  }
  result.objective = problem.objective().dot(result.x);
  result.status = Status::Optimal;
  return result;
}

}  // namespace polyft::lp
