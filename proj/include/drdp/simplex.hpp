#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "drdp/model.hpp"

namespace drdp {

struct SimplexOptions {
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-9;
  // Iterations without objective progress before switching to Bland's rule,
  // as a multiple of rows + columns.
  int stall_factor = 5;
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> x;  // one entry per structural column
  std::int64_t iterations = 0;
};

// Dense row-major copy of a model's constraint matrix with double
// coefficients. Empty rows are dropped here (the only presolve performed).
struct LpData {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;
  std::vector<Sense> sense;
  std::vector<double> rhs;
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  bool trivially_infeasible = false;

  double at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static LpData from_model(const IlpModel& model, double tol = 1e-9) {
    LpData d;
    d.cols = model.num_variables();
    for (const Variable& v : model.variables()) {
      d.lower.push_back(v.lower.to_double());
      d.upper.push_back(v.upper.to_double());
    }
    d.cost.assign(static_cast<std::size_t>(d.cols), 0.0);
    for (const Term& t : model.objective()) d.cost[t.var] = t.coef.to_double();
    for (const LinearConstraint& row : model.constraints()) {
      double b = row.rhs.to_double();
      if (row.terms.empty()) {
        bool ok = row.sense == Sense::kGreaterEqual ? 0.0 >= b - tol
                  : row.sense == Sense::kLessEqual  ? 0.0 <= b + tol
                                                    : std::abs(b) <= tol;
        if (!ok) d.trivially_infeasible = true;
        continue;
      }
      std::size_t base = d.a.size();
      d.a.resize(base + static_cast<std::size_t>(d.cols), 0.0);
      for (const Term& t : row.terms) d.a[base + t.var] = t.coef.to_double();
      d.sense.push_back(row.sense);
      d.rhs.push_back(b);
      ++d.rows;
    }
    return d;
  }
};

// Bounded-variable primal simplex on a dense tableau, two phases
// (artificial variables for rows not satisfied by the starting point).
// Every structural variable must have finite bounds. Column bounds can be
// tightened per call, which is how branch-and-bound fixes binaries; fixed
// columns are substituted out before the tableau is built.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const LpData& data, SimplexOptions opts = {})
      : data_(data), opts_(opts) {}

  LpResult solve() { return solve(data_.lower, data_.upper); }

  LpResult solve(std::span<const double> lower, std::span<const double> upper) {
    LpResult result;
    result.x.assign(static_cast<std::size_t>(data_.cols), 0.0);
    if (data_.trivially_infeasible) return result;
    setup(lower, upper);
    if (!feasible_setup_) return result;

    // Phase 1: drive the artificials to zero.
    if (num_art_ > 0) {
      std::vector<double> phase1(static_cast<std::size_t>(ncols_), 0.0);
      for (int k = art_begin_; k < ncols_; ++k) phase1[k] = 1.0;
      set_costs(phase1);
      iterate();
      double infeasibility = 0.0;
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] >= art_begin_) infeasibility += beta_[i];
      }
      if (infeasibility > opts_.feasibility_tol * std::max(1, m_)) {
        result.iterations = iterations_;
        return result;
      }
      for (int k = art_begin_; k < ncols_; ++k) col_upper_[k] = 0.0;
      drive_out_artificials();
    }

    std::vector<double> phase2(static_cast<std::size_t>(ncols_), 0.0);
    for (int k = 0; k < nfree_; ++k) phase2[k] = data_.cost[free_cols_[k]];
    set_costs(phase2);
    iterate();

    std::vector<double> value(static_cast<std::size_t>(ncols_));
    for (int k = 0; k < ncols_; ++k) value[k] = nonbasic_value(k);
    for (int i = 0; i < m_; ++i) value[basis_[i]] = beta_[i];
    for (int j = 0; j < data_.cols; ++j) result.x[j] = lower[j];
    for (int k = 0; k < nfree_; ++k) {
      int j = free_cols_[k];
      result.x[j] = std::clamp(value[k], lower[j], upper[j]);
    }
    double obj = 0.0;
    for (int j = 0; j < data_.cols; ++j) obj += data_.cost[j] * result.x[j];
    result.value = obj;
    result.status = LpStatus::kOptimal;
    result.iterations = iterations_;
    return result;
  }

 private:
  double& tab(int i, int k) {
    return tableau_[static_cast<std::size_t>(i) * ncols_ + k];
  }

  double nonbasic_value(int k) const {
    return at_upper_[k] ? col_upper_[k] : col_lower_[k];
  }

  void setup(std::span<const double> lower, std::span<const double> upper) {
    feasible_setup_ = true;
    iterations_ = 0;
    const double kInf = std::numeric_limits<double>::infinity();
    free_cols_.clear();
    std::vector<double> fixed_value(static_cast<std::size_t>(data_.cols), 0.0);
    for (int j = 0; j < data_.cols; ++j) {
      if (upper[j] < lower[j] - opts_.feasibility_tol) {
        feasible_setup_ = false;
        return;
      }
      if (upper[j] - lower[j] > opts_.feasibility_tol) {
        free_cols_.push_back(j);
      } else {
        fixed_value[j] = lower[j];
      }
    }
    nfree_ = static_cast<int>(free_cols_.size());

    // Rows whose free part vanished are checked directly and dropped.
    rows_.clear();
    std::vector<double> residual;
    for (int i = 0; i < data_.rows; ++i) {
      double r = data_.rhs[i];
      bool has_free = false;
      for (int j = 0; j < data_.cols; ++j) {
        double a = data_.at(i, j);
        if (a == 0.0) continue;
        if (upper[j] - lower[j] > opts_.feasibility_tol) {
          has_free = true;
          r -= a * lower[j];  // free columns start at their lower bound
        } else {
          r -= a * fixed_value[j];
        }
      }
      if (!has_free) {
        double tol = opts_.feasibility_tol;
        bool ok = data_.sense[i] == Sense::kGreaterEqual ? r <= tol
                  : data_.sense[i] == Sense::kLessEqual  ? r >= -tol
                                                         : std::abs(r) <= tol;
        if (!ok) {
          feasible_setup_ = false;
          return;
        }
        continue;
      }
      rows_.push_back(i);
      residual.push_back(r);
    }
    m_ = static_cast<int>(rows_.size());

    // Column layout: free structurals, one slack per inequality row, then
    // artificials for rows the starting point violates.
    int num_slack = 0;
    for (int i : rows_) num_slack += data_.sense[i] != Sense::kEqual;
    slack_begin_ = nfree_;
    art_begin_ = nfree_ + num_slack;
    std::vector<int> art_row;
    std::vector<int> slack_of_row(static_cast<std::size_t>(m_), -1);
    {
      int s = slack_begin_;
      for (int r = 0; r < m_; ++r) {
        if (data_.sense[rows_[r]] != Sense::kEqual) slack_of_row[r] = s++;
      }
    }
    basis_.assign(static_cast<std::size_t>(m_), -1);
    beta_.assign(static_cast<std::size_t>(m_), 0.0);
    std::vector<double> basic_coef(static_cast<std::size_t>(m_), 1.0);
    std::vector<double> art_sign;
    for (int r = 0; r < m_; ++r) {
      Sense sense = data_.sense[rows_[r]];
      double res = residual[r];
      double sigma = sense == Sense::kGreaterEqual ? -1.0 : 1.0;
      bool slack_ok = (sense == Sense::kGreaterEqual && res <= 0.0) ||
                      (sense == Sense::kLessEqual && res >= 0.0);
      if (slack_ok) {
        basis_[r] = slack_of_row[r];
        basic_coef[r] = sigma;
        beta_[r] = res / sigma;
      } else {
        double tau = res >= 0.0 ? 1.0 : -1.0;
        basis_[r] = art_begin_ + static_cast<int>(art_row.size());
        art_row.push_back(r);
        art_sign.push_back(tau);
        basic_coef[r] = tau;
        beta_[r] = std::abs(res);
      }
    }
    num_art_ = static_cast<int>(art_row.size());
    ncols_ = art_begin_ + num_art_;

    col_lower_.assign(static_cast<std::size_t>(ncols_), 0.0);
    col_upper_.assign(static_cast<std::size_t>(ncols_), kInf);
    at_upper_.assign(static_cast<std::size_t>(ncols_), 0);
    for (int k = 0; k < nfree_; ++k) {
      col_lower_[k] = lower[free_cols_[k]];
      col_upper_[k] = upper[free_cols_[k]];
    }

    tableau_.assign(static_cast<std::size_t>(m_) * ncols_, 0.0);
    for (int r = 0; r < m_; ++r) {
      int i = rows_[r];
      double inv = 1.0 / basic_coef[r];
      for (int k = 0; k < nfree_; ++k) {
        double a = data_.at(i, free_cols_[k]);
        if (a != 0.0) tab(r, k) = a * inv;
      }
      if (slack_of_row[r] >= 0) {
        double sigma = data_.sense[i] == Sense::kGreaterEqual ? -1.0 : 1.0;
        tab(r, slack_of_row[r]) = sigma * inv;
      }
    }
    for (int a = 0; a < num_art_; ++a) {
      int r = art_row[a];
      tab(r, art_begin_ + a) = art_sign[a] / basic_coef[r];
    }
    is_basic_.assign(static_cast<std::size_t>(ncols_), -1);
    for (int r = 0; r < m_; ++r) is_basic_[basis_[r]] = r;
  }

  void set_costs(const std::vector<double>& cost) {
    cost_ = cost;
    reduced_.assign(static_cast<std::size_t>(ncols_), 0.0);
    for (int k = 0; k < ncols_; ++k) reduced_[k] = cost_[k];
    for (int r = 0; r < m_; ++r) {
      double cb = cost_[basis_[r]];
      if (cb == 0.0) continue;
      const double* row = &tableau_[static_cast<std::size_t>(r) * ncols_];
      for (int k = 0; k < ncols_; ++k) reduced_[k] -= cb * row[k];
    }
    for (int r = 0; r < m_; ++r) reduced_[basis_[r]] = 0.0;
  }

  double objective() const {
    double z = 0.0;
    for (int k = 0; k < ncols_; ++k) {
      if (is_basic_[k] < 0) z += cost_[k] * nonbasic_value(k);
    }
    for (int r = 0; r < m_; ++r) z += cost_[basis_[r]] * beta_[r];
    return z;
  }

  void iterate() {
    const std::int64_t stall_limit =
        static_cast<std::int64_t>(opts_.stall_factor) * (m_ + ncols_);
    std::int64_t stalled = 0;
    bool bland = false;
    double best = objective();
    for (;;) {
      // Pricing.
      int enter = -1;
      double best_score = 0.0;
      for (int k = 0; k < ncols_; ++k) {
        if (is_basic_[k] >= 0) continue;
        if (col_upper_[k] - col_lower_[k] <= 0.0) continue;
        double d = reduced_[k];
        bool improving = at_upper_[k] ? d > opts_.optimality_tol
                                      : d < -opts_.optimality_tol;
        if (!improving) continue;
        if (bland) {
          enter = k;
          break;
        }
        if (std::abs(d) > best_score) {
          best_score = std::abs(d);
          enter = k;
        }
      }
      if (enter < 0) return;
      const double dir = at_upper_[enter] ? -1.0 : 1.0;

      // Ratio test.
      double step = col_upper_[enter] - col_lower_[enter];
      int leave_row = -1;
      double leave_alpha = 0.0;
      for (int r = 0; r < m_; ++r) {
        double alpha = tab(r, enter) * dir;
        if (std::abs(alpha) <= opts_.pivot_tol) continue;
        int b = basis_[r];
        double limit;
        if (alpha > 0.0) {
          limit = std::max(0.0, beta_[r] - col_lower_[b]) / alpha;
        } else {
          if (col_upper_[b] == std::numeric_limits<double>::infinity()) continue;
          limit = std::max(0.0, col_upper_[b] - beta_[r]) / -alpha;
        }
        bool take;
        if (leave_row < 0) {
          take = limit < step;
        } else if (bland) {
          take = limit < step - 1e-12 ||
                 (limit <= step + 1e-12 && basis_[r] < basis_[leave_row]);
        } else {
          take = limit < step - 1e-12 ||
                 (limit <= step + 1e-12 && std::abs(alpha) > std::abs(leave_alpha));
        }
        if (take) {
          step = limit;
          leave_row = r;
          leave_alpha = alpha;
        }
      }
      if (leave_row < 0 &&
          step == std::numeric_limits<double>::infinity()) {
        throw std::logic_error("simplex: unbounded direction on boxed model");
      }
      ++iterations_;

      for (int r = 0; r < m_; ++r) {
        double t = tab(r, enter);
        if (t != 0.0) beta_[r] -= t * dir * step;
      }
      if (leave_row < 0) {
        at_upper_[enter] = !at_upper_[enter];
      } else {
        double entering_value = nonbasic_value(enter) + dir * step;
        int leaving = basis_[leave_row];
        at_upper_[leaving] = leave_alpha < 0.0;
        pivot(leave_row, enter);
        beta_[leave_row] = entering_value;
      }

      double z = objective();
      if (z < best - 1e-9) {
        best = z;
        stalled = 0;
      } else if (!bland && ++stalled >= stall_limit) {
        bland = true;
      }
    }
  }

  void pivot(int row, int enter) {
    double* prow = &tableau_[static_cast<std::size_t>(row) * ncols_];
    double inv = 1.0 / prow[enter];
    nz_.clear();
    for (int k = 0; k < ncols_; ++k) {
      if (prow[k] != 0.0) {
        prow[k] *= inv;
        nz_.push_back(k);
      }
    }
    prow[enter] = 1.0;
    for (int r = 0; r < m_; ++r) {
      if (r == row) continue;
      double* trow = &tableau_[static_cast<std::size_t>(r) * ncols_];
      double f = trow[enter];
      if (f == 0.0) continue;
      for (int k : nz_) {
        double v = trow[k] - f * prow[k];
        trow[k] = std::abs(v) < 1e-12 ? 0.0 : v;
      }
      trow[enter] = 0.0;
    }
    double d = reduced_[enter];
    if (d != 0.0) {
      for (int k : nz_) reduced_[k] -= d * prow[k];
      reduced_[enter] = 0.0;
    }
    is_basic_[basis_[row]] = -1;
    basis_[row] = enter;
    is_basic_[enter] = row;
  }

  // After phase 1, swap zero-valued basic artificials for any structural or
  // slack column with a usable pivot in that row.
  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < art_begin_) continue;
      int best = -1;
      double best_abs = 1e-7;
      for (int k = 0; k < art_begin_; ++k) {
        if (is_basic_[k] >= 0) continue;
        double a = std::abs(tab(r, k));
        if (a > best_abs) {
          best_abs = a;
          best = k;
        }
      }
      if (best < 0) continue;  // redundant row; artificial stays basic at 0
      double value = nonbasic_value(best);
      at_upper_[basis_[r]] = 0;
      pivot(r, best);
      beta_[r] = value;
    }
  }

  const LpData& data_;
  SimplexOptions opts_;

  bool feasible_setup_ = true;
  std::int64_t iterations_ = 0;
  std::vector<int> free_cols_;
  std::vector<int> rows_;
  int nfree_ = 0, m_ = 0, ncols_ = 0, slack_begin_ = 0, art_begin_ = 0,
      num_art_ = 0;
  std::vector<double> tableau_;
  std::vector<int> basis_;
  std::vector<int> is_basic_;
  std::vector<double> beta_;
  std::vector<double> col_lower_, col_upper_;
  std::vector<char> at_upper_;
  std::vector<double> cost_, reduced_;
  std::vector<int> nz_;
};

// Bounded dual simplex on the tableau of [A | -I] (one slack s = a.x per
// row), used for branch-and-bound nodes. Every structural column is boxed,
// so putting each nonbasic column at the bound matching its cost sign gives
// a dual feasible start without a phase 1. A basis recorded after one solve
// can be reloaded before the next; bound changes on binaries keep it dual
// feasible, so only a few pivots are usually needed.
class DualSimplex {
 public:
  struct Basis {
    std::vector<std::uint64_t> basic;     // bitset over all columns
    std::vector<std::uint64_t> at_upper;  // bitset over all columns
    bool empty() const { return basic.empty(); }
  };

  explicit DualSimplex(const LpData& data, SimplexOptions opts = {})
      : data_(data), opts_(opts), m_(data.rows), ncols_(data.cols + data.rows) {
    const double kInf = std::numeric_limits<double>::infinity();
    row_lower_.assign(static_cast<std::size_t>(m_), -kInf);
    row_upper_.assign(static_cast<std::size_t>(m_), kInf);
    for (int i = 0; i < m_; ++i) {
      if (data.sense[i] != Sense::kLessEqual) row_lower_[i] = data.rhs[i];
      if (data.sense[i] != Sense::kGreaterEqual) row_upper_[i] = data.rhs[i];
    }
    cost_.assign(static_cast<std::size_t>(ncols_), 0.0);
    for (int j = 0; j < data.cols; ++j) cost_[j] = data.cost[j];
    reset_to_slack_basis();
  }

  std::int64_t total_pivots() const { return total_pivots_; }

  LpResult solve(std::span<const double> lower, std::span<const double> upper,
                 const Basis* warm = nullptr) {
    LpResult result;
    result.x.assign(static_cast<std::size_t>(data_.cols), 0.0);
    const std::int64_t pivots_before = total_pivots_;
    if (data_.trivially_infeasible) return result;
    for (int j = 0; j < data_.cols; ++j) {
      if (upper[j] < lower[j] - opts_.feasibility_tol) return result;
    }
    lower_.assign(static_cast<std::size_t>(ncols_), 0.0);
    upper_.assign(static_cast<std::size_t>(ncols_), 0.0);
    for (int j = 0; j < data_.cols; ++j) {
      lower_[j] = lower[j];
      upper_[j] = std::max(lower[j], upper[j]);
    }
    for (int i = 0; i < m_; ++i) {
      lower_[data_.cols + i] = row_lower_[i];
      upper_[data_.cols + i] = row_upper_[i];
    }

    bool loaded = warm && !warm->empty() && load(*warm);
    if (!loaded) reset_to_slack_basis();
    refresh();
    if (!dual_feasible_positions()) {
      reset_to_slack_basis();
      refresh();
      dual_feasible_positions();
    }
    if (!iterate()) {
      result.iterations = total_pivots_ - pivots_before;
      return result;
    }
    // Tableau drift can leave small wrong-sign reduced costs behind; primal
    // iterations from the (now primal feasible) basis remove them.
    if (!primal_cleanup()) {
      reset_to_slack_basis();
      refresh();
      dual_feasible_positions();
      if (!iterate()) {
        result.iterations = total_pivots_ - pivots_before;
        return result;
      }
      if (!primal_cleanup()) {
        throw std::logic_error("simplex: unbounded direction on boxed model");
      }
    }
    for (int j = 0; j < data_.cols; ++j) {
      double v = is_basic_[j] >= 0 ? beta_[is_basic_[j]] : nonbasic_value(j);
      result.x[j] = std::clamp(v, lower[j], upper[j]);
    }
    double obj = 0.0;
    for (int j = 0; j < data_.cols; ++j) obj += data_.cost[j] * result.x[j];
    result.value = obj;
    result.status = LpStatus::kOptimal;
    result.iterations = total_pivots_ - pivots_before;
    return result;
  }

  Basis basis() const {
    Basis b;
    std::size_t words = (static_cast<std::size_t>(ncols_) + 63) / 64;
    b.basic.assign(words, 0);
    b.at_upper.assign(words, 0);
    for (int k = 0; k < ncols_; ++k) {
      if (is_basic_[k] >= 0) b.basic[k / 64] |= std::uint64_t{1} << (k % 64);
      if (at_upper_[k]) b.at_upper[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    return b;
  }

 private:
  static bool test(const std::vector<std::uint64_t>& bits, int k) {
    return (bits[k / 64] >> (k % 64)) & 1u;
  }

  double& tab(int i, int k) {
    return tableau_[static_cast<std::size_t>(i) * ncols_ + k];
  }

  double nonbasic_value(int k) const {
    return at_upper_[k] ? upper_[k] : lower_[k];
  }

  void reset_to_slack_basis() {
    tableau_.assign(static_cast<std::size_t>(m_) * ncols_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < data_.cols; ++j) {
        double a = data_.at(i, j);
        if (a != 0.0) tab(i, j) = -a;
      }
      tab(i, data_.cols + i) = 1.0;
    }
    basis_.resize(static_cast<std::size_t>(m_));
    is_basic_.assign(static_cast<std::size_t>(ncols_), -1);
    at_upper_.assign(static_cast<std::size_t>(ncols_), 0);
    for (int i = 0; i < m_; ++i) {
      basis_[i] = data_.cols + i;
      is_basic_[data_.cols + i] = i;
    }
    for (int j = 0; j < data_.cols; ++j) at_upper_[j] = cost_[j] < 0.0;
    pivots_since_reset_ = 0;
  }

  // Pivots the tableau onto the basic set of `b`. Returns false when the set
  // is numerically singular from here.
  bool load(const Basis& b) {
    if (pivots_since_reset_ > 20 * static_cast<std::int64_t>(m_ + 1)) {
      reset_to_slack_basis();
    }
    for (int attempt = 0; attempt < 2; ++attempt) {
      bool ok = true;
      for (int k = 0; k < ncols_ && ok; ++k) {
        if (!test(b.basic, k) || is_basic_[k] >= 0) continue;
        int row = -1;
        double best = 1e-7;
        for (int r = 0; r < m_; ++r) {
          if (test(b.basic, basis_[r])) continue;
          double a = std::abs(tab(r, k));
          if (a > best) {
            best = a;
            row = r;
          }
        }
        if (row < 0) {
          ok = false;
        } else {
          pivot(row, k, false);
        }
      }
      if (ok) {
        for (int k = 0; k < ncols_; ++k) {
          if (is_basic_[k] < 0) at_upper_[k] = test(b.at_upper, k);
        }
        return true;
      }
      reset_to_slack_basis();
    }
    return false;
  }

  // Recomputes basic values and reduced costs from the tableau.
  void refresh() {
    const double kInf = std::numeric_limits<double>::infinity();
    for (int k = 0; k < ncols_; ++k) {
      if (is_basic_[k] >= 0) continue;
      // Nonbasic columns must sit at a finite bound.
      if (at_upper_[k] && upper_[k] == kInf) at_upper_[k] = 0;
      if (!at_upper_[k] && lower_[k] == -kInf) at_upper_[k] = 1;
    }
    xn_.assign(static_cast<std::size_t>(ncols_), 0.0);
    for (int k = 0; k < ncols_; ++k) {
      if (is_basic_[k] < 0) xn_[k] = nonbasic_value(k);
    }
    beta_.assign(static_cast<std::size_t>(m_), 0.0);
    reduced_ = cost_;
    for (int r = 0; r < m_; ++r) {
      const double* row = &tableau_[static_cast<std::size_t>(r) * ncols_];
      double s = 0.0;
      double cb = cost_[basis_[r]];
      for (int k = 0; k < ncols_; ++k) {
        double t = row[k];
        if (t == 0.0) continue;
        s -= t * xn_[k];
        if (cb != 0.0) reduced_[k] -= cb * t;
      }
      beta_[r] = s;
    }
    for (int r = 0; r < m_; ++r) reduced_[basis_[r]] = 0.0;
  }

  // Moves boxed nonbasic columns to the bound their reduced cost prefers.
  // Returns false if a one-sided column has a clearly wrong sign.
  bool dual_feasible_positions() {
    const double kInf = std::numeric_limits<double>::infinity();
    const double tol = 1e-9;
    bool ok = true;
    for (int k = 0; k < ncols_; ++k) {
      if (is_basic_[k] >= 0 || upper_[k] - lower_[k] <= 0.0) continue;
      double d = reduced_[k];
      bool want_upper = at_upper_[k] ? d <= tol : d < -tol;
      if (want_upper == static_cast<bool>(at_upper_[k])) continue;
      if ((want_upper && upper_[k] == kInf) || (!want_upper && lower_[k] == -kInf)) {
        if (std::abs(d) > 1e-5) ok = false;
        continue;
      }
      double delta = (want_upper ? upper_[k] : lower_[k]) - nonbasic_value(k);
      at_upper_[k] = want_upper;
      for (int r = 0; r < m_; ++r) {
        double t = tab(r, k);
        if (t != 0.0) beta_[r] -= t * delta;
      }
    }
    return ok;
  }

  double objective() const {
    double z = 0.0;
    for (int k = 0; k < ncols_; ++k) {
      if (is_basic_[k] < 0 && cost_[k] != 0.0) z += cost_[k] * nonbasic_value(k);
    }
    for (int r = 0; r < m_; ++r) z += cost_[basis_[r]] * beta_[r];
    return z;
  }

  // Squared norm of row r of the basis inverse, read off the slack columns.
  double row_weight(int r) const {
    const double* row =
        &tableau_[static_cast<std::size_t>(r) * ncols_ + data_.cols];
    double w = 0.0;
    for (int i = 0; i < m_; ++i) w += row[i] * row[i];
    return std::max(w, 1e-12);
  }

  // Dual simplex with steepest-edge row choice and a bound-flipping ratio
  // test; falls back to Bland's rule when the objective stalls. Returns
  // false when the LP is infeasible.
  bool iterate() {
    const double kInf = std::numeric_limits<double>::infinity();
    const double tol = opts_.feasibility_tol;
    const std::int64_t stall_limit =
        static_cast<std::int64_t>(opts_.stall_factor) * (m_ + ncols_);
    std::int64_t stalled = 0;
    bool bland = false;
    double best = objective();
    struct Candidate {
      int col;
      double ratio;
      double abs_t;
    };
    std::vector<Candidate> cands;
    for (;;) {
      int r = -1;
      double best_price = 0.0;
      for (int i = 0; i < m_; ++i) {
        int b = basis_[i];
        double viol = std::max(lower_[b] - beta_[i], beta_[i] - upper_[b]);
        if (viol <= tol) continue;
        if (bland) {
          if (r < 0 || b < basis_[r]) r = i;
          continue;
        }
        double price = viol * viol / row_weight(i);
        if (price > best_price) {
          best_price = price;
          r = i;
        }
      }
      if (r < 0) return true;
      const int leaving = basis_[r];
      const bool to_lower = beta_[r] < lower_[leaving];
      const double target = to_lower ? lower_[leaving] : upper_[leaving];

      const double* row = &tableau_[static_cast<std::size_t>(r) * ncols_];
      cands.clear();
      for (int k = 0; k < ncols_; ++k) {
        double t = row[k];
        if (std::abs(t) <= opts_.pivot_tol || is_basic_[k] >= 0) continue;
        if (upper_[k] - lower_[k] <= 0.0) continue;
        bool up = at_upper_[k];
        bool eligible = to_lower ? (!up ? t < 0.0 : t > 0.0)
                                 : (!up ? t > 0.0 : t < 0.0);
        if (!eligible) continue;
        double d = up ? std::max(0.0, -reduced_[k]) : std::max(0.0, reduced_[k]);
        cands.push_back({k, d / std::abs(t), std::abs(t)});
      }
      if (cands.empty()) return false;

      int enter = -1;
      std::vector<int>& flips = flips_;
      flips.clear();
      if (bland) {
        double best_ratio = kInf;
        for (const Candidate& c : cands) {
          if (c.ratio < best_ratio - 1e-12) {
            best_ratio = c.ratio;
            enter = c.col;
          }
        }
      } else {
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& x, const Candidate& y) {
                    if (x.ratio != y.ratio) return x.ratio < y.ratio;
                    if (x.abs_t != y.abs_t) return x.abs_t > y.abs_t;
                    return x.col < y.col;
                  });
        // Pass breakpoints while the leaving row stays infeasible.
        double slope = std::abs(beta_[r] - target);
        for (std::size_t c = 0; c < cands.size(); ++c) {
          int k = cands[c].col;
          double range = upper_[k] - lower_[k];
          double next = slope - cands[c].abs_t * range;
          if (range == kInf || next <= tol || c + 1 == cands.size()) {
            // Prefer a larger pivot among near-ties at this breakpoint.
            enter = k;
            double big = cands[c].abs_t;
            for (std::size_t e = c + 1; e < cands.size() &&
                                        cands[e].ratio <= cands[c].ratio + 1e-12;
                 ++e) {
              if (cands[e].abs_t > big) {
                big = cands[e].abs_t;
                enter = cands[e].col;
              }
            }
            if (next > tol && range != kInf && c + 1 == cands.size() &&
                enter == k) {
              // Flipping every candidate still leaves the row infeasible.
              return false;
            }
            break;
          }
          flips.push_back(k);
          slope = next;
        }
        for (int k : flips) {
          double delta = at_upper_[k] ? lower_[k] - upper_[k] : upper_[k] - lower_[k];
          at_upper_[k] = !at_upper_[k];
          for (int i = 0; i < m_; ++i) {
            double t = tab(i, k);
            if (t != 0.0) beta_[i] -= t * delta;
          }
        }
      }

      const double delta = (beta_[r] - target) / row[enter];
      const double entering_value = nonbasic_value(enter) + delta;
      for (int i = 0; i < m_; ++i) {
        double t = tab(i, enter);
        if (t != 0.0) beta_[i] -= t * delta;
      }
      at_upper_[leaving] = !to_lower;
      pivot(r, enter, true);
      beta_[r] = entering_value;

      double z = objective();
      if (z > best + 1e-9) {
        best = z;
        stalled = 0;
      } else if (!bland && ++stalled >= stall_limit) {
        bland = true;
      }
    }
  }

  // Primal simplex from a primal feasible basis until no nonbasic column has
  // an improving reduced cost. Returns false on an unbounded direction.
  bool primal_cleanup() {
    const double kInf = std::numeric_limits<double>::infinity();
    const double tol = opts_.optimality_tol;
    const std::int64_t stall_limit =
        static_cast<std::int64_t>(opts_.stall_factor) * (m_ + ncols_);
    std::int64_t steps = 0;
    for (;;) {
      const bool bland = ++steps > stall_limit;
      int enter = -1;
      double best = 0.0;
      for (int k = 0; k < ncols_; ++k) {
        if (is_basic_[k] >= 0 || upper_[k] - lower_[k] <= 0.0) continue;
        double d = reduced_[k];
        double gain = at_upper_[k] ? d : -d;
        if (gain <= tol) continue;
        if (bland) {
          enter = k;
          break;
        }
        if (gain > best) {
          best = gain;
          enter = k;
        }
      }
      if (enter < 0) return true;
      const double dir = at_upper_[enter] ? -1.0 : 1.0;
      double step = upper_[enter] - lower_[enter];
      int leave_row = -1;
      double leave_alpha = 0.0;
      for (int r = 0; r < m_; ++r) {
        double alpha = tab(r, enter) * dir;
        if (std::abs(alpha) <= opts_.pivot_tol) continue;
        int b = basis_[r];
        double limit;
        if (alpha > 0.0) {
          if (lower_[b] == -kInf) continue;
          limit = std::max(0.0, beta_[r] - lower_[b]) / alpha;
        } else {
          if (upper_[b] == kInf) continue;
          limit = std::max(0.0, upper_[b] - beta_[r]) / -alpha;
        }
        if (limit < step - 1e-12 ||
            (leave_row >= 0 && limit <= step + 1e-12 &&
             std::abs(alpha) > std::abs(leave_alpha))) {
          step = limit;
          leave_row = r;
          leave_alpha = alpha;
        }
      }
      if (step == kInf) return false;
      for (int r = 0; r < m_; ++r) {
        double t = tab(r, enter);
        if (t != 0.0) beta_[r] -= t * dir * step;
      }
      if (leave_row < 0) {
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }
      double entering_value = nonbasic_value(enter) + dir * step;
      at_upper_[basis_[leave_row]] = leave_alpha < 0.0;
      pivot(leave_row, enter, true);
      beta_[leave_row] = entering_value;
    }
  }

  void pivot(int row, int enter, bool update_costs) {
    double* prow = &tableau_[static_cast<std::size_t>(row) * ncols_];
    double inv = 1.0 / prow[enter];
    nz_.clear();
    for (int k = 0; k < ncols_; ++k) {
      if (prow[k] != 0.0) {
        prow[k] *= inv;
        nz_.push_back(k);
      }
    }
    prow[enter] = 1.0;
    const bool dense = nz_.size() * 4 > static_cast<std::size_t>(ncols_);
    if (dense) pivot_row_.assign(prow, prow + ncols_);
    const double* __restrict src = pivot_row_.data();
    for (int r = 0; r < m_; ++r) {
      if (r == row) continue;
      double* __restrict trow = &tableau_[static_cast<std::size_t>(r) * ncols_];
      double f = trow[enter];
      if (f == 0.0) continue;
      if (dense) {
        for (int k = 0; k < ncols_; ++k) trow[k] -= f * src[k];
      } else {
        for (int k : nz_) {
          double v = trow[k] - f * prow[k];
          trow[k] = std::abs(v) < 1e-12 ? 0.0 : v;
        }
      }
      trow[enter] = 0.0;
    }
    if (update_costs) {
      double d = reduced_[enter];
      if (d != 0.0) {
        for (int k : nz_) reduced_[k] -= d * prow[k];
        reduced_[enter] = 0.0;
      }
    }
    is_basic_[basis_[row]] = -1;
    basis_[row] = enter;
    is_basic_[enter] = row;
    ++total_pivots_;
    ++pivots_since_reset_;
  }

  const LpData& data_;
  SimplexOptions opts_;
  int m_ = 0;
  int ncols_ = 0;
  std::vector<double> row_lower_, row_upper_;
  std::vector<double> cost_;
  std::vector<double> lower_, upper_;
  std::vector<double> tableau_;
  std::vector<int> basis_;
  std::vector<int> is_basic_;
  std::vector<char> at_upper_;
  std::vector<double> beta_, reduced_, xn_;
  std::vector<int> nz_;
  std::vector<int> flips_;
  std::vector<double> pivot_row_;
  std::int64_t total_pivots_ = 0;
  std::int64_t pivots_since_reset_ = 0;
};

struct LpRelaxation {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  Assignment point;
  std::int64_t iterations = 0;
};

// Continuous relaxation of `model` (integrality dropped, bounds kept).
inline LpRelaxation lp_relax(const IlpModel& model, SimplexOptions opts = {}) {
  if (model.num_variables() == 0) {
    throw std::invalid_argument("lp_relax: empty model");
  }
  LpData data = LpData::from_model(model);
  BoundedSimplex simplex(data, opts);
  LpResult r = simplex.solve();
  return LpRelaxation{r.status, r.value, std::move(r.x), r.iterations};
}

}  // namespace drdp
