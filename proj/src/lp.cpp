#include "frustration/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frustration {

LpSolver::LpSolver(const IlpModel& model, LpOptions options)
    : options_(options), n_(model.num_vars()), constant_(model.objective_constant) {
  columns_.resize(n_);
  cost_ = model.objective;
  for (const Variable& v : model.variables) {
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
      throw std::invalid_argument("LP engine needs finite bounds on every variable");
    }
    if (v.lower > v.upper) throw std::invalid_argument("variable '" + v.name + "' has empty bounds");
    lb_.push_back(v.lower);
    ub_.push_back(v.upper);
  }
  model_lb_ = lb_;
  model_ub_ = ub_;
  x_.assign(n_, 0.0);
  d_.assign(n_, 0.0);
  status_.assign(n_, kAtLower);
  for (VarId j = 0; j < n_; ++j) x_[j] = lb_[j];
  for (const Constraint& c : model.constraints) add_row(c);
  binv_ = decltype(binv_)::Identity(m_, m_) * -1.0;
  factor_valid_ = true;
}

void LpSolver::append_row_bounds(const std::vector<Term>& terms, Sense sense, double rhs) {
  double lo = 0.0, hi = 0.0;
  for (const Term& t : terms) {
    lo += t.coef * (t.coef > 0 ? model_lb_[t.var] : model_ub_[t.var]);
    hi += t.coef * (t.coef > 0 ? model_ub_[t.var] : model_lb_[t.var]);
  }
  double row_lb = rhs, row_ub = rhs;
  if (sense == Sense::LessEqual) row_lb = std::min(lo, rhs);
  if (sense == Sense::GreaterEqual) row_ub = std::max(hi, rhs);
  lb_.push_back(row_lb);
  ub_.push_back(row_ub);
  cost_.push_back(0.0);
  d_.push_back(0.0);
}

void LpSolver::add_row(const Constraint& row) {
  const int r = m_;
  for (const Term& t : row.terms) {
    if (t.var < 0 || t.var >= n_) throw std::out_of_range("row references unknown variable");
    if (t.coef != 0.0) columns_[t.var].push_back({r, t.coef});
  }
  append_row_bounds(row.terms, row.sense, row.rhs);
  double activity = 0.0;
  for (const Term& t : row.terms) activity += t.coef * x_[t.var];
  x_.push_back(activity);
  status_.push_back(kBasic);
  head_.push_back(n_ + r);
  ++m_;
  if (factor_valid_ && binv_.rows() == r) {
    // B' = [B 0; u^T -1]  =>  B'^-1 = [B^-1 0; u^T B^-1  -1]
    Eigen::RowVectorXd u = Eigen::RowVectorXd::Zero(r);
    for (int p = 0; p < r; ++p) {
      const int j = head_[p];
      if (j >= n_) continue;
      for (const Term& t : row.terms) {
        if (t.var == j) u[p] += t.coef;
      }
    }
    Eigen::RowVectorXd last = u * binv_;
    binv_.conservativeResize(m_, m_);
    binv_.col(r).setZero();
    binv_.row(r).head(r) = last;
    binv_(r, r) = -1.0;
  } else {
    factor_valid_ = false;
  }
}

void LpSolver::set_bounds(VarId var, double lower, double upper) {
  if (var < 0 || var >= n_) throw std::out_of_range("unknown variable");
  lb_[var] = lower;
  ub_[var] = upper;
}

void LpSolver::reset_bounds() {
  for (VarId j = 0; j < n_; ++j) {
    lb_[j] = model_lb_[j];
    ub_[j] = model_ub_[j];
  }
}

double LpSolver::column_dot(int j, const Eigen::VectorXd& v) const {
  if (j >= n_) return -v[j - n_];
  double s = 0.0;
  for (const Entry& e : columns_[j]) s += e.value * v[e.row];
  return s;
}

void LpSolver::refactor() {
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(m_, m_);
  for (int p = 0; p < m_; ++p) {
    const int j = head_[p];
    if (j >= n_) {
      basis(j - n_, p) = -1.0;
    } else {
      for (const Entry& e : columns_[j]) basis(e.row, p) = e.value;
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis);
  double smallest = std::numeric_limits<double>::infinity();
  for (int p = 0; p < m_; ++p) smallest = std::min(smallest, std::fabs(lu.matrixLU()(p, p)));
  if (m_ > 0 && smallest < 1e-11) {
    // Singular basis: fall back to the all-logical basis.
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == kBasic) status_[j] = kAtLower;
    }
    for (int p = 0; p < m_; ++p) {
      head_[p] = n_ + p;
      status_[n_ + p] = kBasic;
    }
    binv_ = decltype(binv_)::Identity(m_, m_) * -1.0;
  } else {
    binv_ = lu.inverse();
  }
  pivots_since_refactor_ = 0;
  factor_valid_ = true;
}

void LpSolver::compute_primal() {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == kBasic) continue;
    x_[j] = status_[j] == kAtUpper ? ub_[j] : lb_[j];
    if (x_[j] == 0.0) continue;
    if (j >= n_) {
      rhs[j - n_] += x_[j];
    } else {
      for (const Entry& e : columns_[j]) rhs[e.row] -= e.value * x_[j];
    }
  }
  const Eigen::VectorXd xb = binv_ * rhs;
  for (int p = 0; p < m_; ++p) x_[head_[p]] = xb[p];
}

void LpSolver::compute_duals() {
  Eigen::VectorXd cb(m_);
  for (int p = 0; p < m_; ++p) cb[p] = cost_[head_[p]];
  const Eigen::VectorXd y = binv_.transpose() * cb;
  for (int j = 0; j < n_ + m_; ++j) {
    d_[j] = status_[j] == kBasic ? 0.0 : cost_[j] - column_dot(j, y);
  }
}

bool LpSolver::fix_dual_infeasibilities() {
  bool moved = false;
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == kBasic) continue;
    if (lb_[j] == ub_[j]) {
      status_[j] = kAtLower;
      continue;
    }
    if (status_[j] == kAtLower && d_[j] < -options_.optimality_tol) {
      status_[j] = kAtUpper;
      moved = true;
    } else if (status_[j] == kAtUpper && d_[j] > options_.optimality_tol) {
      status_[j] = kAtLower;
      moved = true;
    }
  }
  return moved;
}

double LpSolver::primal_infeasibility(int j) const {
  if (x_[j] < lb_[j] - options_.feasibility_tol) return lb_[j] - x_[j];
  if (x_[j] > ub_[j] + options_.feasibility_tol) return x_[j] - ub_[j];
  return 0.0;
}

LpSolution LpSolver::solve() {
  LpSolution out;
  for (VarId j = 0; j < n_; ++j) {
    if (lb_[j] > ub_[j]) {
      out.status = LpStatus::Infeasible;
      return out;
    }
  }
  const long limit = options_.iteration_limit > 0 ? options_.iteration_limit
                                                  : 1000 + 50L * (n_ + m_);
  bool refactored = !factor_valid_;  // inverse rebuilt since the last pivot
  if (refactored) refactor();
  compute_duals();
  fix_dual_infeasibilities();
  compute_primal();

  const int total = n_ + m_;
  Eigen::VectorXd rho(m_);
  Eigen::VectorXd alpha_col(m_);
  std::vector<double> alpha_row(total, 0.0);
  int degenerate_run = 0;
  bool fresh = true;  // x and d recomputed from the current inverse
  auto recompute = [&](bool rebuild) {
    if (rebuild) refactor();
    compute_duals();
    fix_dual_infeasibilities();
    compute_primal();
    fresh = true;
    refactored = refactored || rebuild;
  };

  while (true) {
    if (out.iterations >= limit) {
      out.status = LpStatus::IterationLimit;
      break;
    }
    const bool bland = degenerate_run >= options_.degeneracy_threshold;

    // Leaving row: largest bound violation, or the smallest column index
    // under Bland's rule.
    int r = -1;
    double worst = 0.0;
    for (int p = 0; p < m_; ++p) {
      const double infeas = primal_infeasibility(head_[p]);
      if (infeas <= 0.0) continue;
      if (bland ? (r < 0 || head_[p] < head_[r]) : infeas > worst) {
        worst = infeas;
        r = p;
      }
    }
    if (r < 0) {
      if (fresh) {
        out.status = LpStatus::Optimal;
        break;
      }
      // Confirm on values recomputed from scratch, free of update drift.
      recompute(false);
      continue;
    }

    const int leaving = head_[r];
    const bool to_lower = x_[leaving] < lb_[leaving];
    rho = binv_.row(r).transpose();

    // Dual ratio test (Harris two-pass; exact minimum under Bland's rule).
    const double tol_d = options_.optimality_tol;
    double theta_max = std::numeric_limits<double>::infinity();
    for (int j = 0; j < total; ++j) {
      if (status_[j] == kBasic) continue;
      const double a = column_dot(j, rho);
      alpha_row[j] = a;
      if (lb_[j] == ub_[j] || std::fabs(a) <= options_.pivot_tol) continue;
      const bool at_lower = status_[j] == kAtLower;
      const bool eligible = to_lower ? (at_lower ? a < 0 : a > 0) : (at_lower ? a > 0 : a < 0);
      if (!eligible) continue;
      const double bound = bland ? std::fabs(d_[j]) / std::fabs(a)
                                 : (std::fabs(d_[j]) + tol_d) / std::fabs(a);
      theta_max = std::min(theta_max, bound);
    }
    int q = -1;
    double best_alpha = 0.0;
    if (std::isfinite(theta_max)) {
      for (int j = 0; j < total; ++j) {
        if (status_[j] == kBasic || lb_[j] == ub_[j]) continue;
        const double a = alpha_row[j];
        if (std::fabs(a) <= options_.pivot_tol) continue;
        const bool at_lower = status_[j] == kAtLower;
        const bool eligible = to_lower ? (at_lower ? a < 0 : a > 0) : (at_lower ? a > 0 : a < 0);
        if (!eligible) continue;
        const double ratio = std::fabs(d_[j]) / std::fabs(a);
        if (bland) {
          if (ratio <= theta_max + 1e-12) {
            q = j;
            break;
          }
        } else if (ratio <= theta_max && std::fabs(a) > best_alpha) {
          best_alpha = std::fabs(a);
          q = j;
        }
      }
    }
    if (q < 0) {
      if (!refactored) {
        recompute(true);
        continue;
      }
      out.status = LpStatus::Infeasible;
      break;
    }

    // Entering column and a consistency check against the pivot row.
    alpha_col.setZero();
    if (q >= n_) {
      alpha_col = -binv_.col(q - n_);
    } else {
      for (const Entry& e : columns_[q]) alpha_col += e.value * binv_.col(e.row);
    }
    const double pivot = alpha_col[r];
    if (std::fabs(pivot - alpha_row[q]) > 1e-7 * (1.0 + std::fabs(pivot)) && !refactored) {
      recompute(true);
      continue;
    }

    // Primal update.
    const double target = to_lower ? lb_[leaving] : ub_[leaving];
    const double theta_p = (x_[leaving] - target) / pivot;
    for (int p = 0; p < m_; ++p) x_[head_[p]] -= theta_p * alpha_col[p];
    x_[q] += theta_p;
    x_[leaving] = target;

    // Dual update.
    const double theta_d = d_[q] / alpha_row[q];
    for (int j = 0; j < total; ++j) {
      if (status_[j] != kBasic) d_[j] -= theta_d * alpha_row[j];
    }
    d_[q] = 0.0;
    d_[leaving] = -theta_d;
    degenerate_run = std::fabs(theta_d) <= 1e-12 ? degenerate_run + 1 : 0;

    // Basis change and product-form update of the inverse.
    status_[leaving] = to_lower ? kAtLower : kAtUpper;
    if (lb_[leaving] == ub_[leaving]) status_[leaving] = kAtLower;
    status_[q] = kBasic;
    head_[r] = q;
    const Eigen::RowVectorXd pivot_row = binv_.row(r) / pivot;
    binv_.noalias() -= alpha_col * pivot_row;
    binv_.row(r) = pivot_row;

    ++out.iterations;
    fresh = refactored = false;
    if (++pivots_since_refactor_ >= options_.refactor_interval) recompute(true);
  }

  if (out.status == LpStatus::Optimal) {
    out.values.assign(x_.begin(), x_.begin() + n_);
    out.objective = constant_;
    for (VarId j = 0; j < n_; ++j) out.objective += cost_[j] * x_[j];
  }
  return out;
}

Basis LpSolver::basis() const {
  Basis b;
  b.head_ = head_;
  b.status_ = status_;
  return b;
}

void LpSolver::load_basis(const Basis& basis) {
  if (basis.rows() > m_) throw std::invalid_argument("basis has more rows than the LP");
  head_ = basis.head_;
  status_.assign(basis.status_.begin(), basis.status_.end());
  // Columns of logicals beyond the saved basis keep their index since
  // logical r sits at n_ + r.
  status_.resize(n_ + m_, kBasic);
  for (int r = basis.rows(); r < m_; ++r) head_.push_back(n_ + r);
  factor_valid_ = false;
  pivots_since_refactor_ = 0;
}

LpSolution solve_lp(const IlpModel& model, std::span<const BoundChange> overrides,
                    LpOptions options) {
  LpSolver solver(model, options);
  for (const BoundChange& b : overrides) solver.set_bounds(b.var, b.lower, b.upper);
  return solver.solve();
}

}  // namespace frustration
