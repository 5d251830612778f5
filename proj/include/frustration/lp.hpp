#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "frustration/ilp_model.hpp"

namespace frustration {

/// Numerical settings of the LP engine.
struct LpOptions {
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-7;
  double pivot_tol = 1e-9;
  /// Pivots between fresh factorisations of the basis.
  int refactor_interval = 100;
  /// Consecutive dual-degenerate pivots before switching to Bland's rule.
  int degeneracy_threshold = 50;
  /// 0 picks a limit from the problem size.
  long iteration_limit = 0;
};

enum class LpStatus { Optimal, Infeasible, IterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> values;  // structural variables
  long iterations = 0;
};

struct BoundChange {
  VarId var;
  double lower;
  double upper;
};

/// Opaque snapshot of a simplex basis, for warm starts.
class Basis {
 public:
  Basis() = default;
  int rows() const { return static_cast<int>(head_.size()); }

 private:
  friend class LpSolver;
  std::vector<int> head_;
  std::vector<std::uint8_t> status_;
};

/// Bounded-variable dual simplex over the LP relaxation of an IlpModel.
///
/// Rows are kept as  sum_j a_ij x_j - r_i = 0  with one logical variable r_i
/// per row. Every variable is boxed: structural bounds come from the model and
/// a one-sided row gets the implied activity bound on its open side, so any
/// basis is made dual feasible by moving nonbasic variables to the bound that
/// matches the sign of their reduced cost. Starting from the all-logical basis
/// no phase one is needed, and after bound changes (branching) or appended
/// rows (cuts) the previous basis stays dual feasible.
///
/// The basis inverse is held densely and updated in product form, with a
/// fresh LU factorisation every `refactor_interval` pivots.
class LpSolver {
 public:
  explicit LpSolver(const IlpModel& model, LpOptions options = {});

  int num_structural() const { return n_; }
  int num_rows() const { return m_; }

  /// Overrides the bounds of a structural variable.
  void set_bounds(VarId var, double lower, double upper);
  /// Restores every structural bound to the model's.
  void reset_bounds();
  double lower(VarId var) const { return lb_[var]; }
  double upper(VarId var) const { return ub_[var]; }

  /// Appends a row (e.g. a cut); its logical variable enters the basis.
  void add_row(const Constraint& row);

  LpSolution solve();

  Basis basis() const;
  /// Loads a basis saved earlier from this solver. Rows added since then get
  /// their logical variable as basic.
  void load_basis(const Basis& basis);

 private:
  enum Status : std::uint8_t { kBasic, kAtLower, kAtUpper };

  struct Entry {
    int row;
    double value;
  };

  double column_dot(int j, const Eigen::VectorXd& v) const;
  void append_row_bounds(const std::vector<Term>& terms, Sense sense, double rhs);
  void refactor();
  void compute_primal();
  void compute_duals();
  bool fix_dual_infeasibilities();
  double primal_infeasibility(int j) const;

  LpOptions options_;
  int n_ = 0;
  int m_ = 0;
  double constant_ = 0.0;
  std::vector<std::vector<Entry>> columns_;  // structural columns only
  std::vector<double> cost_;
  std::vector<double> lb_, ub_;
  std::vector<double> model_lb_, model_ub_;
  std::vector<double> x_, d_;
  std::vector<std::uint8_t> status_;
  std::vector<int> head_;  // basic column per row position
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> binv_;
  int pivots_since_refactor_ = 0;
  bool factor_valid_ = false;
};

/// One-shot LP relaxation of `model` (integrality ignored, cut pool not
/// included) with optional bound overrides.
LpSolution solve_lp(const IlpModel& model, std::span<const BoundChange> overrides = {},
                    LpOptions options = {});

}  // namespace frustration
