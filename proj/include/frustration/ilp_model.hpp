#pragma once

#include <string>
#include <vector>

namespace frustration {

using VarId = int;

struct Term {
  VarId var;
  double coef;
  bool operator==(const Term&) const = default;
};

/// Sparse linear expression plus a constant.
struct LinearExpr {
  std::vector<Term> terms;
  double constant = 0.0;

  double evaluate(const std::vector<double>& values) const;
  /// Merges repeated variables and drops zero coefficients.
  LinearExpr& normalise();
  LinearExpr& add(const LinearExpr& other, double scale = 1.0);
};

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;

  double activity(const std::vector<double>& values) const;
  /// Amount by which `values` violates the constraint (0 when satisfied).
  double violation(const std::vector<double>& values) const;
};

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  bool integer = true;
  int priority = 0;
};

enum class ModelKind { And, Xor, Abs, Weighted, Multicolour, Generic };

std::string to_string(ModelKind kind);
/// Accepts and, xor, abs, weighted, multik.
ModelKind parse_model_kind(const std::string& name);

/// A 0/1 linear program `min c.x + constant` with a pool of cuts held aside
/// for lazy separation, plus the map from graph elements to variables.
struct IlpModel {
  ModelKind kind = ModelKind::Generic;
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::vector<Constraint> cut_pool;
  std::vector<double> objective;  // one coefficient per variable
  double objective_constant = 0.0;
  /// The optimum over any subtree is an integer, so LP bounds may be rounded
  /// up.
  bool integral_objective = false;

  int colours = 2;
  /// Two-colour models: node i -> x_i. Multi-colour: node i, colour c ->
  /// node_vars[i * colours + c]. Empty for models not built from a graph.
  std::vector<VarId> node_vars;
  /// Per edge id: expression whose value is the edge's frustration state.
  std::vector<LinearExpr> edge_frustration;
  /// Node whose colour was fixed for symmetry breaking, or -1.
  int fixed_node = -1;

  int num_vars() const { return static_cast<int>(variables.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }

  VarId add_variable(std::string name, double lower, double upper, bool integer,
                     double cost = 0.0);
  void add_constraint(Constraint c);

  double objective_value(const std::vector<double>& values) const;
  /// Largest violation over constraints and bounds.
  double max_violation(const std::vector<double>& values) const;

  int num_nodes() const;
  /// Variable holding node i's colour (two-colour models) or colour c.
  VarId node_var(int node, int colour = 0) const;
};

}  // namespace frustration
