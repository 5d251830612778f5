#include "frustration/ilp_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frustration {

double LinearExpr::evaluate(const std::vector<double>& values) const {
  double total = constant;
  for (const Term& t : terms) total += t.coef * values[t.var];
  return total;
}

LinearExpr& LinearExpr::normalise() {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  terms = std::move(merged);
  return *this;
}

LinearExpr& LinearExpr::add(const LinearExpr& other, double scale) {
  for (const Term& t : other.terms) terms.push_back({t.var, t.coef * scale});
  constant += other.constant * scale;
  return normalise();
}

double Constraint::activity(const std::vector<double>& values) const {
  double total = 0.0;
  for (const Term& t : terms) total += t.coef * values[t.var];
  return total;
}

double Constraint::violation(const std::vector<double>& values) const {
  const double a = activity(values);
  switch (sense) {
    case Sense::LessEqual:
      return std::max(0.0, a - rhs);
    case Sense::GreaterEqual:
      return std::max(0.0, rhs - a);
    case Sense::Equal:
      return std::fabs(a - rhs);
  }
  return 0.0;
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::And:
      return "and";
    case ModelKind::Xor:
      return "xor";
    case ModelKind::Abs:
      return "abs";
    case ModelKind::Weighted:
      return "weighted";
    case ModelKind::Multicolour:
      return "multik";
    case ModelKind::Generic:
      return "generic";
  }
  return "generic";
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "and") return ModelKind::And;
  if (name == "xor") return ModelKind::Xor;
  if (name == "abs") return ModelKind::Abs;
  if (name == "weighted") return ModelKind::Weighted;
  if (name == "multik") return ModelKind::Multicolour;
  throw std::invalid_argument("unknown model '" + name + "' (expected and|xor|abs|weighted|multik)");
}

VarId IlpModel::add_variable(std::string name, double lower, double upper, bool integer,
                             double cost) {
  variables.push_back({std::move(name), lower, upper, integer, 0});
  objective.push_back(cost);
  return num_vars() - 1;
}

void IlpModel::add_constraint(Constraint c) {
  for (const Term& t : c.terms) {
    if (t.var < 0 || t.var >= num_vars()) throw std::out_of_range("constraint references unknown variable");
  }
  constraints.push_back(std::move(c));
}

double IlpModel::objective_value(const std::vector<double>& values) const {
  double total = objective_constant;
  for (VarId v = 0; v < num_vars(); ++v) total += objective[v] * values[v];
  return total;
}

double IlpModel::max_violation(const std::vector<double>& values) const {
  double worst = 0.0;
  for (const Constraint& c : constraints) worst = std::max(worst, c.violation(values));
  for (VarId v = 0; v < num_vars(); ++v) {
    worst = std::max({worst, variables[v].lower - values[v], values[v] - variables[v].upper});
  }
  return worst;
}

int IlpModel::num_nodes() const {
  return colours > 0 ? static_cast<int>(node_vars.size()) / (kind == ModelKind::Multicolour ? colours : 1)
                     : 0;
}

VarId IlpModel::node_var(int node, int colour) const {
  return kind == ModelKind::Multicolour ? node_vars[node * colours + colour] : node_vars[node];
}

}  // namespace frustration
