#include "frustration/formulation.hpp"

#include <stdexcept>
#include <string>

namespace frustration {
namespace {

std::string pair_name(const char* prefix, const Edge& e) {
  return std::string(prefix) + "_" + std::to_string(e.u) + "_" + std::to_string(e.v);
}

void add_node_vars(IlpModel& model, const SignedGraph& g) {
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    model.node_vars.push_back(model.add_variable("x_" + std::to_string(i), 0.0, 1.0, true));
  }
}

void require_signed(const SignedGraph& g, const char* model) {
  if (g.weighted()) {
    throw std::invalid_argument(std::string(model) + " model needs a signed graph; use the weighted model");
  }
}

void add_objective(IlpModel& model, const LinearExpr& expr) {
  for (const Term& t : expr.terms) model.objective[t.var] += t.coef;
  model.objective_constant += expr.constant;
}

}  // namespace

IlpModel build_and(const SignedGraph& g) {
  require_signed(g, "AND");
  IlpModel model;
  model.kind = ModelKind::And;
  model.integral_objective = true;
  add_node_vars(model, g);
  for (const Edge& e : g.edges()) {
    const VarId xi = model.node_vars[e.u];
    const VarId xj = model.node_vars[e.v];
    const VarId xij = model.add_variable(pair_name("x", e), 0.0, 1.0, false);
    // f = (1 - a)/2 + a (x_i + x_j - 2 x_ij)
    const double a = e.sign();
    LinearExpr f{{{xi, a}, {xj, a}, {xij, -2.0 * a}}, (1.0 - a) / 2.0};
    add_objective(model, f);
    model.edge_frustration.push_back(std::move(f));
    if (a > 0) {
      model.add_constraint({pair_name("and_i", e), {{xij, 1.0}, {xi, -1.0}}, Sense::LessEqual, 0.0});
      model.add_constraint({pair_name("and_j", e), {{xij, 1.0}, {xj, -1.0}}, Sense::LessEqual, 0.0});
    } else {
      model.add_constraint(
          {pair_name("and_ij", e), {{xij, 1.0}, {xi, -1.0}, {xj, -1.0}}, Sense::GreaterEqual, -1.0});
    }
  }
  return model;
}

IlpModel build_xor(const SignedGraph& g) {
  require_signed(g, "XOR");
  IlpModel model;
  model.kind = ModelKind::Xor;
  model.integral_objective = true;
  add_node_vars(model, g);
  for (const Edge& e : g.edges()) {
    const VarId xi = model.node_vars[e.u];
    const VarId xj = model.node_vars[e.v];
    const VarId f = model.add_variable(pair_name("f", e), 0.0, 1.0, false, 1.0);
    model.edge_frustration.push_back(LinearExpr{{{f, 1.0}}, 0.0});
    if (e.sign() > 0) {
      model.add_constraint({pair_name("xor_a", e), {{f, 1.0}, {xi, -1.0}, {xj, 1.0}}, Sense::GreaterEqual, 0.0});
      model.add_constraint({pair_name("xor_b", e), {{f, 1.0}, {xi, 1.0}, {xj, -1.0}}, Sense::GreaterEqual, 0.0});
    } else {
      model.add_constraint({pair_name("xor_a", e), {{f, 1.0}, {xi, -1.0}, {xj, -1.0}}, Sense::GreaterEqual, -1.0});
      model.add_constraint({pair_name("xor_b", e), {{f, 1.0}, {xi, 1.0}, {xj, 1.0}}, Sense::GreaterEqual, 1.0});
    }
  }
  return model;
}

IlpModel build_abs(const SignedGraph& g) {
  require_signed(g, "ABS");
  IlpModel model;
  model.kind = ModelKind::Abs;
  model.integral_objective = true;
  add_node_vars(model, g);
  for (const Edge& e : g.edges()) {
    const VarId xi = model.node_vars[e.u];
    const VarId xj = model.node_vars[e.v];
    const VarId ev = model.add_variable(pair_name("e", e), 0.0, 1.0, true, 1.0);
    const VarId hv = model.add_variable(pair_name("h", e), 0.0, 1.0, true, 1.0);
    model.edge_frustration.push_back(LinearExpr{{{ev, 1.0}, {hv, 1.0}}, 0.0});
    if (e.sign() > 0) {
      model.add_constraint(
          {pair_name("abs", e), {{xi, 1.0}, {xj, -1.0}, {ev, -1.0}, {hv, 1.0}}, Sense::Equal, 0.0});
    } else {
      model.add_constraint(
          {pair_name("abs", e), {{xi, 1.0}, {xj, 1.0}, {ev, -1.0}, {hv, 1.0}}, Sense::Equal, 1.0});
    }
  }
  return model;
}

IlpModel build_weighted(const SignedGraph& g) {
  IlpModel model;
  model.kind = ModelKind::Weighted;
  add_node_vars(model, g);
  for (const Edge& e : g.edges()) {
    const double w = e.weight;
    if (!(w >= -1.0 && w <= 1.0)) throw std::invalid_argument("edge weight outside [-1,1]");
    const VarId xi = model.node_vars[e.u];
    const VarId xj = model.node_vars[e.v];
    const VarId xij = model.add_variable(pair_name("x", e), 0.0, 1.0, true);
    LinearExpr f{{{xi, w}, {xj, w}, {xij, -2.0 * w}}, (1.0 - w) / 2.0};
    f.normalise();
    add_objective(model, f);
    model.edge_frustration.push_back(std::move(f));
    const double side = (3.0 * w - 1.0) / 4.0;
    Constraint c{pair_name("wand", e), {{xij, w}, {xi, -side}, {xj, -side}}, Sense::LessEqual,
                 (1.0 - w) / 2.0};
    std::erase_if(c.terms, [](const Term& t) { return t.coef == 0.0; });
    model.add_constraint(std::move(c));
    if (w > 0.0 && w <= 1.0 / 3.0) {
      model.add_constraint({pair_name("wand_i", e), {{xij, 1.0}, {xi, -1.0}}, Sense::LessEqual, 0.0});
      model.add_constraint({pair_name("wand_j", e), {{xij, 1.0}, {xj, -1.0}}, Sense::LessEqual, 0.0});
    }
  }
  return model;
}

IlpModel build_multicolour(const SignedGraph& g, int k) {
  require_signed(g, "multi-colour");
  if (k < 1) throw std::invalid_argument("colour count must be at least 1");
  IlpModel model;
  model.kind = ModelKind::Multicolour;
  model.colours = k;
  model.integral_objective = true;
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    Constraint one{"assign_" + std::to_string(i), {}, Sense::Equal, 1.0};
    for (int c = 0; c < k; ++c) {
      const VarId v = model.add_variable("x_" + std::to_string(i) + "_c" + std::to_string(c), 0.0,
                                         1.0, true);
      model.node_vars.push_back(v);
      one.terms.push_back({v, 1.0});
    }
    model.add_constraint(std::move(one));
  }
  for (const Edge& e : g.edges()) {
    const VarId f = model.add_variable(pair_name("f", e), 0.0, 1.0, false, 1.0);
    model.edge_frustration.push_back(LinearExpr{{{f, 1.0}}, 0.0});
    for (int c = 0; c < k; ++c) {
      const VarId xi = model.node_var(e.u, c);
      const VarId xj = model.node_var(e.v, c);
      const std::string name = pair_name("mc", e) + "_c" + std::to_string(c);
      if (e.sign() > 0) {
        model.add_constraint({name, {{f, 1.0}, {xi, -1.0}, {xj, 1.0}}, Sense::GreaterEqual, 0.0});
      } else {
        model.add_constraint({name, {{f, 1.0}, {xi, -1.0}, {xj, -1.0}}, Sense::GreaterEqual, -1.0});
      }
    }
  }
  return model;
}

IlpModel build_model(const SignedGraph& g, ModelKind kind, int k) {
  switch (kind) {
    case ModelKind::And:
      return build_and(g);
    case ModelKind::Xor:
      return build_xor(g);
    case ModelKind::Abs:
      return build_abs(g);
    case ModelKind::Weighted:
      return build_weighted(g);
    case ModelKind::Multicolour:
      return build_multicolour(g, k);
    case ModelKind::Generic:
      break;
  }
  throw std::invalid_argument("cannot build a generic model from a graph");
}

void add_fix_colour(IlpModel& model, const SignedGraph& g) {
  if (g.num_nodes() == 0) throw std::invalid_argument("cannot fix a colour in an empty graph");
  const NodeId k = g.max_degree_node();
  Variable& v = model.variables[model.node_var(k, 0)];
  v.lower = v.upper = 1.0;
  model.fixed_node = k;
}

std::string to_string(CutMode mode) {
  switch (mode) {
    case CutMode::Off:
      return "off";
    case CutMode::Lazy:
      return "lazy";
    case CutMode::Upfront:
      return "upfront";
  }
  return "off";
}

CutMode parse_cut_mode(const std::string& name) {
  if (name == "off") return CutMode::Off;
  if (name == "lazy") return CutMode::Lazy;
  if (name == "upfront") return CutMode::Upfront;
  throw std::invalid_argument("unknown cut mode '" + name + "' (expected lazy|upfront|off)");
}

int add_triangle_cuts(IlpModel& model, const SignedGraph& g, CutMode mode) {
  if (mode == CutMode::Off) return 0;
  if (model.kind == ModelKind::Weighted || g.weighted()) {
    throw std::domain_error("triangle cuts are only valid for +-1 signs");
  }
  if (model.kind == ModelKind::Multicolour) {
    throw std::domain_error("triangle cuts are only valid for two-colour models");
  }
  int count = 0;
  for (const Triangle& t : unbalanced_triangles(g)) {
    LinearExpr sum;
    for (auto [a, b] : {std::pair{t.i, t.j}, std::pair{t.i, t.k}, std::pair{t.j, t.k}}) {
      sum.add(model.edge_frustration[*g.find_edge(a, b)]);
    }
    Constraint cut{"tri_" + std::to_string(t.i) + "_" + std::to_string(t.j) + "_" + std::to_string(t.k),
                   sum.terms, Sense::GreaterEqual, 1.0 - sum.constant};
    if (mode == CutMode::Lazy) {
      model.cut_pool.push_back(std::move(cut));
    } else {
      model.add_constraint(std::move(cut));
    }
    ++count;
  }
  return count;
}

void set_branch_priorities(IlpModel& model, const SignedGraph& g) {
  for (Variable& v : model.variables) v.priority = 0;
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    for (int c = 0; c < (model.kind == ModelKind::Multicolour ? model.colours : 1); ++c) {
      model.variables[model.node_var(i, c)].priority = g.degree(i);
    }
  }
}

}  // namespace frustration
