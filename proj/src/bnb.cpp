#include "frustration/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace frustration {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::WithinGap:
      return "gap";
    case SolveStatus::Bounded:
      return "bounded";
  }
  return "bounded";
}

double effective_branching_factor(long nodes, long variables) {
  if (nodes < 1) throw std::invalid_argument("node count must be at least 1");
  if (variables < 0) throw std::invalid_argument("variable count must be non-negative");
  if (variables == 0 || nodes == 1) return 1.0;
  return std::pow(static_cast<double>(nodes), 1.0 / static_cast<double>(variables));
}

std::optional<VarId> branch_select(const IlpModel& model, std::span<const double> values,
                                   double integrality_tol) {
  std::optional<VarId> best;
  int best_priority = 0;
  double best_distance = 0.0;  // distance from the nearest integer
  for (VarId v = 0; v < model.num_vars(); ++v) {
    const Variable& var = model.variables[v];
    if (!var.integer) continue;
    const double distance = std::fabs(values[v] - std::round(values[v]));
    if (distance <= integrality_tol) continue;
    if (!best || var.priority > best_priority ||
        (var.priority == best_priority && distance > best_distance + 1e-12)) {
      best = v;
      best_priority = var.priority;
      best_distance = distance;
    }
  }
  return best;
}

namespace {

// Cost change of giving node v colour `to` under colouring x.
double move_delta(const SignedGraph& g, const Colouring& x, NodeId v, int to) {
  double delta = 0.0;
  for (const Neighbor& nb : g.neighbors(v)) {
    const double w = g.edge(nb.edge).weight;
    delta += weighted_edge_cost(w, to == x[nb.node]) - weighted_edge_cost(w, x[v] == x[nb.node]);
  }
  return delta;
}

}  // namespace

void local_descent(const SignedGraph& g, Colouring& x) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      int best_colour = x[v];
      double best_delta = -1e-9;
      for (int c = 0; c < x.colours; ++c) {
        if (c == x[v]) continue;
        const double delta = move_delta(g, x, v, c);
        if (delta < best_delta) {
          best_delta = delta;
          best_colour = c;
        }
      }
      if (best_colour != x[v]) {
        x.assignment[v] = best_colour;
        improved = true;
      }
    }
  }
}

Colouring incumbent_heuristic(const SignedGraph& g, std::span<const double> node_values) {
  if (static_cast<int>(node_values.size()) != g.num_nodes()) {
    throw std::invalid_argument("one LP value per node required");
  }
  std::vector<int> colour(g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) colour[i] = node_values[i] >= 0.5 ? 1 : 0;
  Colouring x(std::move(colour));
  local_descent(g, x);
  return x;
}

Colouring incumbent_heuristic_multicolour(const SignedGraph& g, int colours,
                                          std::span<const double> node_colour_values) {
  if (static_cast<int>(node_colour_values.size()) != g.num_nodes() * colours) {
    throw std::invalid_argument("one LP value per node and colour required");
  }
  std::vector<int> colour(g.num_nodes(), 0);
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    for (int c = 1; c < colours; ++c) {
      if (node_colour_values[i * colours + c] > node_colour_values[i * colours + colour[i]] + 1e-9) {
        colour[i] = c;
      }
    }
  }
  Colouring x(std::move(colour), colours);
  local_descent(g, x);
  return x;
}

std::vector<int> separation_round(std::span<const Constraint> pool, std::span<const char> active,
                                  const std::vector<double>& values, double tol) {
  std::vector<int> violated;
  for (std::size_t c = 0; c < pool.size(); ++c) {
    if (!active.empty() && active[c]) continue;
    if (pool[c].violation(values) >= tol) violated.push_back(static_cast<int>(c));
  }
  return violated;
}

Colouring decode_colouring(const IlpModel& model, const std::vector<double>& values) {
  const int n = model.num_nodes();
  if (model.kind == ModelKind::Multicolour) {
    std::vector<double> slice(static_cast<std::size_t>(n) * model.colours);
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < model.colours; ++c) slice[i * model.colours + c] = values[model.node_var(i, c)];
    }
    std::vector<int> colour(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int c = 1; c < model.colours; ++c) {
        if (slice[i * model.colours + c] > slice[i * model.colours + colour[i]]) colour[i] = c;
      }
    }
    return Colouring(std::move(colour), model.colours);
  }
  std::vector<int> colour(n);
  for (int i = 0; i < n; ++i) colour[i] = values[model.node_var(i)] >= 0.5 ? 1 : 0;
  return Colouring(std::move(colour));
}

namespace {

struct Node {
  std::vector<BoundChange> changes;
  double bound;
  int depth;
  long id;
};

struct WorseNode {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

using Clock = std::chrono::steady_clock;

}  // namespace

SolveReport branch_and_bound(const IlpModel& model, const BnbOptions& options,
                             IncumbentHeuristic heuristic, SolutionDecoder decoder) {
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  SolveReport report;
  report.variables = model.num_vars();
  const double inf = std::numeric_limits<double>::infinity();
  const double eps = 1e-9;
  double upper = inf;
  double lower = -inf;
  bool have_incumbent = false;

  auto round_bound = [&](double b) {
    return model.integral_objective ? std::ceil(b - 1e-6) : b;
  };
  auto record = [&] { report.trace.push_back({elapsed(), lower, upper}); };
  auto offer = [&](double objective, Colouring colouring) {
    if (objective < upper - eps) {
      upper = objective;
      report.incumbent = std::move(colouring);
      have_incumbent = true;
      record();
    }
  };
  auto gap_closed = [&] {
    return upper < inf && (upper - lower) / std::max(1.0, std::fabs(upper)) <= options.gap + 1e-12;
  };

  LpSolver lp(model, options.lp);
  std::vector<char> pool_active(model.cut_pool.size(), 0);

  std::priority_queue<Node, std::vector<Node>, WorseNode> open;
  std::optional<Node> current = Node{{}, -inf, 0, 0};
  long next_id = 1;
  bool stopped = false;

  while (current || !open.empty()) {
    if (!current) {
      current = open.top();
      open.pop();
      if (round_bound(current->bound) >= upper - eps) {
        current.reset();
        continue;
      }
    }
    // Global bound: the node in hand or the best open node, whichever is lower.
    double frontier = current->bound;
    if (!open.empty()) frontier = std::min(frontier, open.top().bound);
    if (std::isfinite(frontier) && round_bound(frontier) > lower + eps) {
      lower = std::min(round_bound(frontier), upper);
      record();
    }
    if (gap_closed()) {
      stopped = upper > lower + eps;
      break;
    }
    // The root is always solved so a bounded report still has an incumbent.
    if (report.nodes > 0 && (elapsed() > options.time_limit ||
                             (options.node_limit > 0 && report.nodes >= options.node_limit))) {
      stopped = true;
      break;
    }

    Node node = std::move(*current);
    current.reset();
    lp.reset_bounds();
    for (const BoundChange& b : node.changes) lp.set_bounds(b.var, b.lower, b.upper);

    LpSolution sol;
    while (true) {
      sol = lp.solve();
      report.lp_iterations += sol.iterations;
      if (sol.status == LpStatus::IterationLimit) {
        throw std::runtime_error("LP iteration limit reached in branch and bound");
      }
      if (sol.status != LpStatus::Optimal || model.cut_pool.empty()) break;
      const auto violated =
          separation_round(model.cut_pool, pool_active, sol.values, options.cut_violation_tol);
      if (violated.empty()) break;
      for (int c : violated) {
        pool_active[c] = 1;
        lp.add_row(model.cut_pool[c]);
      }
      ++report.cut_rounds;
      report.cuts_added += static_cast<long>(violated.size());
    }
    ++report.nodes;
    if (sol.status == LpStatus::Infeasible) {
      if (node.id == 0) throw std::runtime_error("root LP relaxation is infeasible");
      continue;
    }
    if (node.id == 0) report.root_objective = sol.objective;

    const double node_bound = std::max(sol.objective, node.bound);
    if (heuristic && (options.heuristic_every_node || node.id == 0)) {
      if (auto found = heuristic(sol.values)) offer(found->objective, std::move(found->colouring));
    }
    if (round_bound(node_bound) >= upper - eps) continue;

    const auto branch_var = branch_select(model, sol.values, options.integrality_tol);
    if (!branch_var) {
      const double value = model.objective_value(sol.values);
      offer(value, decoder ? decoder(sol.values) : Colouring{});
      continue;
    }
    const VarId v = *branch_var;
    const double value = sol.values[v];
    Node up{node.changes, node_bound, node.depth + 1, next_id++};
    up.changes.push_back({v, std::ceil(value), lp.upper(v)});
    Node down{std::move(node.changes), node_bound, node.depth + 1, next_id++};
    down.changes.push_back({v, lp.lower(v), std::floor(value)});
    open.push(std::move(down));
    current = std::move(up);  // plunge into the x = 1 side
  }

  if (!stopped) {
    // Search exhausted: the incumbent is optimal.
    if (!have_incumbent) throw std::runtime_error("branch and bound finished without a solution");
    if (lower < upper) {
      lower = upper;
      record();
    }
  }
  report.optimum = upper;
  // LP round-off on an integral objective: 7.999999999999999 is 8.
  if (model.integral_objective && std::isfinite(upper) && std::fabs(upper - std::round(upper)) < 1e-6) {
    report.optimum = std::round(upper);
  }
  report.lower_bound = std::min(lower, upper);
  report.status = !stopped ? SolveStatus::Optimal
                  : (gap_closed() && upper <= lower + eps) ? SolveStatus::Optimal
                  : gap_closed()                          ? SolveStatus::WithinGap
                                                          : SolveStatus::Bounded;
  report.seconds = elapsed();
  report.branching_factor = effective_branching_factor(std::max(1L, report.nodes), report.variables);
  return report;
}

SolveReport solve(const IlpModel& model, const SignedGraph& g, const BnbOptions& options) {
  const bool multicolour = model.kind == ModelKind::Multicolour;
  std::vector<double> scratch;
  IncumbentHeuristic heuristic = [&](const std::vector<double>& values) -> std::optional<Incumbent> {
    const int per_node = multicolour ? model.colours : 1;
    scratch.resize(static_cast<std::size_t>(g.num_nodes()) * per_node);
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
      for (int c = 0; c < per_node; ++c) scratch[i * per_node + c] = values[model.node_var(i, c)];
    }
    Colouring x = multicolour ? incumbent_heuristic_multicolour(g, model.colours, scratch)
                              : incumbent_heuristic(g, scratch);
    const double cost = weighted_frustration(g, x);
    return Incumbent{cost, std::move(x)};
  };
  SolutionDecoder decoder = [&](const std::vector<double>& values) {
    return decode_colouring(model, values);
  };
  SolveReport report = branch_and_bound(model, options, heuristic, decoder);
  // Frustration is never negative, so 0 is a valid bound before the first LP.
  for (TracePoint& p : report.trace) p.lower = std::max(p.lower, 0.0);
  report.lower_bound = std::max(report.lower_bound, 0.0);
  // Report the exact frustration of the incumbent rather than an LP value.
  if (report.incumbent.size() == g.num_nodes()) {
    const double exact = weighted_frustration(g, report.incumbent);
    if (model.integral_objective) {
      report.optimum = std::round(exact);
    } else {
      report.optimum = exact;
    }
  }
  return report;
}

}  // namespace frustration
