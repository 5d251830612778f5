#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frustration/ilp_model.hpp"
#include "frustration/lp.hpp"
#include "frustration/signed_graph.hpp"

namespace frustration {

struct BnbOptions {
  /// Stop once (UB - LB) / max(1, UB) <= gap.
  double gap = 0.0;
  double time_limit = std::numeric_limits<double>::infinity();  // seconds
  long node_limit = 0;                                          // 0 = none
  double integrality_tol = 1e-6;
  double cut_violation_tol = 1e-6;
  /// Run the rounding + descent heuristic at every node (root only if false).
  bool heuristic_every_node = true;
  LpOptions lp;
};

enum class SolveStatus { Optimal, WithinGap, Bounded };
std::string to_string(SolveStatus status);

struct TracePoint {
  double seconds;
  double lower;
  double upper;
};

struct SolveReport {
  SolveStatus status = SolveStatus::Optimal;
  double optimum = 0.0;      // best objective found (the incumbent's value)
  double lower_bound = 0.0;  // proven bound; equals optimum when Optimal
  Colouring incumbent;
  double root_objective = 0.0;
  long nodes = 0;
  long variables = 0;
  double branching_factor = 1.0;
  double seconds = 0.0;
  long cut_rounds = 0;
  long cuts_added = 0;
  long lp_iterations = 0;
  std::vector<TracePoint> trace;
};

/// b^(1/v); 1 when v == 0. Throws std::invalid_argument for b < 1 or v < 0.
double effective_branching_factor(long nodes, long variables);

struct Incumbent {
  double objective;
  Colouring colouring;
};

/// Maps an LP point to a feasible colouring and its objective value.
using IncumbentHeuristic = std::function<std::optional<Incumbent>(const std::vector<double>&)>;
/// Maps an integral LP point to the colouring it encodes.
using SolutionDecoder = std::function<Colouring(const std::vector<double>&)>;

/// Fractional integer variable to branch on: highest priority, then closest
/// to 0.5, then smallest index. nullopt when the point is integral.
std::optional<VarId> branch_select(const IlpModel& model, std::span<const double> values,
                                   double integrality_tol = 1e-6);

/// Rounds x_i >= 0.5 to colour 1 and then applies single-node flips while any
/// flip strictly lowers the (weighted) frustration.
Colouring incumbent_heuristic(const SignedGraph& g, std::span<const double> node_values);

/// Multi-colour analogue: each node takes the colour with the largest LP
/// value, then single-node recolourings are applied while they strictly help.
Colouring incumbent_heuristic_multicolour(const SignedGraph& g, int colours,
                                          std::span<const double> node_colour_values);

/// Strictly improving single-node moves until none is left.
void local_descent(const SignedGraph& g, Colouring& x);

/// Indices of pool cuts not yet active whose violation by `values` is at
/// least `tol`.
std::vector<int> separation_round(std::span<const Constraint> pool, std::span<const char> active,
                                  const std::vector<double>& values, double tol = 1e-6);

/// Reads the colouring encoded by a (near-)integral point of a graph model.
Colouring decode_colouring(const IlpModel& model, const std::vector<double>& values);

/// LP-based branch and bound on any IlpModel. Incumbents come from integral
/// node solutions and, when given, from the heuristic.
SolveReport branch_and_bound(const IlpModel& model, const BnbOptions& options,
                             IncumbentHeuristic heuristic = {}, SolutionDecoder decoder = {});

/// Branch and bound on a model built from g, with the graph heuristics wired
/// in. The report's optimum equals the frustration of its incumbent.
SolveReport solve(const IlpModel& model, const SignedGraph& g, const BnbOptions& options);

}  // namespace frustration
