#include "frustration/solver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "frustration/preprocess.hpp"

namespace frustration {

IlpModel build_configured_model(const SignedGraph& g, const SolverOptions& options) {
  IlpModel model = build_model(g, options.model, options.colours);
  if (options.fix_colour && g.num_nodes() > 0) add_fix_colour(model, g);
  if (options.cuts != CutMode::Off) add_triangle_cuts(model, g, options.cuts);
  if (options.priorities) set_branch_priorities(model, g);
  return model;
}

namespace {

using Clock = std::chrono::steady_clock;

SolveReport solve_whole(const SignedGraph& g, const SolverOptions& options, const BnbOptions& bnb) {
  if (g.num_nodes() == 0) {
    SolveReport empty;
    empty.nodes = 1;
    empty.incumbent = Colouring({}, options.model == ModelKind::Multicolour ? options.colours : 2);
    return empty;
  }
  return solve(build_configured_model(g, options), g, bnb);
}

}  // namespace

SolveReport compute_frustration(const SignedGraph& g, const SolverOptions& options) {
  const bool multicolour = options.model == ModelKind::Multicolour;
  if (options.cuts != CutMode::Off && (multicolour || options.model == ModelKind::Weighted)) {
    throw std::domain_error("triangle cuts apply to the two-colour signed models only");
  }
  if (!options.preprocess || multicolour) return solve_whole(g, options, options.bnb);

  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  const StrippedGraph stripped = strip_degree_le_one(g);
  const std::vector<Block> blocks = split_blocks(stripped.graph);

  // Trivial upper bound per block: everything in one colour.
  std::vector<double> trivial(blocks.size());
  double pending_upper = 0.0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    trivial[b] = weighted_frustration(blocks[b].graph, Colouring(std::vector<int>(blocks[b].graph.num_nodes(), 0)));
    pending_upper += trivial[b];
  }

  SolveReport total;
  total.root_objective = stripped.removed_cost;
  double done_value = stripped.removed_cost;  // optimum of finished blocks
  double done_lower = stripped.removed_cost;
  std::vector<Colouring> colourings;
  bool all_optimal = true;
  bool all_within_gap = true;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    pending_upper -= trivial[b];
    BnbOptions bnb = options.bnb;
    bnb.time_limit = std::max(0.0, options.bnb.time_limit - elapsed());
    const double offset = elapsed();
    SolveReport part = solve_whole(blocks[b].graph, options, bnb);
    for (const TracePoint& p : part.trace) {
      total.trace.push_back({offset + p.seconds, done_lower + std::max(0.0, p.lower),
                             done_value + std::min(p.upper, trivial[b]) + pending_upper});
    }
    done_value += part.optimum;
    done_lower += part.lower_bound;
    total.root_objective += part.root_objective;
    total.nodes += part.nodes;
    total.variables += part.variables;
    total.cut_rounds += part.cut_rounds;
    total.cuts_added += part.cuts_added;
    total.lp_iterations += part.lp_iterations;
    all_optimal = all_optimal && part.status == SolveStatus::Optimal;
    all_within_gap = all_within_gap && part.status != SolveStatus::Bounded;
    colourings.push_back(std::move(part.incumbent));
  }

  const Colouring merged = merge_block_colourings(blocks, colourings, stripped.graph.num_nodes());
  total.incumbent = stripped.extend(merged, g.num_nodes());
  total.optimum = g.weighted() || options.model == ModelKind::Weighted
                      ? weighted_frustration(g, total.incumbent)
                      : frustration_count(g, total.incumbent).count;
  total.lower_bound = std::min(done_lower, total.optimum);
  total.status = all_optimal ? SolveStatus::Optimal
                 : all_within_gap ? SolveStatus::WithinGap
                                  : SolveStatus::Bounded;
  if (total.status == SolveStatus::Optimal) total.lower_bound = total.optimum;
  total.nodes = std::max(1L, total.nodes);
  total.branching_factor = effective_branching_factor(total.nodes, total.variables);
  total.seconds = elapsed();
  if (total.trace.empty() || total.trace.back().lower != total.lower_bound ||
      total.trace.back().upper != total.optimum) {
    total.trace.push_back({total.seconds, total.lower_bound, total.optimum});
  }
  return total;
}

}  // namespace frustration
