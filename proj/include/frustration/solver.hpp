#pragma once

#include "frustration/bnb.hpp"
#include "frustration/formulation.hpp"
#include "frustration/signed_graph.hpp"

namespace frustration {

/// End-to-end settings: which model to build, which speed-ups to apply, and
/// the search limits.
struct SolverOptions {
  ModelKind model = ModelKind::Xor;
  int colours = 2;  // multi-colour model only
  bool fix_colour = true;
  CutMode cuts = CutMode::Lazy;
  bool priorities = true;
  /// Strip degree <= 1 nodes and solve each biconnected block separately.
  /// Ignored by the multi-colour model.
  bool preprocess = true;
  BnbOptions bnb;
};

/// Builds the requested model with its speed-ups for g.
IlpModel build_configured_model(const SignedGraph& g, const SolverOptions& options);

/// Computes the minimum frustration of g under the chosen model. With
/// preprocessing, per-block reports are summed (nodes, variables, bounds) and
/// the branching factor is recomputed from the totals; the incumbent is a
/// colouring of the whole graph.
///
/// Throws std::domain_error when cuts are requested for a model that cannot
/// take them (weighted, multi-colour).
SolveReport compute_frustration(const SignedGraph& g, const SolverOptions& options);

}  // namespace frustration
