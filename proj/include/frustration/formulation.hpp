#pragma once

#include "frustration/ilp_model.hpp"
#include "frustration/signed_graph.hpp"

namespace frustration {

/// AND linearisation: node colours x_i binary, x_ij = x_i AND x_j continuous
/// in [0,1]. n+m variables, 2m+ + m- constraints, objective constant m-.
IlpModel build_and(const SignedGraph& g);

/// XOR model: one continuous f_ij in [0,1] per edge bounded below by two XOR
/// inequalities. n+m variables, 2m constraints.
IlpModel build_xor(const SignedGraph& g);

/// ABS model: binary e_ij, h_ij with x_i - x_j = e_ij - h_ij (positive) or
/// x_i + x_j - 1 = e_ij - h_ij (negative). n+2m variables, m equalities.
IlpModel build_abs(const SignedGraph& g);

/// Weighted AND model over weights in [-1,1], x_ij binary. Every edge gets
/// the consolidated constraint
///   w x_ij <= (3w - 1)(x_i + x_j)/4 + (1 - w)/2.
/// For 0 < w <= 1/3 that constraint alone admits x_ij = 1 with x_i != x_j or
/// x_i = x_j = 0, so those edges also get x_ij <= x_i and x_ij <= x_j.
IlpModel build_weighted(const SignedGraph& g);

/// k-colour model: x_ic binary with one colour per node, f_ij continuous in
/// [0,1]. Throws std::invalid_argument for k < 1.
IlpModel build_multicolour(const SignedGraph& g, int k);

/// Dispatches on kind; `k` is used by the multi-colour model only.
IlpModel build_model(const SignedGraph& g, ModelKind kind, int k = 2);

/// Fixes the colour of the highest-degree node (smallest id on ties):
/// x_k = 1, or x_{k,0} = 1 for the multi-colour model. Applied as a bound.
/// Throws std::invalid_argument for an empty graph.
void add_fix_colour(IlpModel& model, const SignedGraph& g);

enum class CutMode { Off, Lazy, Upfront };

std::string to_string(CutMode mode);
CutMode parse_cut_mode(const std::string& name);

/// One inequality sum of f over the three edges >= 1 per unbalanced triangle,
/// written in the model's own variables. Lazy cuts go to the cut pool.
/// Returns the number of cuts. Throws std::domain_error for weighted or
/// multi-colour models.
int add_triangle_cuts(IlpModel& model, const SignedGraph& g, CutMode mode);

/// Node variables get their node's degree as branching priority; all other
/// variables get 0.
void set_branch_priorities(IlpModel& model, const SignedGraph& g);

}  // namespace frustration
