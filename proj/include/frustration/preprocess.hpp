#pragma once

#include <vector>

#include "frustration/signed_graph.hpp"

namespace frustration {

/// A node removed by degree-0/1 stripping. `neighbor` is -1 for an isolated
/// node; otherwise the pendant edge went to `neighbor` with weight `weight`.
/// Ids refer to the original graph.
struct RemovedNode {
  NodeId node;
  NodeId neighbor;
  double weight;
};

struct StrippedGraph {
  SignedGraph graph;
  std::vector<NodeId> to_original;  // reduced id -> original id
  std::vector<RemovedNode> removed;  // in removal order
  /// Unavoidable cost of the removed pendant edges: zero for signed graphs,
  /// (1 - |w|)/2 per pendant edge for weighted ones.
  double removed_cost = 0.0;

  /// Extends a colouring of the reduced graph to the original one, choosing
  /// each removed node's colour so its pendant edge costs the minimum.
  Colouring extend(const Colouring& reduced, int original_nodes) const;
};

/// Iteratively removes isolated and pendant vertices until none remain.
StrippedGraph strip_degree_le_one(const SignedGraph& g);

/// A biconnected component (bridges included as two-node blocks).
struct Block {
  SignedGraph graph;
  std::vector<NodeId> to_original;
};

/// Biconnected components of g; isolated nodes belong to no block. Blocks
/// share only articulation points, and the frustration index of g is the sum
/// over blocks.
std::vector<Block> split_blocks(const SignedGraph& g);

/// Combines per-block colourings into one colouring of the n-node graph,
/// flipping whole blocks so shared articulation points agree. Nodes in no
/// block get colour 0.
Colouring merge_block_colourings(const std::vector<Block>& blocks,
                                 const std::vector<Colouring>& colourings, int n);

}  // namespace frustration
