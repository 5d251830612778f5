#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace frustration {

using NodeId = int;
using EdgeId = int;

/// An undirected edge with u < v. For signed graphs the weight is exactly
/// +1 or -1; weighted graphs carry any real in [-1, 1].
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  int sign() const { return weight < 0.0 ? -1 : 1; }
  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  NodeId node;
  EdgeId edge;
};

/// Simple undirected signed (or weighted) graph over dense ids 0..n-1.
///
/// Construction validates the input: endpoints in range, no self-loops and no
/// duplicate unordered pairs. Edges are normalised so that u < v and stored in
/// lexicographic (u, v) order; an edge's id is its position in that order.
/// The object is immutable afterwards.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Throws std::invalid_argument on any invariant violation. When `weighted`
  /// is false every weight must be exactly +1 or -1.
  SignedGraph(int n, std::vector<Edge> edges, bool weighted = false);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_positive() const { return num_edges() - num_negative_; }
  int num_negative() const { return num_negative_; }
  bool weighted() const { return weighted_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Neighbor> neighbors(NodeId i) const { return adjacency_[i]; }

  int degree(NodeId i) const;
  /// Highest-degree node, ties broken by the smallest id. Requires n >= 1.
  NodeId max_degree_node() const;

  std::optional<EdgeId> find_edge(NodeId i, NodeId j) const;

  /// Subgraph induced by `nodes` (original ids), renumbered in the given
  /// order.
  SignedGraph induced_subgraph(std::span<const NodeId> nodes) const;

 private:
  static std::uint64_t key(NodeId i, NodeId j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
  }

  int n_ = 0;
  int num_negative_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Per-node colour assignment. Two colours (0/1) unless stated otherwise.
struct Colouring {
  int colours = 2;
  std::vector<int> assignment;

  Colouring() = default;
  explicit Colouring(std::vector<int> values, int k = 2)
      : colours(k), assignment(std::move(values)) {}

  int size() const { return static_cast<int>(assignment.size()); }
  int operator[](NodeId i) const { return assignment[i]; }
  bool operator==(const Colouring&) const = default;
};

struct FrustrationSummary {
  int count = 0;
  std::vector<bool> frustrated;  // per edge id
};

/// Frustration state of one edge under the given colours of its endpoints.
inline bool is_frustrated(int sign, int colour_u, int colour_v) {
  return sign > 0 ? colour_u != colour_v : colour_u == colour_v;
}

/// Cost of a weighted edge: (1-w)/2 when the endpoints agree, (1+w)/2 when
/// they differ. Reduces to the 0/1 frustration state for w = +-1.
inline double weighted_edge_cost(double w, bool same_colour) {
  return same_colour ? (1.0 - w) / 2.0 : (1.0 + w) / 2.0;
}

/// Counts frustrated edges. Works for any number of colours; the graph must
/// be unweighted.
FrustrationSummary frustration_count(const SignedGraph& g, const Colouring& x);

/// Sum of weighted edge costs; equals frustration_count for +-1 weights.
double weighted_frustration(const SignedGraph& g, const Colouring& x);

/// 2m / (n(n-1)). Throws std::invalid_argument for n < 2.
double density(const SignedGraph& g);

struct Triangle {
  NodeId i, j, k;  // i < j < k
  bool operator==(const Triangle&) const = default;
};

/// All triangles with edge-sign product -1, each once, in lexicographic order.
std::vector<Triangle> unbalanced_triangles(const SignedGraph& g);

struct BalanceResult {
  bool balanced = false;
  /// Zero-frustration colouring when balanced.
  Colouring witness;
  /// Closed node sequence (first node not repeated) of a cycle with an odd
  /// number of negative edges when unbalanced.
  std::vector<NodeId> negative_cycle;
};

/// Parity-labelled BFS per component, roots visited in increasing id order.
BalanceResult is_balanced(const SignedGraph& g);

}  // namespace frustration
