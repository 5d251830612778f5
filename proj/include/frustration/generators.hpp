#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "frustration/signed_graph.hpp"

namespace frustration {

enum class GraphModel { ErdosRenyi, BarabasiAlbert };

/// Parameters of a random signed graph.
///
/// Erdos-Renyi takes either `density` (independent Bernoulli per pair) or an
/// exact `edges` count (uniform sample of pairs). Barabasi-Albert takes either
/// an exact `edges` target or a per-step `attachment` count.
struct GenSpec {
  GraphModel model = GraphModel::ErdosRenyi;
  int nodes = 0;
  std::optional<double> density;
  std::optional<long> edges;
  std::optional<int> attachment;
  double negative_fraction = 0.0;
  std::uint64_t seed = 0;
  /// Weights drawn uniformly with magnitude in (0, 1]; signs as usual.
  bool weighted = false;
};

/// Throws std::invalid_argument for infeasible specs.
SignedGraph generate(const GenSpec& spec);

/// Attachment counts per arriving node for a BA graph with exactly `edges`
/// edges: entry t (t = 1..n-1) is the number of edges node t draws to nodes
/// 0..t-1. Exposed for testing.
std::vector<int> ba_attachment_schedule(int nodes, long edges);

std::string to_string(GraphModel model);
GraphModel parse_graph_model(const std::string& name);

}  // namespace frustration
