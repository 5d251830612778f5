#pragma once

#include <cstdint>
#include <stdexcept>

#include "frustration/signed_graph.hpp"

namespace frustration {

/// Thrown when an enumeration would exceed its configured cap.
class OracleCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OracleResult {
  int count = 0;
  /// Lexicographically smallest optimal colouring; node 0 always has colour 0.
  Colouring colouring;
};

struct WeightedOracleResult {
  double value = 0.0;
  Colouring colouring;
};

/// Exact L(G) by Gray-code enumeration of the 2^(n-1) colourings with node 0
/// fixed to colour 0. Unweighted graphs only.
OracleResult brute_force_L(const SignedGraph& g, int max_nodes = 20);

/// Exact minimum frustration over all k^n colourings with k colours.
int brute_force_multicolour(const SignedGraph& g, int k, std::int64_t max_colourings = 531441);

/// Exact minimum of the weighted edge costs over all 2-colourings.
WeightedOracleResult brute_force_weighted(const SignedGraph& g, int max_nodes = 20);

}  // namespace frustration
