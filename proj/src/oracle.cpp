#include "frustration/oracle.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace frustration {

namespace {

void check_nodes(const SignedGraph& g, int max_nodes) {
  if (g.num_nodes() > max_nodes) {
    throw OracleCapError("oracle refuses n = " + std::to_string(g.num_nodes()) + " (cap " +
                         std::to_string(max_nodes) + ")");
  }
}

// Node j >= 1 lives in bit n-1-j, so comparing masks numerically compares
// colourings lexicographically.
Colouring mask_to_colouring(int n, std::uint64_t mask) {
  std::vector<int> colour(n, 0);
  for (int j = 1; j < n; ++j) colour[j] = static_cast<int>((mask >> (n - 1 - j)) & 1U);
  return Colouring(std::move(colour));
}

// Gray-code walk over colourings of nodes 1..n-1. `visit(node, colour)` is
// called after each single flip and must return the running cost.
template <typename Cost, typename Flip>
std::pair<Cost, std::uint64_t> gray_walk(int n, Cost start, Flip flip, double tie_tol) {
  Cost best = start;
  std::uint64_t best_mask = 0;
  std::uint64_t mask = 0;
  const std::uint64_t steps = n <= 1 ? 1 : (std::uint64_t{1} << (n - 1));
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int bit = std::countr_zero(i);
    mask ^= std::uint64_t{1} << bit;
    const Cost cost = flip(n - 1 - bit);
    if (cost < best - tie_tol) {
      best = cost;
      best_mask = mask;
    } else if (cost <= best + tie_tol && mask < best_mask) {
      best_mask = mask;
    }
  }
  return {best, best_mask};
}

}  // namespace

OracleResult brute_force_L(const SignedGraph& g, int max_nodes) {
  if (g.weighted()) throw std::invalid_argument("brute_force_L needs an unweighted graph");
  check_nodes(g, max_nodes);
  const int n = g.num_nodes();
  std::vector<int> colour(n, 0);
  int cost = g.num_negative();  // all nodes share colour 0
  auto flip = [&](NodeId v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const int sign = g.edge(nb.edge).sign();
      cost -= is_frustrated(sign, colour[v], colour[nb.node]);
      cost += is_frustrated(sign, 1 - colour[v], colour[nb.node]);
    }
    colour[v] = 1 - colour[v];
    return cost;
  };
  const auto [best, mask] = gray_walk(n, cost, flip, 0.0);
  return {best, mask_to_colouring(n, mask)};
}

WeightedOracleResult brute_force_weighted(const SignedGraph& g, int max_nodes) {
  check_nodes(g, max_nodes);
  const int n = g.num_nodes();
  std::vector<int> colour(n, 0);
  double cost = weighted_frustration(g, Colouring(colour));
  auto flip = [&](NodeId v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const double w = g.edge(nb.edge).weight;
      cost += weighted_edge_cost(w, colour[v] != colour[nb.node]) -
              weighted_edge_cost(w, colour[v] == colour[nb.node]);
    }
    colour[v] = 1 - colour[v];
    return cost;
  };
  const auto [best, mask] = gray_walk(n, cost, flip, 1e-9);
  WeightedOracleResult result;
  result.colouring = mask_to_colouring(n, mask);
  // Recompute from scratch to shed rounding drift of the running sum.
  result.value = weighted_frustration(g, result.colouring);
  (void)best;
  return result;
}

int brute_force_multicolour(const SignedGraph& g, int k, std::int64_t max_colourings) {
  if (k < 1) throw std::invalid_argument("need at least one colour");
  if (g.weighted()) throw std::invalid_argument("brute_force_multicolour needs an unweighted graph");
  const int n = g.num_nodes();
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > max_colourings / k) {
      throw OracleCapError(std::to_string(k) + "^" + std::to_string(n) +
                           " colourings exceed the cap of " + std::to_string(max_colourings));
    }
    total *= k;
  }
  if (total > max_colourings) throw OracleCapError("colouring count exceeds the cap");

  std::vector<int> colour(n, 0);
  int cost = g.num_negative();
  int best = cost;
  auto recolour = [&](NodeId v, int to) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const int sign = g.edge(nb.edge).sign();
      cost += is_frustrated(sign, to, colour[nb.node]) - is_frustrated(sign, colour[v], colour[nb.node]);
    }
    colour[v] = to;
  };
  // Odometer over colour vectors; amortised O(1) digit changes per step.
  for (std::int64_t step = 1; step < total; ++step) {
    int digit = 0;
    while (colour[digit] == k - 1) {
      recolour(digit, 0);
      ++digit;
    }
    recolour(digit, colour[digit] + 1);
    best = std::min(best, cost);
  }
  return best;
}

}  // namespace frustration
