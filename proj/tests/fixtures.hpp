#pragma once

#include <cstdint>
#include <vector>

#include "frustration/generators.hpp"
#include "frustration/signed_graph.hpp"

namespace fixtures {

using frustration::Edge;
using frustration::SignedGraph;

// Four-node example with one frustrated edge at best; colourings
// {0,0,0,1} and {0,0,1,1} frustrate two and one edges.
inline SignedGraph small_example() {
  return SignedGraph(4, {{0, 2, -1}, {0, 3, -1}, {1, 2, 1}, {1, 3, -1}, {2, 3, 1}});
}

// Four nodes, one positive and four negative edges: one colour leaves four
// edges frustrated, two colours one, three colours none.
inline SignedGraph colour_example() {
  return SignedGraph(4, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}, {0, 3, -1}, {2, 3, -1}});
}

inline SignedGraph complete(int n, double sign) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, sign});
  }
  return SignedGraph(n, std::move(edges));
}

inline SignedGraph triangle(double a, double b, double c) {
  return SignedGraph(3, {{0, 1, a}, {0, 2, b}, {1, 2, c}});
}

inline SignedGraph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1});
  return SignedGraph(leaves + 1, std::move(edges));
}

// Random ER graph with n in [lo, hi], density in (0, 1] and a negative
// fraction in [0, 1], all derived from the seed.
inline SignedGraph random_graph(std::uint64_t seed, int lo, int hi, bool weighted = false) {
  std::uint64_t s = seed * 0x9E3779B97F4A7C15ULL + 12345;
  auto next = [&s] {
    s ^= s >> 33;
    s *= 0xff51afd7ed558ccdULL;
    s ^= s >> 33;
    return s;
  };
  frustration::GenSpec spec;
  spec.nodes = lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  spec.density = 0.05 + 0.95 * static_cast<double>(next() % 1000 + 1) / 1000.0;
  spec.negative_fraction = static_cast<double>(next() % 1001) / 1000.0;
  spec.seed = seed;
  spec.weighted = weighted;
  return frustration::generate(spec);
}

}  // namespace fixtures
