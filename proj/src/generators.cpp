#include "frustration/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace frustration {
namespace {

// Explicit draws instead of <random> distributions, whose output differs
// between standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
  }
}

long max_edges(int n) { return static_cast<long>(n) * (n - 1) / 2; }

std::vector<Edge> erdos_renyi(const GenSpec& spec, std::mt19937_64& rng) {
  const int n = spec.nodes;
  std::vector<Edge> edges;
  if (spec.density) {
    const double rho = *spec.density;
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        if (uniform01(rng) < rho) edges.push_back({i, j, 1.0});
      }
    }
    return edges;
  }
  // Floyd's algorithm: m distinct pair indices out of n(n-1)/2.
  const long total = max_edges(n);
  const long m = *spec.edges;
  std::unordered_set<long> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  for (long j = total - m; j < total; ++j) {
    const long t = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<long> picked(chosen.begin(), chosen.end());
  std::sort(picked.begin(), picked.end());
  long index = 0;
  std::size_t next = 0;
  for (NodeId i = 0; i < n && next < picked.size(); ++i) {
    for (NodeId j = i + 1; j < n && next < picked.size(); ++j, ++index) {
      if (picked[next] == index) {
        edges.push_back({i, j, 1.0});
        ++next;
      }
    }
  }
  return edges;
}

std::vector<Edge> barabasi_albert(const std::vector<int>& schedule, int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<long> degree(n, 0);
  std::vector<char> taken(n, 0);
  for (NodeId t = 1; t < n; ++t) {
    const int want = schedule[t];
    std::vector<NodeId> targets;
    if (want == t) {
      for (NodeId s = 0; s < t; ++s) targets.push_back(s);
    } else {
      for (int draw = 0; draw < want; ++draw) {
        long total = 0;
        for (NodeId s = 0; s < t; ++s) total += taken[s] ? 0 : degree[s];
        NodeId pick = -1;
        if (total > 0) {
          long r = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(total)));
          for (NodeId s = 0; s < t; ++s) {
            if (taken[s]) continue;
            if (r < degree[s]) {
              pick = s;
              break;
            }
            r -= degree[s];
          }
        } else {
          // Only zero-degree candidates remain: uniform among them.
          std::vector<NodeId> free;
          for (NodeId s = 0; s < t; ++s) {
            if (!taken[s]) free.push_back(s);
          }
          pick = free[uniform_below(rng, free.size())];
        }
        taken[pick] = 1;
        targets.push_back(pick);
      }
    }
    for (NodeId s : targets) {
      taken[s] = 0;
      ++degree[s];
      ++degree[t];
      edges.push_back({s, t, 1.0});
    }
  }
  return edges;
}

}  // namespace

std::vector<int> ba_attachment_schedule(int nodes, long edges) {
  if (nodes < 1) throw std::invalid_argument("BA graph needs at least one node");
  if (edges < 0 || edges > max_edges(nodes)) {
    throw std::invalid_argument("BA edge target outside 0..n(n-1)/2");
  }
  std::vector<int> schedule(nodes, 0);
  if (nodes == 1) return schedule;
  const long base = edges / (nodes - 1);
  long remaining = edges;
  for (int t = 1; t < nodes; ++t) {
    schedule[t] = static_cast<int>(std::min<long>(t, base));
    remaining -= schedule[t];
  }
  // Leftover edges go one per step to the earliest steps with spare capacity.
  while (remaining > 0) {
    for (int t = 1; t < nodes && remaining > 0; ++t) {
      if (schedule[t] < t) {
        ++schedule[t];
        --remaining;
      }
    }
  }
  return schedule;
}

SignedGraph generate(const GenSpec& spec) {
  const int n = spec.nodes;
  if (n < 0) throw std::invalid_argument("node count must be non-negative");
  if (!(spec.negative_fraction >= 0.0 && spec.negative_fraction <= 1.0)) {
    throw std::invalid_argument("negative fraction must lie in [0,1]");
  }
  std::mt19937_64 topology(spec.seed);
  std::vector<Edge> edges;
  if (spec.model == GraphModel::ErdosRenyi) {
    if (spec.density.has_value() == spec.edges.has_value()) {
      throw std::invalid_argument("Erdos-Renyi needs exactly one of density or edge count");
    }
    if (spec.density && !(*spec.density >= 0.0 && *spec.density <= 1.0)) {
      throw std::invalid_argument("density must lie in [0,1]");
    }
    if (spec.edges && (*spec.edges < 0 || *spec.edges > max_edges(n))) {
      throw std::invalid_argument("edge count outside 0..n(n-1)/2");
    }
    edges = erdos_renyi(spec, topology);
  } else {
    std::vector<int> schedule;
    if (spec.attachment) {
      if (spec.edges) throw std::invalid_argument("BA takes either an edge target or attachment");
      if (*spec.attachment < 1 || *spec.attachment >= n) {
        throw std::invalid_argument("BA attachment must lie in 1..n-1");
      }
      schedule.assign(n, 0);
      for (int t = 1; t < n; ++t) schedule[t] = std::min(t, *spec.attachment);
    } else if (spec.edges) {
      schedule = ba_attachment_schedule(n, *spec.edges);
    } else if (spec.density) {
      if (!(*spec.density >= 0.0 && *spec.density <= 1.0)) {
        throw std::invalid_argument("density must lie in [0,1]");
      }
      schedule = ba_attachment_schedule(n, std::lround(*spec.density * max_edges(n)));
    } else {
      throw std::invalid_argument("BA needs an edge target, density or attachment");
    }
    edges = barabasi_albert(schedule, n, topology);
  }

  // Signs (and weights) come from an independent stream so the topology does
  // not depend on the negative fraction.
  std::mt19937_64 signs(splitmix64(spec.seed ^ 0x5157a7e5u));
  std::vector<std::size_t> order(edges.size());
  for (std::size_t e = 0; e < order.size(); ++e) order[e] = e;
  shuffle(order, signs);
  const auto negatives =
      static_cast<std::size_t>(std::llround(spec.negative_fraction * static_cast<double>(edges.size())));
  for (std::size_t p = 0; p < negatives; ++p) edges[order[p]].weight = -1.0;
  if (spec.weighted) {
    for (Edge& e : edges) e.weight *= 1.0 - uniform01(signs);  // magnitude in (0,1]
  }
  return SignedGraph(n, std::move(edges), spec.weighted);
}

std::string to_string(GraphModel model) {
  return model == GraphModel::ErdosRenyi ? "er" : "ba";
}

GraphModel parse_graph_model(const std::string& name) {
  if (name == "er") return GraphModel::ErdosRenyi;
  if (name == "ba") return GraphModel::BarabasiAlbert;
  throw std::invalid_argument("unknown graph model '" + name + "' (expected er or ba)");
}

}  // namespace frustration
